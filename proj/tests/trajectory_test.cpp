#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "axiomforge/distance/oracle.hpp"
#include "axiomforge/proposer/scripted.hpp"
#include "axiomforge/search/search.hpp"
#include "axiomforge/trajectory/trajectory.hpp"
#include "support/search_fixtures.hpp"

namespace af = axiomforge;
namespace at = axiomforge::trajectory;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("axiomforge-traj-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

at::TrajectoryStep step(std::uint64_t id, std::optional<std::uint64_t> parent = std::nullopt) {
  at::TrajectoryStep s;
  s.step_id = id;
  s.parent_id = parent;
  s.phase = "test";
  s.domain_text = "(define (domain d" + std::to_string(id) + "))";
  s.edit = "edit, with \"quotes\"";
  s.score = 1.5 * static_cast<double>(id);
  return s;
}

// Beam run of the flagship experiment written to `path`.
af::search::SearchResult beam_run(const std::string& path, std::uint64_t seed = 1) {
  auto ctx = fixtures::flagship_context();
  af::search::SearchConfig cfg;
  cfg.algorithm = af::search::Algorithm::Beam;
  cfg.target_length = 4;
  cfg.seed = seed;
  at::Recorder rec(path, af::search::make_header(cfg, ctx));
  ctx.recorder = &rec;
  af::proposer::ScriptedOracle oracle(af::proposer::builtin_script());
  af::distance::LevenshteinOracle lev;
  return af::search::beam_search(cfg, ctx, oracle, lev);
}

}  // namespace

TEST(Hash, Fnv1aReferenceValues) {
  // Published FNV-1a 64 test vectors.
  EXPECT_EQ(at::fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(at::fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(at::fnv1a64("foobar"), 0x85944171f73967e8ull);
  EXPECT_EQ(at::hash_hex("a"), "af63dc4c8601ec8c");
}

TEST(Uuid, ShapeAndUniqueness) {
  std::set<std::string> seen;
  for (int i = 0; i < 200; ++i) {
    auto u = at::random_uuid();
    ASSERT_EQ(u.size(), 36u);
    EXPECT_EQ(u[14], '4');
    EXPECT_NE(std::string("89ab").find(u[19]), std::string::npos);
    seen.insert(u);
  }
  EXPECT_EQ(seen.size(), 200u);
}

TEST(Recorder, HeaderOnlyRunIsOneLine) {
  TempDir dir;
  const auto path = dir.file("empty.jsonl");
  { at::Recorder rec(path, at::TrajectoryHeader{}); }
  EXPECT_EQ(count_lines(slurp(path)), 1u);
  auto runs = at::read_runs(path);
  ASSERT_EQ(runs.size(), 1u);
  EXPECT_TRUE(runs[0].steps.empty());
}

TEST(Recorder, RejectsOutOfOrderIds) {
  std::stringstream out;
  at::Recorder rec(out, at::TrajectoryHeader{});
  rec.record(step(0));
  rec.record(step(2, 0));
  EXPECT_THROW(rec.record(step(2, 0)), std::invalid_argument);
  EXPECT_THROW(rec.record(step(1, 0)), std::invalid_argument);
  EXPECT_THROW(rec.record(step(5, 5)), std::invalid_argument);
  EXPECT_EQ(rec.steps(), 2u);
}

TEST(Recorder, FlushesEveryStep) {
  TempDir dir;
  const auto path = dir.file("live.jsonl");
  at::Recorder rec(path, at::TrajectoryHeader{});
  rec.record(step(0));
  EXPECT_EQ(count_lines(slurp(path)), 2u);
  rec.record(step(1, 0));
  EXPECT_EQ(count_lines(slurp(path)), 3u);
}

TEST(Recorder, StepFieldsRoundTrip) {
  std::stringstream out;
  at::Recorder rec(out, at::TrajectoryHeader{});
  auto s = step(3);
  s.plan_length = 4;
  s.regression_ok = true;
  s.lev_distance = 17;
  s.oracle_round = 2;
  rec.record(s);
  auto runs = at::read_runs(out, "memory");
  const auto& j = runs.at(0).steps.at(0);
  EXPECT_EQ(j["domain_hash"], at::hash_hex(s.domain_text));
  EXPECT_EQ(j["plan_length"], 4);
  EXPECT_TRUE(j["parent_id"].is_null());
  EXPECT_EQ(j["lev_distance"], 17);
  EXPECT_DOUBLE_EQ(j["score"].get<double>(), 4.5);
  EXPECT_EQ(j["edit"], s.edit);
}

TEST(Recorder, InfiniteScoreIsNull) {
  std::stringstream out;
  at::Recorder rec(out, at::TrajectoryHeader{});
  auto s = step(0);
  s.score.reset();
  rec.record(s);
  EXPECT_TRUE(at::read_runs(out, "m").at(0).steps.at(0)["score"].is_null());
}

TEST(Recorder, UnwritablePathFails) {
  EXPECT_THROW(at::Recorder("/nonexistent-dir/x/run.jsonl", at::TrajectoryHeader{}), at::TrajectoryIOError);
}

TEST(Recording, BeamRunHasRootAndCandidates) {
  TempDir dir;
  const auto path = dir.file("beam.jsonl");
  auto r = beam_run(path);
  auto runs = at::read_runs(path);
  ASSERT_EQ(runs.size(), 1u);
  const auto& run = runs[0];
  EXPECT_EQ(run.header["run_id"], r.trajectory_id);
  EXPECT_EQ(run.header["corpus_domain"], "blocksworld");
  EXPECT_EQ(run.header["config"]["beam_width"], 8);
  ASSERT_GE(run.steps.size(), 3u);
  EXPECT_EQ(run.steps[0]["phase"], "root");
  EXPECT_TRUE(run.steps[0]["parent_id"].is_null());
  for (std::size_t i = 1; i < run.steps.size(); ++i) {
    EXPECT_LT(run.steps[i - 1]["step_id"].get<std::uint64_t>(), run.steps[i]["step_id"].get<std::uint64_t>());
    EXPECT_LT(run.steps[i]["parent_id"].get<std::uint64_t>(), run.steps[i]["step_id"].get<std::uint64_t>());
    EXPECT_EQ(run.steps[i]["domain_hash"], at::hash_hex(run.steps[i]["domain_text"].get<std::string>()));
  }
  ASSERT_TRUE(run.result);
  EXPECT_EQ((*run.result)["best_length"], 2);
}

TEST(Replay, SameSeedSameHashSequence) {
  TempDir dir;
  auto a = beam_run(dir.file("a.jsonl"));
  auto b = beam_run(dir.file("b.jsonl"));
  EXPECT_EQ(a.step_hashes, b.step_hashes);
  auto ra = at::read_runs(dir.file("a.jsonl"));
  auto rb = at::read_runs(dir.file("b.jsonl"));
  ASSERT_EQ(ra[0].steps.size(), rb[0].steps.size());
  for (std::size_t i = 0; i < ra[0].steps.size(); ++i)
    EXPECT_EQ(ra[0].steps[i]["domain_hash"], rb[0].steps[i]["domain_hash"]);
  EXPECT_NE(ra[0].header["run_id"], rb[0].header["run_id"]);
}

TEST(Export, CountsRunsAcrossFiles) {
  TempDir dir;
  beam_run(dir.file("1.jsonl"));
  beam_run(dir.file("2.jsonl"), 2);
  beam_run(dir.file("3.jsonl"), 3);
  EXPECT_EQ(at::export_files({dir.file("1.jsonl"), dir.file("2.jsonl"), dir.file("3.jsonl")}, dir.file("all.jsonl"),
                             at::ExportFormat::Jsonl),
            3u);
  EXPECT_EQ(at::read_runs(dir.file("all.jsonl")).size(), 3u);
}

TEST(Export, JsonlIsIdempotent) {
  TempDir dir;
  beam_run(dir.file("1.jsonl"));
  beam_run(dir.file("2.jsonl"));
  at::export_files({dir.file("1.jsonl"), dir.file("2.jsonl")}, dir.file("once.jsonl"), at::ExportFormat::Jsonl);
  at::export_files({dir.file("once.jsonl")}, dir.file("twice.jsonl"), at::ExportFormat::Jsonl);
  EXPECT_EQ(slurp(dir.file("once.jsonl")), slurp(dir.file("twice.jsonl")));
}

TEST(Export, CsvSummaryStableUnderReexport) {
  TempDir dir;
  auto r = beam_run(dir.file("1.jsonl"));
  at::export_files({dir.file("1.jsonl")}, dir.file("direct.csv"), at::ExportFormat::CsvSummary);
  at::export_files({dir.file("1.jsonl")}, dir.file("once.jsonl"), at::ExportFormat::Jsonl);
  at::export_files({dir.file("once.jsonl")}, dir.file("again.csv"), at::ExportFormat::CsvSummary);
  const auto csv = slurp(dir.file("direct.csv"));
  EXPECT_EQ(csv, slurp(dir.file("again.csv")));
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "run_id,algorithm,success,best_length,steps,oracle_calls\r");
  EXPECT_EQ(row, r.trajectory_id + ",beam,true,2," + std::to_string(r.explored) + "," +
                     std::to_string(r.oracle_calls) + "\r");
}

TEST(Export, CsvQuotesSpecialCharacters) {
  std::vector<at::RunRecord> runs(1);
  runs[0].header = {{"type", "header"}, {"run_id", "a,\"b\""}, {"config", {{"algorithm", "beam"}}}};
  std::ostringstream out;
  at::export_runs(runs, out, at::ExportFormat::CsvSummary);
  EXPECT_NE(out.str().find("\"a,\"\"b\"\"\",beam,,,0,"), std::string::npos);
}

TEST(Export, TruncatedLastLineNamesLine) {
  TempDir dir;
  beam_run(dir.file("ok.jsonl"));
  auto text = slurp(dir.file("ok.jsonl"));
  const auto lines = count_lines(text);
  text.resize(text.size() - 20);
  {
    std::ofstream out(dir.file("cut.jsonl"), std::ios::binary);
    out << text;
  }
  try {
    at::export_files({dir.file("cut.jsonl")}, dir.file("out.jsonl"), at::ExportFormat::Jsonl);
    FAIL() << "expected MalformedTrajectory";
  } catch (const at::MalformedTrajectory& e) {
    EXPECT_EQ(e.line(), lines);
    EXPECT_EQ(e.file(), dir.file("cut.jsonl"));
  }
}

TEST(Export, StepBeforeHeaderIsMalformed) {
  std::istringstream in("{\"type\":\"step\",\"step_id\":0}\n");
  EXPECT_THROW(at::read_runs(in, "x"), at::MalformedTrajectory);
}
