#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace axiomforge::trajectory {

inline constexpr const char* kEngineVersion = "axiomforge-0.1.0";

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hash_hex(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

/// Random RFC 4122 version-4 identifier.
inline std::string random_uuid() {
  std::random_device rd;
  std::uniform_int_distribution<int> nibble(0, 15);
  std::string out;
  for (int i = 0; i < 32; ++i) {
    int v = nibble(rd);
    if (i == 12) v = 4;
    if (i == 16) v = 8 | (v & 3);
    out += "0123456789abcdef"[v];
    if (i == 7 || i == 11 || i == 15 || i == 19) out += '-';
  }
  return out;
}

inline std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::system_clock::now().time_since_epoch())
      .count();
}

struct TrajectoryHeader {
  std::string run_id = random_uuid();
  std::string engine_version = kEngineVersion;
  std::string corpus_domain;
  std::uint64_t seed = 0;
  nlohmann::json config = nlohmann::json::object();
  std::string original_domain;
  std::string problem;
};

struct TrajectoryStep {
  std::uint64_t step_id = 0;
  std::optional<std::uint64_t> parent_id;
  std::string phase;
  std::string domain_text;
  std::string edit;
  std::optional<std::size_t> plan_length;
  bool regression_ok = false;
  /// nullopt for non-finite scores.
  std::optional<double> score;
  std::size_t lev_distance = 0;
  std::size_t oracle_round = 0;
  std::int64_t timestamp_ms = 0;

  std::string domain_hash() const { return hash_hex(domain_text); }
};

struct RunSummary {
  bool success = false;
  std::optional<std::uint64_t> best_step_id;
  std::optional<std::size_t> best_length;
  std::size_t explored = 0;
  std::size_t oracle_calls = 0;
  std::string algorithm;
};

class TrajectoryIOError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline nlohmann::json to_json(const TrajectoryHeader& h) {
  return {{"type", "header"},       {"run_id", h.run_id},   {"engine_version", h.engine_version},
          {"corpus_domain", h.corpus_domain}, {"seed", h.seed}, {"config", h.config},
          {"original_domain", h.original_domain}, {"problem", h.problem}};
}

inline nlohmann::json to_json(const TrajectoryStep& s) {
  nlohmann::json j{{"type", "step"},
                   {"step_id", s.step_id},
                   {"phase", s.phase},
                   {"domain_hash", s.domain_hash()},
                   {"domain_text", s.domain_text},
                   {"edit", s.edit},
                   {"regression_ok", s.regression_ok},
                   {"lev_distance", s.lev_distance},
                   {"oracle_round", s.oracle_round},
                   {"timestamp_ms", s.timestamp_ms}};
  j["parent_id"] = s.parent_id ? nlohmann::json(*s.parent_id) : nlohmann::json(nullptr);
  j["plan_length"] = s.plan_length ? nlohmann::json(*s.plan_length) : nlohmann::json(nullptr);
  j["score"] = s.score ? nlohmann::json(*s.score) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const RunSummary& r) {
  nlohmann::json j{{"type", "result"},
                   {"success", r.success},
                   {"explored", r.explored},
                   {"oracle_calls", r.oracle_calls},
                   {"algorithm", r.algorithm}};
  j["best_step_id"] = r.best_step_id ? nlohmann::json(*r.best_step_id) : nlohmann::json(nullptr);
  j["best_length"] = r.best_length ? nlohmann::json(*r.best_length) : nlohmann::json(nullptr);
  return j;
}

/// Append-only JSONL writer: a header line, then one line per step, then an
/// optional result line. Flushes after every line.
class Recorder {
 public:
  Recorder(std::ostream& out, const TrajectoryHeader& header) : out_(&out) {
    run_id_ = header.run_id;
    write(to_json(header));
  }

  Recorder(const std::string& path, const TrajectoryHeader& header)
      : file_(std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc)), out_(file_.get()) {
    if (!*file_) throw TrajectoryIOError("cannot open " + path + " for writing");
    run_id_ = header.run_id;
    write(to_json(header));
  }

  void record(const TrajectoryStep& step) {
    if (last_id_ && step.step_id <= *last_id_)
      throw std::invalid_argument("step id " + std::to_string(step.step_id) + " does not follow " +
                                  std::to_string(*last_id_));
    if (step.parent_id && *step.parent_id >= step.step_id)
      throw std::invalid_argument("parent id must precede step id " + std::to_string(step.step_id));
    write(to_json(step));
    last_id_ = step.step_id;
    ++steps_;
  }

  void finish(const RunSummary& summary) { write(to_json(summary)); }

  const std::string& run_id() const noexcept { return run_id_; }
  std::size_t steps() const noexcept { return steps_; }

 private:
  void write(const nlohmann::json& j) {
    *out_ << j.dump() << '\n';
    out_->flush();
    if (!*out_) throw TrajectoryIOError("write failed");
  }

  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
  std::string run_id_;
  std::optional<std::uint64_t> last_id_;
  std::size_t steps_ = 0;
};

// --- reading and export ------------------------------------------------------

class MalformedTrajectory : public std::runtime_error {
 public:
  MalformedTrajectory(const std::string& file, std::size_t line, const std::string& why)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + why), file_(file), line_(line) {}
  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

struct RunRecord {
  nlohmann::json header;
  std::vector<nlohmann::json> steps;
  std::optional<nlohmann::json> result;
};

/// Splits a trajectory stream into runs. A file may hold several runs, each
/// starting at a header line.
inline std::vector<RunRecord> read_runs(std::istream& in, const std::string& name) {
  std::vector<RunRecord> runs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("type") || !j["type"].is_string())
      throw MalformedTrajectory(name, lineno, "not a trajectory record");
    const auto type = j["type"].get<std::string>();
    if (type == "header") {
      runs.push_back(RunRecord{std::move(j), {}, std::nullopt});
      continue;
    }
    if (runs.empty()) throw MalformedTrajectory(name, lineno, "record before header");
    if (type == "step") {
      if (!j.contains("step_id") || !j["step_id"].is_number_unsigned())
        throw MalformedTrajectory(name, lineno, "step without step_id");
      auto& steps = runs.back().steps;
      if (!steps.empty() && steps.back()["step_id"].get<std::uint64_t>() >= j["step_id"].get<std::uint64_t>())
        throw MalformedTrajectory(name, lineno, "step ids not increasing");
      steps.push_back(std::move(j));
    } else if (type == "result") {
      runs.back().result = std::move(j);
    } else {
      throw MalformedTrajectory(name, lineno, "unknown record type " + type);
    }
  }
  return runs;
}

inline std::vector<RunRecord> read_runs(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TrajectoryIOError("cannot open " + path);
  return read_runs(in, path);
}

enum class ExportFormat { Jsonl, CsvSummary };

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string field_text(const nlohmann::json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace detail

/// Writes all runs of `runs` to `out`. Returns the number of runs.
inline std::size_t export_runs(const std::vector<RunRecord>& runs, std::ostream& out, ExportFormat format) {
  if (format == ExportFormat::Jsonl) {
    for (const auto& r : runs) {
      out << r.header.dump() << '\n';
      for (const auto& s : r.steps) out << s.dump() << '\n';
      if (r.result) out << r.result->dump() << '\n';
    }
    return runs.size();
  }
  out << "run_id,algorithm,success,best_length,steps,oracle_calls\r\n";
  for (const auto& r : runs) {
    nlohmann::json algorithm = r.header.value("config", nlohmann::json::object()).value("algorithm", nlohmann::json());
    nlohmann::json success, best_length, calls;
    if (r.result) {
      if (r.result->contains("algorithm")) algorithm = (*r.result)["algorithm"];
      success = r.result->value("success", nlohmann::json());
      best_length = r.result->value("best_length", nlohmann::json());
      calls = r.result->value("oracle_calls", nlohmann::json());
    }
    out << detail::csv_field(detail::field_text(r.header.value("run_id", nlohmann::json()))) << ','
        << detail::csv_field(detail::field_text(algorithm)) << ',' << detail::field_text(success) << ','
        << detail::field_text(best_length) << ',' << r.steps.size() << ',' << detail::field_text(calls) << "\r\n";
  }
  return runs.size();
}

/// Reads every file and writes the export to `out_path`.
inline std::size_t export_files(const std::vector<std::string>& paths, const std::string& out_path,
                                ExportFormat format) {
  std::vector<RunRecord> all;
  for (const auto& p : paths) {
    auto runs = read_runs(p);
    for (auto& r : runs) all.push_back(std::move(r));
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw TrajectoryIOError("cannot open " + out_path + " for writing");
  const auto n = export_runs(all, out, format);
  out.flush();
  if (!out) throw TrajectoryIOError("write failed: " + out_path);
  return n;
}

}  // namespace axiomforge::trajectory
