#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "axiomforge/corpus/corpus.hpp"
#include "axiomforge/distance/distance.hpp"
#include "axiomforge/pddl/link.hpp"
#include "axiomforge/pddl/parser.hpp"
#include "axiomforge/pddl/printer.hpp"
#include "axiomforge/planner/grounding.hpp"
#include "axiomforge/planner/planner.hpp"
#include "axiomforge/proposer/proposer.hpp"
#include "axiomforge/search/search.hpp"
#include "axiomforge/trajectory/trajectory.hpp"

namespace axiomforge::cli {

enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2, kExternal = 3 };

namespace detail {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A PDDL input failed to parse or link; diagnostics already printed.
struct InputRejected {};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out.flush()) throw IoError("cannot write " + path);
}

inline void print_diagnostics(std::ostream& os, const std::vector<pddl::Diagnostic>& ds, const std::string& file) {
  for (const auto& d : ds) os << pddl::format_diagnostic(d, file) << '\n';
}

inline pddl::DomainAst load_domain(const std::string& path, std::ostream& err) {
  auto parsed = pddl::parse_domain(read_file(path));
  if (!parsed.ok()) {
    print_diagnostics(err, parsed.diagnostics, path);
    throw InputRejected{};
  }
  return *std::move(parsed);
}

inline pddl::ProblemAst load_problem(const std::string& path, std::ostream& err) {
  auto parsed = pddl::parse_problem(read_file(path));
  if (!parsed.ok()) {
    print_diagnostics(err, parsed.diagnostics, path);
    throw InputRejected{};
  }
  return *std::move(parsed);
}

inline pddl::LinkedTask load_task(const std::string& domain, const std::string& problem, std::ostream& err) {
  auto d = load_domain(domain, err);
  auto p = load_problem(problem, err);
  auto linked = pddl::link(d, p);
  if (!linked.ok()) {
    print_diagnostics(err, linked.diagnostics, problem);
    throw InputRejected{};
  }
  return *std::move(linked);
}

inline bool looks_like_problem(const std::string& text) {
  auto pos = text.find("define");
  return pos != std::string::npos && text.find("(problem", pos) != std::string::npos &&
         text.find("(problem", pos) < text.find("(domain", pos);
}

struct LimitFlags {
  std::size_t max_states = 1'000'000;
  std::size_t max_len = 100;
  long long budget_ms = 10'000;

  void attach(CLI::App* app) {
    app->add_option("--max-states", max_states, "Planner expansion limit")->capture_default_str();
    app->add_option("--max-len", max_len, "Longest plan considered")->capture_default_str();
    app->add_option("--budget-ms", budget_ms, "Planner wall-clock budget per solve")->capture_default_str();
  }
  planner::SearchLimits limits() const {
    planner::SearchLimits l;
    l.max_expanded_states = max_states;
    l.max_plan_length = max_len;
    l.wall_budget = std::chrono::milliseconds(budget_ms);
    return l;
  }
};

inline proposer::OracleClientConfig http_config(std::size_t samples) {
  proposer::OracleClientConfig cfg;
  if (const char* url = std::getenv("AXIOMFORGE_BASE_URL"); url && *url) cfg.base_url = url;
  if (const char* model = std::getenv("AXIOMFORGE_MODEL"); model && *model) cfg.model = model;
  cfg.samples = samples;
  cfg.check();
  return cfg;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rule-evolution engine for PDDL domains", "axiomforge"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Finish with a one-line JSON summary");
  app.fallthrough();

  // parse
  std::string parse_file;
  auto* parse = app.add_subcommand("parse", "Parse a domain or problem file and print it canonically");
  parse->add_option("file", parse_file)->required();

  // plan
  std::string plan_domain, plan_problem;
  detail::LimitFlags plan_limits;
  auto* plan = app.add_subcommand("plan", "Find a shortest plan");
  plan->add_option("domain", plan_domain)->required();
  plan->add_option("problem", plan_problem)->required();
  plan_limits.attach(plan);

  // validate
  std::string val_domain, val_problem, val_plan;
  auto* validate = app.add_subcommand("validate", "Check a plan file against a task");
  validate->add_option("domain", val_domain)->required();
  validate->add_option("problem", val_problem)->required();
  validate->add_option("plan", val_plan)->required();

  // evolve
  std::string ev_domain, ev_problem, ev_algo = "beam", ev_oracle = "scripted", ev_trajectory, ev_best_out;
  std::size_t samples = 16;
  search::SearchConfig scfg;
  detail::LimitFlags ev_limits;
  std::vector<std::string> ev_regression;
  auto* evolve = app.add_subcommand("evolve", "Search for rule edits that reach the goal within a step budget");
  evolve->add_option("domain", ev_domain)->required();
  evolve->add_option("problem", ev_problem)->required();
  evolve->add_option("--algo", ev_algo, "Search strategy")
      ->check(CLI::IsMember({"bfs", "mcts", "genetic", "beam"}))
      ->capture_default_str();
  evolve->add_option("--target-len", scfg.target_length, "Longest acceptable plan")->required();
  evolve->add_option("--beam-width", scfg.beam_width)->capture_default_str()->check(CLI::PositiveNumber);
  evolve->add_option("--seed", scfg.seed)->capture_default_str();
  evolve->add_option("--oracle", ev_oracle)->check(CLI::IsMember({"http", "scripted"}))->capture_default_str();
  evolve->add_option("--trajectory", ev_trajectory, "JSONL file recording every step");
  evolve->add_option("--alpha", scfg.weights.alpha, "Edit-distance weight")->capture_default_str();
  evolve->add_option("--lambda", scfg.weights.lambda, "Compactness weight")->capture_default_str();
  evolve->add_option("--penalty", scfg.weights.penalty, "Score of unsolved candidates")->capture_default_str();
  evolve->add_option("--samples", samples, "Completions per oracle request")->capture_default_str();
  evolve->add_option("--max-depth", scfg.max_depth)->capture_default_str();
  evolve->add_option("--proposals", scfg.proposals_per_expansion, "Proposals per expansion")->capture_default_str();
  evolve->add_option("--iterations", scfg.mcts_iterations, "MCTS iterations")->capture_default_str();
  evolve->add_option("--exploration", scfg.mcts_exploration_c, "UCB1 constant")->capture_default_str();
  evolve->add_option("--rollout-depth", scfg.mcts_rollout_depth)->capture_default_str();
  evolve->add_option("--population", scfg.ga_population)->capture_default_str();
  evolve->add_option("--generations", scfg.ga_generations)->capture_default_str();
  evolve->add_option("--mutation-rate", scfg.ga_mutation_rate)->capture_default_str();
  evolve->add_option("--rank-keep", scfg.rank_keep, "Edit-distance survivors before oracle ranking")
      ->capture_default_str();
  evolve->add_option("--jobs", scfg.jobs, "Evaluation workers")->capture_default_str()->check(CLI::PositiveNumber);
  evolve->add_option("--regression", ev_regression, "Extra problem files that must stay solvable");
  evolve->add_option("--best-out", ev_best_out, "Write the best domain here");
  ev_limits.attach(evolve);

  // rank
  std::string rk_reference, rk_metric = "hybrid", rk_oracle = "scripted";
  std::vector<std::string> rk_candidates;
  std::size_t rk_keep = 8, rk_samples = 16;
  auto* rank = app.add_subcommand("rank", "Order candidate domains by closeness to a reference");
  rank->add_option("reference", rk_reference)->required();
  rank->add_option("candidates", rk_candidates)->required();
  rank->add_option("--metric", rk_metric)->check(CLI::IsMember({"lev", "semantic", "hybrid"}))->capture_default_str();
  rank->add_option("--keep", rk_keep, "Hybrid survivors")->capture_default_str();
  rank->add_option("--oracle", rk_oracle)->check(CLI::IsMember({"http", "scripted"}))->capture_default_str();
  rank->add_option("--samples", rk_samples)->capture_default_str();

  // corpus
  std::string cp_name, cp_out;
  auto* corpus_cmd = app.add_subcommand("corpus", "Embedded domains and problems");
  corpus_cmd->require_subcommand(1);
  auto* cp_list = corpus_cmd->add_subcommand("list", "List embedded domains");
  auto* cp_dump = corpus_cmd->add_subcommand("dump", "Write a domain and its problems to a directory");
  cp_dump->add_option("name", cp_name)->required();
  cp_dump->add_option("--out", cp_out)->required();

  // export
  std::vector<std::string> ex_runs;
  std::string ex_format = "jsonl", ex_out;
  auto* exp = app.add_subcommand("export", "Merge trajectory files into a dataset");
  exp->add_option("runs", ex_runs)->required();
  exp->add_option("--format", ex_format)->check(CLI::IsMember({"jsonl", "csv-summary"}))->capture_default_str();
  exp->add_option("--out", ex_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  nlohmann::json summary;
  auto finish = [&](int code) {
    if (json) {
      summary["exit_code"] = code;
      out << summary.dump() << '\n';
    }
    return code;
  };

  try {
    if (*parse) {
      const auto text = detail::read_file(parse_file);
      summary["command"] = "parse";
      if (detail::looks_like_problem(text)) {
        auto p = pddl::parse_problem(text);
        summary["kind"] = "problem";
        summary["diagnostics"] = p.diagnostics.size();
        if (!p.ok()) {
          detail::print_diagnostics(out, p.diagnostics, parse_file);
          return finish(kFailure);
        }
        out << pddl::print_problem(*p);
        return finish(kOk);
      }
      auto d = pddl::parse_domain(text);
      summary["kind"] = "domain";
      summary["diagnostics"] = d.diagnostics.size();
      if (!d.ok()) {
        detail::print_diagnostics(out, d.diagnostics, parse_file);
        return finish(kFailure);
      }
      out << pddl::print_canonical(*d);
      return finish(kOk);
    }

    if (*plan) {
      summary["command"] = "plan";
      auto task = planner::ground(detail::load_task(plan_domain, plan_problem, err));
      auto r = planner::solve(task, plan_limits.limits());
      summary["status"] = planner::to_string(r.status);
      summary["expanded"] = r.expanded;
      if (!r.solved()) {
        out << planner::to_string(r.status) << '\n';
        return finish(kFailure);
      }
      out << planner::format_plan(task, r.plan);
      summary["length"] = r.plan.length();
      return finish(kOk);
    }

    if (*validate) {
      summary["command"] = "validate";
      auto task = planner::ground(detail::load_task(val_domain, val_problem, err));
      auto parsed = planner::parse_plan(task, detail::read_file(val_plan));
      if (!parsed) {
        out << "invalid: unknown action in plan\n";
        summary["valid"] = false;
        return finish(kFailure);
      }
      auto check = planner::validate_plan(task, *parsed);
      summary["valid"] = check.valid;
      summary["length"] = parsed->length();
      if (check.valid) {
        out << "valid\nlength: " << parsed->length() << '\n';
        return finish(kOk);
      }
      if (*check.failure_index == parsed->length()) {
        out << "invalid: goal not reached\n";
      } else {
        out << "invalid: step " << (*check.failure_index + 1) << " not applicable: "
            << task.actions[parsed->steps[*check.failure_index]].text() << '\n';
      }
      summary["failure_index"] = *check.failure_index;
      return finish(kFailure);
    }

    if (*evolve) {
      summary["command"] = "evolve";
      scfg.algorithm = *search::parse_algorithm(ev_algo);
      try {
        scfg.check();
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
      }
      auto linked = detail::load_task(ev_domain, ev_problem, err);
      search::SearchContext ctx;
      ctx.original = linked.domain;
      ctx.problem = linked.problem;
      ctx.limits = ev_limits.limits();
      if (corpus::contains(ctx.original.name)) {
        ctx.corpus_domain = ctx.original.name;
        ctx.regression_suite = corpus::regression_suite(ctx.original.name);
      }
      for (const auto& f : ev_regression) ctx.regression_suite.push_back(detail::load_problem(f, err));
      if (ctx.regression_suite.empty()) ctx.regression_suite.push_back(ctx.problem);

      std::unique_ptr<proposer::ProposalOracle> proposals;
      std::unique_ptr<distance::DistanceOracle> dist;
      if (ev_oracle == "http") {
        auto client = std::make_shared<proposer::ChatClient>(detail::http_config(samples));
        proposals = std::make_unique<proposer::HttpProposalOracle>(client);
        dist = std::make_unique<distance::VotingOracle>(std::make_shared<proposer::HttpComparisonSampler>(client),
                                                        samples);
      } else {
        proposals = std::make_unique<proposer::ScriptedOracle>(proposer::builtin_script());
        dist = std::make_unique<distance::StructuralOracle>();
      }

      std::unique_ptr<trajectory::Recorder> recorder;
      if (!ev_trajectory.empty()) {
        recorder = std::make_unique<trajectory::Recorder>(ev_trajectory, search::make_header(scfg, ctx));
        ctx.recorder = recorder.get();
      }
      auto r = search::run_search(scfg, ctx, *proposals, *dist);

      out << "algorithm: " << search::to_string(scfg.algorithm) << '\n';
      out << "success: " << (r.success ? "true" : "false") << '\n';
      summary["algorithm"] = search::to_string(scfg.algorithm);
      summary["success"] = r.success;
      summary["explored"] = r.explored;
      summary["oracle_calls"] = r.oracle_calls;
      if (r.best) {
        const auto& b = *r.best;
        const auto len = b.plan_length();
        out << "best length: " << (len ? std::to_string(*len) : std::string(search::to_string(b.outcome))) << '\n';
        out << "regression ok: " << (b.regression_ok ? "true" : "false") << '\n';
        out << "score: " << nlohmann::json(b.score).dump() << '\n';
        out << "edit: " << b.description << '\n';
        out << "best step: " << b.step_id << '\n';
        summary["best_length"] = len ? nlohmann::json(*len) : nlohmann::json(nullptr);
        summary["regression_ok"] = b.regression_ok;
        summary["best_step"] = b.step_id;
        summary["best_hash"] = trajectory::hash_hex(b.text);
        if (!ev_best_out.empty()) detail::write_file(ev_best_out, b.text);
      }
      out << "explored: " << r.explored << '\n';
      out << "oracle calls: " << r.oracle_calls << '\n';
      if (r.best && r.best->solved()) out << "plan:\n" << r.best->plan_text;
      return finish(r.success ? kOk : kFailure);
    }

    if (*rank) {
      summary["command"] = "rank";
      std::vector<std::string> texts;
      auto canonical_or_raw = [](const std::string& t) {
        auto d = pddl::parse_domain(t);
        return d.ok() ? pddl::print_canonical(*d) : t;
      };
      const auto reference = canonical_or_raw(detail::read_file(rk_reference));
      for (const auto& c : rk_candidates) texts.push_back(canonical_or_raw(detail::read_file(c)));

      std::unique_ptr<distance::DistanceOracle> oracle;
      if (rk_metric == "lev") {
        oracle = std::make_unique<distance::LevenshteinOracle>();
      } else if (rk_oracle == "http") {
        auto client = std::make_shared<proposer::ChatClient>(detail::http_config(rk_samples));
        oracle = std::make_unique<distance::VotingOracle>(std::make_shared<proposer::HttpComparisonSampler>(client),
                                                          rk_samples);
      } else {
        oracle = std::make_unique<distance::StructuralOracle>();
      }
      distance::RankedList ranked;
      if (rk_metric == "hybrid") {
        if (rk_keep == 0) {
          err << "error: --keep must be at least 1\n";
          return kUsage;
        }
        ranked = distance::hybrid_rank(reference, texts, rk_keep, *oracle);
      } else {
        ranked = distance::semantic_rank(reference, texts, *oracle);
      }
      nlohmann::json order = nlohmann::json::array();
      for (auto i : ranked.order) {
        out << rk_candidates[i] << '\n';
        order.push_back(rk_candidates[i]);
      }
      summary["order"] = order;
      summary["oracle_queries"] = ranked.oracle_queries;
      return finish(kOk);
    }

    if (*corpus_cmd) {
      summary["command"] = "corpus";
      if (*cp_list) {
        nlohmann::json names = nlohmann::json::array();
        for (const auto& n : corpus::domain_names()) {
          const auto& e = corpus::load(n);
          out << n << " (" << e.problems.size() << " problems)\n";
          names.push_back(n);
        }
        summary["domains"] = names;
        return finish(kOk);
      }
      if (!corpus::contains(cp_name)) {
        err << "error: unknown domain " << cp_name << '\n';
        return finish(kFailure);
      }
      const auto& e = corpus::load(cp_name);
      std::error_code ec;
      std::filesystem::create_directories(cp_out, ec);
      if (ec) throw detail::IoError("cannot create " + cp_out);
      const auto dir = std::filesystem::path(cp_out);
      nlohmann::json files = nlohmann::json::array();
      auto emit = [&](const std::string& name, std::string_view text) {
        const auto path = (dir / name).string();
        detail::write_file(path, std::string(text));
        out << path << '\n';
        files.push_back(path);
      };
      emit(e.name + "-domain.pddl", e.domain_text);
      for (const auto& p : e.problems) emit(p.name + ".pddl", p.text);
      summary["files"] = files;
      return finish(kOk);
    }

    if (*exp) {
      summary["command"] = "export";
      const auto format =
          ex_format == "jsonl" ? trajectory::ExportFormat::Jsonl : trajectory::ExportFormat::CsvSummary;
      const auto n = trajectory::export_files(ex_runs, ex_out, format);
      out << "exported " << n << " run" << (n == 1 ? "" : "s") << " to " << ex_out << '\n';
      summary["runs"] = n;
      return finish(kOk);
    }
  } catch (const detail::InputRejected&) {
    return finish(kFailure);
  } catch (const planner::GroundingExplosion& e) {
    err << "error: " << e.what() << '\n';
    return finish(kFailure);
  } catch (const trajectory::MalformedTrajectory& e) {
    err << "error: " << e.what() << '\n';
    return finish(kFailure);
  } catch (const detail::IoError& e) {
    err << "error: " << e.what() << '\n';
    return finish(kExternal);
  } catch (const trajectory::TrajectoryIOError& e) {
    err << "error: " << e.what() << '\n';
    return finish(kExternal);
  } catch (const proposer::AuthError& e) {
    err << "error: " << e.what() << '\n';
    return finish(kExternal);
  } catch (const distance::OracleUnavailable& e) {
    err << "error: " << e.what() << '\n';
    return finish(kExternal);
  } catch (const proposer::NoScriptMatch& e) {
    err << "error: " << e.what() << '\n';
    return finish(kExternal);
  }
  return kUsage;
}

}  // namespace axiomforge::cli
