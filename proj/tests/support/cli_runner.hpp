#pragma once

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "axiomforge/cli/cli.hpp"

namespace clirun {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;

  std::string last_line() const {
    auto s = out;
    while (!s.empty() && s.back() == '\n') s.pop_back();
    auto pos = s.rfind('\n');
    return pos == std::string::npos ? s : s.substr(pos + 1);
  }
};

inline Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "axiomforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = axiomforge::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

/// Scratch directory holding the dumped blocksworld corpus entry.
class Workspace {
 public:
  Workspace() {
    std::random_device rd;
    root_ = std::filesystem::temp_directory_path() / ("axiomforge-cli-" + std::to_string(rd()));
    std::filesystem::create_directories(root_);
    run({"corpus", "dump", "blocksworld", "--out", path("bw")});
  }
  ~Workspace() { std::filesystem::remove_all(root_); }
  std::string path(const std::string& rel) const { return (root_ / rel).string(); }
  std::string domain() const { return path("bw/blocksworld-domain.pddl"); }
  std::string problem(const std::string& name = "bw-flagship") const { return path("bw/" + name + ".pddl"); }

 private:
  std::filesystem::path root_;
};

inline std::vector<std::string> flagship_evolve(const Workspace& ws, const std::string& trajectory) {
  return {"evolve", ws.domain(), ws.problem(), "--algo", "beam", "--beam-width", "8", "--target-len", "4",
          "--oracle", "scripted", "--seed", "1", "--trajectory", trajectory};
}

}  // namespace clirun
