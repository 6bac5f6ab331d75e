#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "j3/cli/app.hpp"

namespace j3::test {

// NAME.cmd holds one argument per line; NAME.out and the optional NAME.err
// hold the expected streams; NAME.exit holds a nonzero exit code.
struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  std::string out;
  std::string err;
  int exit_code = 0;
};

inline void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<GoldenCase> load_golden(const std::filesystem::path& dir) {
  std::vector<GoldenCase> cases;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".cmd") continue;
    auto base = entry.path();
    GoldenCase c;
    c.name = base.stem().string();
    std::istringstream lines(slurp(base));
    for (std::string line; std::getline(lines, line);) c.args.push_back(line);
    c.out = slurp(base.replace_extension(".out"));
    if (std::filesystem::exists(base.replace_extension(".err"))) c.err = slurp(base);
    if (std::filesystem::exists(base.replace_extension(".exit"))) c.exit_code = std::stoi(slurp(base));
    cases.push_back(std::move(c));
  }
  std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return cases;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

inline CliRun run_args(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Empty when the case reproduces byte for byte.
inline std::string check_golden(const GoldenCase& c) {
  const CliRun r = run_args(c.args);
  std::string why;
  if (r.code != c.exit_code) why += "exit " + std::to_string(r.code) + " != " + std::to_string(c.exit_code) + "; ";
  if (r.out != c.out) why += "stdout was:\n" + r.out;
  if (r.err != c.err) why += "stderr was:\n" + r.err;
  return why;
}

// Largest oracle deviation reported when the case is re-run with --oracle,
// or nothing for commands that fail.
inline std::optional<double> golden_oracle_delta(const GoldenCase& c) {
  std::vector<std::string> args{"--oracle", "--json"};
  args.insert(args.end(), c.args.begin(), c.args.end());
  const CliRun r = run_args(args);
  if (r.code != 0) return std::nullopt;
  return nlohmann::json::parse(r.out).at("oracle_delta").get<double>();
}

}  // namespace j3::test
