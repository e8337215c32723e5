// Command-line front end: verify, zhu, classify, search, report.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "affvoa/commands.hpp"

namespace {

void add_common(CLI::App* sub, affvoa::RunConfig& cfg, std::string& type, std::string& level,
                std::string& expect) {
  sub->add_option("--type", type, "Root system type (D or B)")->check(CLI::IsMember({"D", "B"}));
  sub->add_option("--rank", cfg.rank, "Rank l");
  sub->add_option("--n", cfg.n, "Exponent n of the vector v_n (type D)");
  sub->add_flag("--b-vector", cfg.b_vector, "Use the B-type vector");
  sub->add_option("--state", cfg.states, "Custom state, e.g. 'E(+1,-2)(-1)|0>' (repeatable)");
  sub->add_option("--level", level, "Numeric level k as p or p/q");
  sub->add_option("--ideal", cfg.ideal, "Ideal generators: v or triality");
  sub->add_option("--max-degree", cfg.max_degree, "Largest conformal degree searched");
  sub->add_option("--format", cfg.format, "Output format: text or json");
  sub->add_option("--cache-dir", cfg.cache_dir, "Directory for cached structure-constant tables");
  sub->add_option("--expect-level", expect, "Expected singular level; mismatch exits with 1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in universal affine vertex algebras of types B and D"};
  app.require_subcommand(1);

  affvoa::RunConfig cfg;
  std::string type = "D", level, expect;
  for (const char* name : {"verify", "zhu", "classify", "search", "report"}) {
    add_common(app.add_subcommand(name, std::string("Run ") + name), cfg, type, level, expect);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : affvoa::kExitUsage;
  }

  try {
    cfg.type = affvoa::parse_root_type(type);
    if (!level.empty() && level != "k") cfg.level = affvoa::parse_rational(level);
    if (!expect.empty()) cfg.expect_level = affvoa::parse_rational(expect);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return affvoa::kExitUsage;
  }

  const auto result = affvoa::run_command(app.get_subcommands().front()->get_name(), cfg);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
