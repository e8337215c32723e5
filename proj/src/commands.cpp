#include "affvoa/commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "affvoa/classifier.hpp"
#include "affvoa/ideal.hpp"
#include "affvoa/singular.hpp"
#include "affvoa/zhu.hpp"

namespace affvoa {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

std::string algebra_name(const RunConfig& cfg) { return to_string(cfg.type) + std::to_string(cfg.rank); }

std::string omega_string(const RootDatum& d, const Weight& w) {
  return WeightFunctional::constant(d.to_omega(w)).to_string();
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json level_json(const LevelSet& s) { return Json{{"all", s.all}, {"values", rationals(s.values)}}; }

std::string level_sentence(const LevelSet& s) {
  if (s.all) return "singular for all k";
  if (s.values.empty()) return "no singular level";
  return "singular at k = " + s.to_string();
}

std::string poly_display(const HPolynomial& p) {
  auto f = factor_linear(p);
  return f ? f->to_string() : p.to_string();
}

Json header(const std::string& command, const RunConfig& cfg) {
  return Json{{"schema", kSchema}, {"command", command}, {"type", to_string(cfg.type)}, {"rank", cfg.rank}};
}

CommandResult emit(const RunConfig& cfg, const Json& j, const std::string& text, int code) {
  CommandResult r;
  r.exit_code = code;
  r.out = cfg.format == "json" ? j.dump(2) + "\n" : text;
  return r;
}

bool level_matches(const LevelSet& s, const Rational& k) {
  if (s.all) return true;
  return s.values.size() == 1 && s.values.front() == k;
}

// Numeric level for the Zhu image of s: the configured one, or the unique
// singular level when the image depends on k.
std::optional<Rational> zhu_level(const RunConfig& cfg, const SymbolicState& s) {
  bool constant = true;
  for (const auto& [m, c] : s.terms()) constant = constant && c.is_constant();
  if (constant) return cfg.level;
  if (cfg.level) return cfg.level;
  auto lv = singular_levels(s);
  if (!lv.all && lv.values.size() == 1) return lv.values.front();
  throw UsageError("the Zhu image depends on k; pass --level");
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.type == RootType::D && (cfg.rank < 3 || cfg.rank > 16)) throw UsageError("type D needs 3 <= rank <= 16");
  if (cfg.type == RootType::B && (cfg.rank < 2 || cfg.rank > 16)) throw UsageError("type B needs 2 <= rank <= 16");
  if (cfg.n < 1) throw UsageError("--n must be positive");
  if (cfg.ideal != "v" && cfg.ideal != "triality") throw UsageError("--ideal must be 'v' or 'triality'");
  if (cfg.ideal == "triality" && !(cfg.type == RootType::D && cfg.rank == 4))
    throw UsageError("the triality ideal requires type D and rank 4");
  if (cfg.b_vector && cfg.type != RootType::B) throw UsageError("--b-vector requires type B");
  if (cfg.max_degree < 0) throw UsageError("--max-degree must be nonnegative");
  if (cfg.format != "text" && cfg.format != "json") throw UsageError("--format must be 'text' or 'json'");
}

std::string cache_file_name(RootType type, int rank) {
  return "structure-" + to_string(type) + std::to_string(rank) + "-v" + std::to_string(RootDatum::kTableVersion) + ".txt";
}

RootDatumPtr load_datum(const RunConfig& cfg) {
  if (!cfg.cache_dir) return RootDatum::build(cfg.type, cfg.rank);
  const fs::path dir(*cfg.cache_dir);
  const fs::path file = dir / cache_file_name(cfg.type, cfg.rank);
  if (fs::exists(file)) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    auto d = RootDatum::from_table(buf.str());
    if (d->type() != cfg.type || d->rank() != cfg.rank) throw std::runtime_error("cache file does not match the requested algebra: " + file.string());
    return d;
  }
  auto d = RootDatum::build(cfg.type, cfg.rank);
  fs::create_directories(dir);
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << d->to_table();
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, file);
  return d;
}

SymbolicState candidate_vector(const RunConfig& cfg, const RootDatumPtr& d) {
  if (!cfg.states.empty()) return parse_state(d, cfg.states.front());
  if (cfg.type == RootType::B) return build_b_vector(d);
  return build_vn(d, cfg.n);
}

std::vector<SymbolicState> ideal_generators(const RunConfig& cfg, const RootDatumPtr& d) {
  std::vector<SymbolicState> gens;
  if (!cfg.states.empty()) {
    for (const auto& s : cfg.states) gens.push_back(parse_state(d, s));
    return gens;
  }
  gens.push_back(candidate_vector(cfg, d));
  if (cfg.ideal == "triality") {
    auto th = DiagramAutomorphism::triality(d);
    gens.push_back(apply(th, gens.back()));
    gens.push_back(apply(th, gens.back()));
  }
  return gens;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  validate(cfg);
  auto d = load_datum(cfg);
  const auto v = candidate_vector(cfg, d);
  const auto residuals = singular_conditions(v);
  const auto levels = singular_levels(residuals);

  Json j = header("verify", cfg);
  j["vector"] = v.to_string();
  Json rj = Json::array();
  std::string text = "vector: " + v.to_string() + "\nresiduals:\n";
  for (const auto& r : residuals) {
    rj.push_back({{"mode", r.label}, {"value", r.value.to_string()}});
    text += "  " + r.label + ": " + r.value.to_string() + "\n";
  }
  j["residuals"] = rj;
  j["levels"] = level_json(levels);
  text += level_sentence(levels) + "\n";

  bool ok = !levels.empty();
  if (cfg.expect_level) {
    const bool match = level_matches(levels, *cfg.expect_level);
    j["expected"] = to_string(*cfg.expect_level);
    j["match"] = match;
    if (!match) text += "expected k = " + to_string(*cfg.expect_level) + ": mismatch\n";
    ok = ok && match;
  }
  return emit(cfg, j, text, ok ? kExitOk : kExitMismatch);
}

CommandResult cmd_zhu(const RunConfig& cfg) {
  validate(cfg);
  auto d = load_datum(cfg);
  const auto v = candidate_vector(cfg, d);
  const auto k = zhu_level(cfg, v);
  const auto image = zhu_F(v, k);
  Json j = header("zhu", cfg);
  j["vector"] = v.to_string();
  if (k) j["level"] = to_string(*k);
  j["image"] = image.to_string();
  std::string text = "vector: " + v.to_string() + "\n";
  if (k) text += "level: k = " + to_string(*k) + "\n";
  text += "F(vector) = " + image.to_string() + "\n";
  return emit(cfg, j, text, kExitOk);
}

CommandResult cmd_classify(const RunConfig& cfg) {
  validate(cfg);
  auto d = load_datum(cfg);
  const auto gens = ideal_generators(cfg, d);

  Json j = header("classify", cfg);
  j["ideal"] = cfg.states.empty() ? cfg.ideal : "custom";
  std::string text = "classification for " + algebra_name(cfg) + ", ideal " +
                     (cfg.states.empty() ? cfg.ideal : std::string("custom")) + "\n";
  Json gj = Json::array();
  std::vector<AdjointModule> modules;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    const auto levels = singular_levels(g);
    const auto u = zhu_F(g, zhu_level(cfg, g));
    modules.push_back(generate_adjoint_module(u));
    const auto& r = modules.back();
    const std::string hw = omega_string(*d, r.highest_weight);
    const int dim0 = static_cast<int>(r.zero_weight_space().size());
    gj.push_back({{"vector", g.to_string()},
                  {"levels", level_json(levels)},
                  {"zhu_image", u.to_string()},
                  {"highest_weight", d->to_omega(r.highest_weight)},
                  {"dim_R", r.dimension()},
                  {"dim_R0", dim0}});
    text += "generator " + std::to_string(i + 1) + ": " + g.to_string() + "\n  " + level_sentence(levels) +
            "; R = V(" + hw + "), dim R = " + std::to_string(r.dimension()) + ", dim R_0 = " + std::to_string(dim0) +
            "\n";
  }
  j["generators"] = gj;

  const auto system = assemble_system(modules);
  Json sj = Json::array();
  text += "P_0 span (" + std::to_string(system.size()) + " polynomials):\n";
  for (const auto& p : system) {
    sj.push_back(p.to_string());
    text += "  " + poly_display(p) + "\n";
  }
  j["system"] = sj;

  const auto result = solve_by_branching(system, d->rank());
  Json fj = Json::array();
  text += "weights (" + std::to_string(result.families.size()) + "):\n";
  for (const auto& f : result.families) {
    Json coords = Json::array();
    for (const auto& a : f.coords()) coords.push_back(a.to_string());
    const auto part = ordinary_part(f);
    fj.push_back({{"coords", coords},
                  {"parametric", f.is_parametric()},
                  {"display", f.to_string()},
                  {"ordinary_constraint", part.constraint}});
    text += "  " + f.to_string() + "\n";
  }
  j["families"] = fj;
  j["residual_check"] = result.residual_check;
  text += std::string("residual check: ") + (result.residual_check ? "ok" : "FAILED") + "\n";

  Json oj = Json::array();
  text += "ordinary:\n";
  for (const auto& part : filter_ordinary(result)) {
    Json members = Json::array();
    for (const auto& m : part.members) members.push_back(m.to_string());
    oj.push_back({{"family", part.family.to_string()}, {"constraint", part.constraint}, {"members", members}});
    text += "  " + part.family.to_string() + "  (" + part.constraint + ")\n";
  }
  j["ordinary"] = oj;
  return emit(cfg, j, text, result.residual_check ? kExitOk : kExitMismatch);
}

CommandResult cmd_search(const RunConfig& cfg) {
  validate(cfg);
  if (!cfg.level) throw UsageError("search needs a numeric --level");
  auto d = load_datum(cfg);
  std::vector<NumericState> gens;
  for (const auto& g : ideal_generators(cfg, d)) gens.push_back(specialize(g, *cfg.level));
  IdealData ideal(d, *cfg.level, gens, cfg.max_degree);
  const auto hits = search_singular(ideal, cfg.max_degree);

  const bool vacuum_only = hits.size() == 1 && hits.front().degree == 0 && hits.front().basis.size() == 1;
  Json j = header("search", cfg);
  j["level"] = to_string(*cfg.level);
  j["ideal"] = cfg.states.empty() ? cfg.ideal : "custom";
  j["max_degree"] = cfg.max_degree;
  std::string text = "singular vectors in the quotient of " + algebra_name(cfg) + " at k = " + to_string(*cfg.level) +
                     ", degrees 0.." + std::to_string(cfg.max_degree) + "\n";
  Json dims = Json::array();
  for (int deg = 0; deg <= cfg.max_degree; ++deg) dims.push_back(ideal.dimension(deg));
  j["ideal_dimensions"] = dims;
  Json hj = Json::array();
  for (const auto& h : hits) {
    Json basis = Json::array();
    text += "degree " + std::to_string(h.degree) + ", weight " + omega_string(*d, h.weight) + ": dimension " +
            std::to_string(h.basis.size()) + "\n";
    for (const auto& b : h.basis) {
      basis.push_back(b.to_string());
      text += "  " + b.to_string() + "\n";
    }
    hj.push_back({{"degree", h.degree},
                  {"hweight", d->to_omega(h.weight)},
                  {"dimension", h.basis.size()},
                  {"basis", basis}});
  }
  j["results"] = hj;
  j["vacuum_only"] = vacuum_only;
  if (vacuum_only) text += "vacuum only\n";
  return emit(cfg, j, text, kExitOk);
}

CommandResult cmd_report(const RunConfig& cfg) {
  validate(cfg);
  RunConfig sub = cfg;
  sub.format = "json";
  Json j = header("report", cfg);
  std::string text;
  int code = kExitOk;
  auto section = [&](const char* name, CommandResult (*fn)(const RunConfig&)) {
    CommandResult r;
    try {
      r = fn(sub);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      j[name] = Json{{"error", e.what()}};
      text += "== " + std::string(name) + "\nerror: " + e.what() + "\n";
      code = std::max(code, kExitMismatch);
      return;
    }
    Json part = Json::parse(r.out);
    part.erase("schema");
    j[name] = part;
    RunConfig txt = cfg;
    txt.format = "text";
    text += "== " + std::string(name) + "\n" + fn(txt).out;
    code = std::max(code, r.exit_code);
  };
  section("verify", cmd_verify);
  section("zhu", cmd_zhu);
  section("classify", cmd_classify);
  if (cfg.level) section("search", cmd_search);
  return emit(cfg, j, text, code);
}

CommandResult run_command(const std::string& name, const RunConfig& cfg) {
  try {
    if (name == "verify") return cmd_verify(cfg);
    if (name == "zhu") return cmd_zhu(cfg);
    if (name == "classify") return cmd_classify(cfg);
    if (name == "search") return cmd_search(cfg);
    if (name == "report") return cmd_report(cfg);
    throw UsageError("unknown command '" + name + "'");
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitMismatch, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace affvoa
