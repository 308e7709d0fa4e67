#include "ncc/commands.hpp"

#include <algorithm>
#include <cctype>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncc/atlas.hpp"
#include "ncc/flows.hpp"
#include "ncc/jts.hpp"
#include "ncc/verify.hpp"

namespace ncc {

Tolerances RunConfig::tolerances() const {
  try {
    return Tolerances(eq_tol, std::max(spec_tol, eq_tol), band);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

nlohmann::json RunConfig::to_json() const {
  return {{"algebra", algebra}, {"euler", euler},
          {"tolerances", {{"eq_tol", eq_tol}, {"spec_tol", std::max(spec_tol, eq_tol)}, {"boundary_band", band}}},
          {"seed", seed},       {"samples", samples},
          {"grid", grid},       {"tmax", tmax}};
}

Word parse_word(const std::string& text) {
  Word word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0) {
      throw UsageError("word letters look like 'z:0.5', got '" + item + "'");
    }
    try {
      std::size_t used = 0;
      const double t = std::stod(item.substr(colon + 1), &used);
      if (used != item.size() - colon - 1) throw std::invalid_argument("trailing");
      word.emplace_back(item.substr(0, colon), t);
    } catch (const std::exception&) {
      throw UsageError("bad parameter in word letter '" + item + "'");
    }
  }
  return word;
}

namespace {

struct Setup {
  AlgebraPtr alg;
  StructurePtr structure;
};

Setup make_setup(const RunConfig& cfg) {
  const Tolerances tol = cfg.tolerances();
  try {
    Setup s;
    s.alg = Algebra::parse(cfg.algebra, tol);
    s.structure = make_structure(euler_element(s.alg, cfg.euler), tol);
    return s;
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  } catch (const DimensionError& e) {
    throw UsageError(e.what());
  }
}

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> r(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) r[static_cast<std::size_t>(j)] = std::abs(m(i, j)) < 1e-15 ? 0.0 : m(i, j);
    rows.push_back(r);
  }
  return rows;
}

std::vector<double> vec_json(const Vector& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  for (double& x : out) x = x == 0.0 ? 0.0 : x;  // no negative zeros in reports
  return out;
}

ConeModel cone_for(const RunConfig& cfg, const StructurePtr& s) {
  if (s->algebra()->family() == Family::gl) return build_gl2_cone(s, 1.0, cfg.tolerances());
  return build_cone(s, std::max(1, std::min(cfg.samples, 512)), cfg.seed, cfg.tolerances());
}

AlgebraElement resolve_generator(const Setup& st, const std::string& name) {
  const SymmetricStructure& s = *st.structure;
  if (name == "h") return s.h();
  if (st.alg->family() == Family::sl && st.alg->defining_dim() == 2) {
    Matrix e(2, 2), f(2, 2);
    e << 0, 1, 0, 0;
    f << 0, 0, 1, 0;
    const AlgebraElement ee = AlgebraElement::from_matrix(st.alg, e);
    const AlgebraElement ff = AlgebraElement::from_matrix(st.alg, f);
    if (name == "e") return ee;
    if (name == "f") return ff;
    if (name == "h0") return (ee + ff) * 0.5;
    if (name == "z") return (ee - ff) * 0.5;
  }
  static const std::vector<std::pair<std::string, const Subspace SymmetricStructure::*>> subs{
      {"hk", &SymmetricStructure::h_k}, {"hp", &SymmetricStructure::h_p},
      {"qk", &SymmetricStructure::q_k}, {"qp", &SymmetricStructure::q_p},
      {"gp", &SymmetricStructure::g_plus}, {"gm", &SymmetricStructure::g_minus},
      {"g0", &SymmetricStructure::g_zero}, {"b", nullptr}};
  for (const auto& [prefix, member] : subs) {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) continue;
    const std::string idx = name.substr(prefix.size());
    if (!std::all_of(idx.begin(), idx.end(), [](unsigned char c) { return std::isdigit(c); })) continue;
    const int i = std::stoi(idx);
    if (member == nullptr) {
      if (i < st.alg->dim()) return AlgebraElement::basis(st.alg, i);
    } else {
      const auto& basis = (s.*member).basis();
      if (i < static_cast<int>(basis.size())) return basis[static_cast<std::size_t>(i)];
    }
    throw UsageError("generator index out of range: '" + name + "'");
  }
  throw UsageError("unknown generator '" + name + "'");
}

}  // namespace

CommandResult cmd_info(const RunConfig& cfg) {
  const Setup st = make_setup(cfg);
  const SymmetricStructure& s = *st.structure;
  nlohmann::json r;
  r["command"] = "info";
  r["config"] = cfg.to_json();
  r["algebra"] = {{"name", st.alg->name()}, {"dim", st.alg->dim()}, {"defining_dim", st.alg->defining_dim()}};
  r["euler"] = {{"label", cfg.euler}, {"matrix", matrix_json(s.h().matrix())}};
  r["grading"] = {{"dims", {s.grading.dims[0], s.grading.dims[1], s.grading.dims[2]}}};
  r["subspaces"] = {{"h", s.h_alg.dim()}, {"q", s.q.dim()},     {"k", s.k.dim()},
                    {"p", s.p.dim()},     {"h_k", s.h_k.dim()}, {"h_p", s.h_p.dim()},
                    {"q_k", s.q_k.dim()}, {"q_p", s.q_p.dim()}};
  const ConeModel cone = cone_for(cfg, st.structure);
  r["cone"] = {{"kind", to_string(cone.kind)},
               {"sample_count", cone.kind == ConeKind::sampled ? cone.sample_count : 0},
               {"exact_generators", cone.exact_generators.size()},
               {"seed", cone.seed}};
  r["causal_euler"] = nlohmann::json::parse(check_causal_euler(s, cone).to_json());
  return {0, r};
}

CommandResult cmd_wedge(const RunConfig& cfg, const Word& word) {
  const Setup st = make_setup(cfg);
  const SymmetricStructure& s = *st.structure;
  const ConeModel cone = cone_for(cfg, st.structure);

  std::vector<AlgebraElement> factors;
  nlohmann::json letters = nlohmann::json::array();
  for (const auto& [name, t] : word) {
    factors.push_back(resolve_generator(st, name) * t);
    letters.push_back({{"generator", name}, {"t", t}});
  }
  const GroupElement g = GroupElement::word(st.alg, factors);
  const CosetPoint p{g, st.structure};

  nlohmann::json r;
  r["command"] = "wedge";
  r["config"] = cfg.to_json();
  r["word"] = letters;
  const bool positive = positivity_member(g, cone);
  r["positivity_member"] = positive;
  r["geodesic_orbit"] = to_string(geodesic_orbit_test(p, cone));

  if (factors.size() == 1 && s.q_k.residual(factors.front()) < cfg.eq_tol) {
    r["omega"] = {{"member", omega_member(factors.front(), s, cfg.tolerances())},
                  {"spectral_radius", spectral_radius(ad_matrix(factors.front()))}};
  } else {
    r["omega"] = nullptr;
  }

  r["ball_status"] = nullptr;
  if (s.g_plus.dim() > 0 && st.alg->family() != Family::gl) {
    try {
      const TripleSystem ts(st.structure);
      r["ball_status"] = to_string(ball_status(ts, g));
    } catch (const NumericError&) {
      // the triple system on g_1 is not positive for this Euler element
    }
  }

  const auto chart = coset_chart(p);
  r["coset_chart"] = chart ? nlohmann::json(vec_json(*chart)) : nlohmann::json(nullptr);
  r["witness"] = nullptr;
  if (chart && positive) {
    if (const auto w = wedge_factor_witness(p, cone)) {
      r["witness"] = {{"g0", matrix_json(w->g0.matrix())},
                      {"x_qk", vec_json(s.q_k.local_coords(w->x))},
                      {"iterations", w->iterations},
                      {"residual", w->residual},
                      {"spectral_radius", spectral_radius(ad_matrix(w->x))}};
    }
  }
  return {0, r};
}

CommandResult cmd_verify(const std::string& suite, const RunConfig& cfg) {
  const auto& names = suite_names();
  std::vector<std::string> run;
  if (suite == "all") {
    run = names;
  } else if (std::find(names.begin(), names.end(), suite) != names.end()) {
    run = {suite};
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  if (cfg.samples < 1) throw UsageError("--samples must be positive");
  if (cfg.grid < 2) throw UsageError("--grid must be at least 2");
  if (!(cfg.tmax > 0.0)) throw UsageError("--tmax must be positive");

  VerifyConfig vc;
  vc.tol = cfg.tolerances();
  vc.seed = cfg.seed;
  vc.samples = cfg.samples;
  vc.grid = cfg.grid;
  vc.tmax = cfg.tmax;

  nlohmann::json r;
  r["command"] = "verify";
  r["config"] = cfg.to_json();
  r["config"].erase("algebra");
  r["config"].erase("euler");
  nlohmann::json suites = nlohmann::json::array();
  bool ok = true;
  long agree = 0, total = 0, boundary = 0;
  for (const auto& name : run) {
    const SuiteReport rep = run_suite(name, vc);
    ok = ok && rep.passed();
    suites.push_back(rep.to_json());
    for (const auto& c : rep.checks) {
      total += c.total;
      agree += c.total - c.failures;
      boundary += c.boundary;
    }
  }
  r["suites"] = suites;
  r["passed"] = ok;
  r["agree"] = agree;
  r["total"] = total;
  r["boundary"] = boundary;
  return {ok ? 0 : 1, r};
}

namespace {

void flatten(const nlohmann::json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string key = prefix + "[" + std::to_string(i) + "]";
      if (j[i].is_object() && j[i].contains("id")) key = prefix + "." + j[i]["id"].get<std::string>();
      else if (j[i].is_object() && j[i].contains("suite")) key = prefix + "." + j[i]["suite"].get<std::string>();
      flatten(j[i], key, rows);
    }
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

}  // namespace

std::string render(const nlohmann::json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  return out.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Causal Euler elements, wedge domains and de Sitter checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string word_text;
  std::string suite;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra, "algebra spec: sl:N, gl:N, so:P,Q, sp:2N");
    sub->add_option("--euler", cfg.euler, "Euler element label (h, h1.., boost, hn)");
    sub->add_option("--tol", cfg.eq_tol, "equality tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--band", cfg.band, "boundary band")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
    sub->add_option("--output", cfg.output, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--grid", cfg.grid, "de Sitter grid side")->check(CLI::Range(2, 100000));
    sub->add_option("--tmax", cfg.tmax, "observer time range")->check(CLI::PositiveNumber);
  };
  auto* info = app.add_subcommand("info", "dimensions, grading and cone summary");
  add_common(info);
  auto* wedge = app.add_subcommand("wedge", "wedge verdicts for a word of exponentials");
  add_common(wedge);
  wedge->add_option("--word", word_text, "letters gen:t separated by commas, e.g. z:0.5,h:1");
  auto* verify = app.add_subcommand("verify", "run a property suite");
  add_common(verify);
  verify->add_option("suite", suite, "grading, cones, jts, flows, desitter, atlas or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    CommandResult res;
    if (*info) res = cmd_info(cfg);
    else if (*wedge) res = cmd_wedge(cfg, parse_word(word_text));
    else res = cmd_verify(suite, cfg);
    out << render(res.report, cfg.output);
    return res.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const AtlasError& e) {
    err << "atlas error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ncc
