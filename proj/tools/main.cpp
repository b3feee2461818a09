// cone-kernels: command-line queries, classification reports, and
// verification suites for the symmetric-cone kernel library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ck/box.hpp"
#include "ck/classifier.hpp"
#include "ck/group.hpp"
#include "ck/kernels.hpp"
#include "ck/riesz.hpp"

using json = nlohmann::ordered_json;
using namespace ck;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitNumeric = 4;

struct RunConfig {
  std::string family = "sym-real";
  int rank = 2;
  int spin_k = 2;
  std::string lambda = "0";
  int degree_bound = 8;
  int n_points = 40;
  double tolerance = 1e-6;
  std::uint64_t seed = 12345;
  std::string format = "json";  // json | csv | text
  std::string output;           // empty: stdout
  bool general_domain = false;
  std::string suite = "all";
  int threads = 1;
};

AlgebraDescriptor make_descriptor(const RunConfig& cfg) {
  if (cfg.family == "sym-real") {
    if (cfg.rank < 1) throw DomainError("rank must be positive");
    return AlgebraDescriptor::sym_real(cfg.rank);
  }
  if (cfg.family == "herm-complex") {
    if (cfg.rank < 1) throw DomainError("rank must be positive");
    return AlgebraDescriptor::herm_complex(cfg.rank);
  }
  if (cfg.family == "spin") {
    if (cfg.spin_k < 1) throw DomainError("spin k must be positive");
    return AlgebraDescriptor::spin(cfg.spin_k);
  }
  throw DomainError("unsupported family: " + cfg.family);
}

json config_json(const RunConfig& cfg) {
  return json{{"family", cfg.family},
              {"rank", cfg.rank},
              {"spin_k", cfg.spin_k},
              {"lambda", cfg.lambda},
              {"degree_bound", cfg.degree_bound},
              {"n_points", cfg.n_points},
              {"tolerance", cfg.tolerance},
              {"seed", cfg.seed},
              {"general_domain", cfg.general_domain},
              {"suite", cfg.suite},
              {"threads", cfg.threads}};
}

json sig_json(const SigN& s) { return json(s); }

json sigs_json(const std::vector<SigN>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(sig_json(s));
  return out;
}

json rationals_json(const RationalVec& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string wallach_kind_name(WallachKind k) {
  switch (k) {
    case WallachKind::DiscretePoint: return "DiscretePoint";
    case WallachKind::ContinuousRange: return "ContinuousRange";
    case WallachKind::NotMember: return "NotMember";
  }
  return "NotMember";
}

json space_json(const SpaceDescriptor& sd) {
  json out;
  out["name"] = sd.render();
  out["lambda"] = to_string(sd.lambda);
  switch (sd.kind) {
    case SpaceKind::Zero: out["kind"] = "Zero"; break;
    case SpaceKind::Full: out["kind"] = "Full"; break;
    case SpaceKind::A_lambda: out["kind"] = "A_lambda"; break;
    case SpaceKind::A_lambda_lambdaprime:
      out["kind"] = "A_lambda_lambdaprime";
      out["lambda_prime"] = to_string(sd.lambda_prime);
      break;
    case SpaceKind::A_plus_kernel:
      out["kind"] = "A_plus_kernel";
      out["lambda_prime"] = to_string(sd.lambda_prime);
      out["s"] = sig_json(sd.s);
      break;
    case SpaceKind::H_lambda:
      out["kind"] = "H_lambda";
      out["general_stated"] = sd.general_stated;
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------

json cmd_algebra_info(const RunConfig& cfg) {
  auto desc = make_descriptor(cfg);
  auto [mv, mpv] = m_vectors(desc);
  json out;
  out["name"] = desc.name();
  out["rank"] = desc.rank;
  out["peirce_a"] = desc.peirce_a();
  out["dim_m"] = desc.dim_m();
  out["genus_p"] = to_string(desc.genus_p());
  out["m_vector"] = rationals_json(mv);
  out["m_prime_vector"] = rationals_json(mpv);
  return out;
}

json cmd_wallach(const RunConfig& cfg) {
  auto desc = make_descriptor(cfg);
  Rational lambda = parse_rational(cfg.lambda);
  auto v = in_wallach(lambda, desc);
  json out;
  out["lambda"] = to_string(lambda);
  out["member"] = v.member;
  out["kind"] = wallach_kind_name(v.kind);
  if (v.kind == WallachKind::DiscretePoint) out["discrete_j"] = v.discrete_j;
  return out;
}

json cmd_classify(const RunConfig& cfg) {
  auto desc = make_descriptor(cfg);
  Rational lambda = parse_rational(cfg.lambda);
  auto cls = classify_lambda(lambda, desc, cfg.degree_bound);

  json out;
  out["lambda"] = to_string(lambda);
  out["K_lambda"] = json(cls.K_lambda);
  out["q"] = cls.q_lambda;
  json per_k = json::array();
  for (const auto& pk : cls.per_k) {
    per_k.push_back(json{{"k", pk.k},
                         {"N", sigs_json(pk.N)},
                         {"killed_signatures", sigs_json(pk.killed)}});
  }
  out["per_k"] = per_k;

  json affine = json::array();
  for (const auto& sd : classify_affine_tube(lambda, desc, cfg.degree_bound))
    affine.push_back(space_json(sd));
  out["affine_spaces"] = affine;

  json moebius = json::array();
  auto mob = classify_moebius(lambda, desc, cfg.general_domain);
  for (const auto& sd : mob) moebius.push_back(space_json(sd));
  out["moebius_spaces"] = moebius;
  if (mob.empty()) out["note"] = "no invariant space";
  return out;
}

// ---------------------------------------------------------------------------
// verification suites

struct SuiteResult {
  std::string name;
  bool pass = false;
  double max_residual = 0;
  std::string detail;
};

SuiteResult suite_lemma_convolution(const RunConfig& cfg) {
  SuiteResult res{"lemma-convolution"};
  auto desc = AlgebraDescriptor::sym_real(2);
  auto box = build_box(desc);
  bool exact_ok = true;
  for (const auto& s : enumerate_N_Omega(2, 5)) {
    PolyX lhs = apply_box(box, conical_poly_exact(desc, s));
    SigN down = s;
    bool valid = true;
    for (auto& v : down)
      if (--v < 0) valid = false;
    Rational coeff = pochhammer_cone(rational_sig(s), SigN(2, 1), desc);
    PolyX rhs(desc.dim_m());
    if (valid && coeff != 0)
      rhs = ExactScalar(coeff) * conical_poly_exact(desc, down);
    if (!(lhs == rhs)) exact_ok = false;
  }
  std::mt19937_64 rng(cfg.seed);
  double worst = 0;
  PolyC f = to_numeric(conical_poly_exact(desc, {2, 1}));
  PolyC expect = to_numeric(apply_box(box, conical_poly_exact(desc, {2, 1})));
  for (int it = 0; it < 10; ++it) {
    Element z = random_tube_element(desc, rng);
    Complex num = apply_box_numeric(box, [&](const Element& w) { return f.eval(w); }, z);
    Complex ref = expect.eval(z);
    worst = std::max(worst, std::abs(num - ref) / (1.0 + std::abs(ref)));
  }
  res.max_residual = worst;
  res.pass = exact_ok && worst <= 1e-6;
  res.detail = exact_ok ? "symbolic coefficients exact" : "symbolic coefficient mismatch";
  return res;
}

SuiteResult suite_gram_positivity(const RunConfig& cfg) {
  SuiteResult res{"gram-positivity"};
  auto desc = make_descriptor(cfg);
  Rational lambda = parse_rational(cfg.lambda);
  double lam = to_double(lambda);
  bool member = in_wallach(lambda, desc).member;
  if (member) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<Element> pts;
    for (int i = 0; i < cfg.n_points; ++i) pts.push_back(random_tube_element(desc, rng));
    auto rep = gram_positivity(lam, pts, 1e-9);
    res.max_residual = std::max(0.0, -rep.min_eigenvalue);
    res.pass = rep.verdict == GramVerdict::PSD;
    res.detail = "member: PSD expected";
  } else {
    auto found = search_indefinite(desc, lam, 200, cfg.seed, cfg.tolerance, cfg.n_points);
    res.pass = found.has_value();
    if (found) res.max_residual = found->min_eigenvalue;
    res.detail = "non-member: Indefinite expected";
  }
  return res;
}

SuiteResult suite_intertwining(const RunConfig& cfg) {
  SuiteResult res{"intertwining"};
  auto desc = make_descriptor(cfg);
  Rational lambda = parse_rational(cfg.lambda);
  std::mt19937_64 rng(cfg.seed);
  std::vector<Element> pts;
  while (static_cast<int>(pts.size()) < 6) {
    Element z = random_tube_element(desc, rng, 0.6);
    double rad = tube_inner_radius(z);
    if (rad < 0.7) z = z + Complex(0, 0.75 - rad) * identity_element(desc);
    pts.push_back(z);
  }
  double worst = 0;
  for (const auto& s : enumerate_N_Omega(desc.rank, 2)) {
    auto basis = orbit_basis(desc, s, 4, cfg.seed + 17);
    for (const auto& f : basis.members)
      worst = std::max(worst, intertwining_residual(lambda, f, pts));
  }
  res.max_residual = worst;
  res.pass = worst <= 1e-5;
  return res;
}

json cmd_verify(const RunConfig& cfg, bool& all_pass) {
  std::vector<SuiteResult> suites;
  if (cfg.suite == "lemma-convolution" || cfg.suite == "all")
    suites.push_back(suite_lemma_convolution(cfg));
  if (cfg.suite == "gram-positivity" || cfg.suite == "all")
    suites.push_back(suite_gram_positivity(cfg));
  if (cfg.suite == "intertwining" || cfg.suite == "all")
    suites.push_back(suite_intertwining(cfg));
  if (suites.empty()) throw DomainError("unknown suite: " + cfg.suite);

  all_pass = true;
  json table = json::array();
  for (const auto& s : suites) {
    all_pass = all_pass && s.pass;
    table.push_back(json{{"suite", s.name},
                         {"pass", s.pass},
                         {"max_residual", s.max_residual},
                         {"detail", s.detail}});
  }
  json out;
  out["suites"] = table;
  out["all_pass"] = all_pass;
  return out;
}

// ---------------------------------------------------------------------------
// output formatting

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string render_report(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::ostringstream os;
    os << "field,value\n";
    for (const auto& [k, v] : rows) {
      std::string quoted = v;
      if (quoted.find(',') != std::string::npos || quoted.find('"') != std::string::npos) {
        std::string esc;
        for (char c : quoted) {
          if (c == '"') esc += '"';
          esc += c;
        }
        quoted = "\"" + esc + "\"";
      }
      os << k << "," << quoted << "\n";
    }
    return os.str();
  }
  if (format == "text") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::ostringstream os;
    for (const auto& [k, v] : rows) os << k << " = " << v << "\n";
    return os.str();
  }
  throw DomainError("unknown output format: " + format);
}

void emit(const json& report, const RunConfig& cfg) {
  std::string text = render_report(report, cfg.format);
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + cfg.output);
    out << text;
  }
}

json wrap(const std::string& command, const RunConfig& cfg, json result) {
  json report;
  report["schema_version"] = 1;
  report["command"] = command;
  report["config"] = config_json(cfg);
  report["result"] = std::move(result);
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("CONE_KERNELS_THREADS")) {
    int t = std::atoi(env);
    cfg.threads = t > 0 ? t : 1;
  }

  CLI::App app{"symmetric-cone kernel toolkit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c) {
    c->add_option("--family", cfg.family, "sym-real | herm-complex | spin");
    c->add_option("--rank", cfg.rank, "rank for the matrix families");
    c->add_option("--k", cfg.spin_k, "vector dimension for the spin family");
    c->add_option("--format", cfg.format, "json | csv | text");
    c->add_option("--output", cfg.output, "output path (default stdout)");
    c->add_option("--seed", cfg.seed, "random seed");
  };

  auto* algebra = app.add_subcommand("algebra", "algebra queries");
  auto* info = algebra->add_subcommand("info", "descriptor summary");
  add_common(info);

  auto* wallach = app.add_subcommand("wallach", "scalar Wallach membership");
  add_common(wallach);
  wallach->add_option("--lambda", cfg.lambda, "rational parameter p/q")->required();

  auto* classify = app.add_subcommand("classify", "invariant-space classification");
  add_common(classify);
  classify->add_option("--lambda", cfg.lambda, "rational parameter p/q")->required();
  classify->add_option("--bound", cfg.degree_bound, "signature degree bound");
  classify->add_flag("--general", cfg.general_domain, "general (non-tube) domain flag");

  auto* verify = app.add_subcommand("verify", "identity verification suites");
  add_common(verify);
  verify->add_option("--suite", cfg.suite,
                     "all | lemma-convolution | gram-positivity | intertwining");
  verify->add_option("--lambda", cfg.lambda, "rational parameter p/q");
  verify->add_option("--points", cfg.n_points, "cloud size");
  verify->add_option("--tolerance", cfg.tolerance, "indefiniteness certification tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cfg.tolerance <= 0 || cfg.tolerance >= 1) throw DomainError("tolerance must lie in (0,1)");
    if (cfg.degree_bound <= 0 || cfg.n_points <= 0) throw DomainError("bounds must be positive");
    if (info->parsed()) {
      emit(wrap("algebra-info", cfg, cmd_algebra_info(cfg)), cfg);
    } else if (wallach->parsed()) {
      emit(wrap("wallach", cfg, cmd_wallach(cfg)), cfg);
    } else if (classify->parsed()) {
      emit(wrap("classify", cfg, cmd_classify(cfg)), cfg);
    } else if (verify->parsed()) {
      bool all_pass = false;
      emit(wrap("verify", cfg, cmd_verify(cfg, all_pass)), cfg);
      if (!all_pass) return kExitVerifyFail;
    }
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const StructuralError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
