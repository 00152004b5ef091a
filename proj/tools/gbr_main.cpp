// Command-line front end: solve radius equations, sweep parameter tables,
// dump extremal data and class constants, run the verification suites.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbr/oracle.hpp"
#include "gbr/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoRadius = 2;

struct PsiFlags {
  std::string kind = "classical";  // classical|order-alpha|janowski|custom
  double alpha = 0.0;
  double d = 1.0;
  double e = -1.0;
  std::string file;

  void attach(CLI::App* cmd, const std::string& flag_name) {
    cmd->add_option(flag_name, kind, "psi model: classical|order-alpha|janowski|custom")
        ->envname("GBR_PSI");
    cmd->add_option("--alpha", alpha, "order of starlikeness (order-alpha)");
    cmd->add_option("--D", d, "Janowski D, -1 <= E < D <= 1");
    cmd->add_option("--E", e, "Janowski E");
    cmd->add_option("--psi-file", file, "coefficient file for a custom psi");
  }

  gbr::PsiModel resolve() const {
    if (kind == "classical") return gbr::PsiModel::classical();
    if (kind == "order-alpha") return gbr::PsiModel::order_alpha(alpha);
    if (kind == "janowski") return gbr::PsiModel::janowski(d, e);
    if (kind == "custom") {
      if (file.empty()) throw gbr::PreconditionError("custom psi needs --psi-file");
      return gbr::PsiModel::custom_from_file(file);
    }
    throw gbr::PreconditionError("unknown psi kind: " + kind);
  }
};

struct NumericFlags {
  std::string config_path;
  CLI::Option* opt_T = nullptr;
  CLI::Option* opt_root = nullptr;
  CLI::Option* opt_quad = nullptr;
  CLI::Option* opt_rmax = nullptr;
  CLI::Option* opt_theta = nullptr;
  CLI::Option* opt_seed = nullptr;
  CLI::Option* opt_format = nullptr;
  int T = 256;
  double root_tol = 1e-12;
  double quad_tol = 1e-11;
  double r_max = 1.0 - 1e-6;
  int theta_samples = 64;
  std::uint64_t seed = 1;
  std::string format = "csv";

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "key=value config file")->envname("GBR_CONFIG");
    opt_T = cmd->add_option("--T", T, "series truncation order")->envname("GBR_T");
    opt_root = cmd->add_option("--root-tol", root_tol, "root residual tolerance")
                   ->envname("GBR_ROOT_TOL");
    opt_quad = cmd->add_option("--quad-tol", quad_tol, "quadrature tolerance")
                   ->envname("GBR_QUAD_TOL");
    opt_rmax = cmd->add_option("--r-max", r_max, "scan range upper end")->envname("GBR_R_MAX");
    opt_theta = cmd->add_option("--theta-samples", theta_samples, "circle sample count")
                    ->envname("GBR_THETA_SAMPLES");
    opt_seed = cmd->add_option("--seed", seed, "suite seed")->envname("GBR_SEED");
    opt_format = cmd->add_option("--format", format, "output format: csv|json")
                     ->envname("GBR_FORMAT");
  }

  gbr::RunConfig resolve() const {
    gbr::RunConfig cfg;
    if (!config_path.empty()) cfg.load_file(config_path);
    // Explicit flags (or env values) override the config file.
    if (opt_T->count()) cfg.set("T", std::to_string(T));
    if (opt_root->count()) cfg.num.root_tol = root_tol;
    if (opt_quad->count()) cfg.num.quad_tol = quad_tol;
    if (opt_rmax->count()) cfg.num.r_max = r_max;
    if (opt_theta->count()) cfg.theta_samples = theta_samples;
    if (opt_seed->count()) cfg.seed = seed;
    if (opt_format->count()) cfg.set("format", format);
    return cfg;
  }

  bool t_given() const { return opt_T->count() > 0; }
};

gbr::CoeffBoundProvider resolve_bounds(const std::string& spec, const gbr::PsiModel& psi,
                                       int T) {
  if (spec == "auto") {
    switch (psi.kind()) {
      case gbr::PsiModel::Kind::Classical: return gbr::CoeffBoundProvider::classical_n();
      case gbr::PsiModel::Kind::OrderAlpha:
        return gbr::CoeffBoundProvider::order_alpha_product(psi.alpha());
      case gbr::PsiModel::Kind::Janowski:
        return gbr::CoeffBoundProvider::janowski_product(psi.d(), psi.e());
      case gbr::PsiModel::Kind::Custom:
        return gbr::CoeffBoundProvider::extremal_derived(gbr::build_extremal_pair(psi, T).f0);
    }
  }
  if (spec == "classical-n") return gbr::CoeffBoundProvider::classical_n();
  if (spec == "order-alpha") {
    if (psi.kind() != gbr::PsiModel::Kind::OrderAlpha)
      throw gbr::PreconditionError("order-alpha bounds need an order-alpha psi");
    return gbr::CoeffBoundProvider::order_alpha_product(psi.alpha());
  }
  if (spec == "janowski") {
    return gbr::CoeffBoundProvider::janowski_product(psi.d(), psi.e());
  }
  if (spec == "extremal")
    return gbr::CoeffBoundProvider::extremal_derived(gbr::build_extremal_pair(psi, T).f0);
  throw gbr::PreconditionError("unknown bounds spec: " + spec);
}

/// The psi model a class tag implies when the user gave only top-level
/// parameters (--alpha / --D / --E).
gbr::PsiModel psi_for_class(gbr::ClassTag tag, const PsiFlags& flags) {
  switch (tag) {
    case gbr::ClassTag::ClassicalStarlike: return gbr::PsiModel::classical();
    case gbr::ClassTag::OrderAlpha: return gbr::PsiModel::order_alpha(flags.alpha);
    case gbr::ClassTag::Janowski: return gbr::PsiModel::janowski(flags.d, flags.e);
    default: return flags.resolve();
  }
}

void emit_record(const gbr::ResultRecord& rec, const gbr::RunConfig& cfg, bool with_header) {
  if (cfg.format == gbr::RunConfig::Format::Json) {
    std::cout << gbr::json_record(rec) << '\n';
  } else {
    if (with_header) std::cout << gbr::csv_header() << '\n';
    std::cout << gbr::csv_row(rec) << '\n';
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

int run_radius(const gbr::RadiusProblem& p, const gbr::RunConfig& cfg) {
  gbr::ResultRecord rec = gbr::make_record(p);
  int exit_code = kExitOk;
  try {
    const gbr::RadiusResult res = gbr::solve(p);
    rec = gbr::make_record(p, res);
  } catch (const gbr::SolveError& e) {
    rec.status = gbr::to_string(e.kind);
    std::cerr << "no radius: " << e.what() << '\n';
    exit_code = kExitNoRadius;
  }
  emit_record(rec, cfg, true);
  return exit_code;
}

int run_table(gbr::ClassTag tag, const PsiFlags& psi_flags, const gbr::RunConfig& cfg,
              const std::string& betas, const std::string& ms, const std::string& ns,
              const std::string& weights_list, const std::string& bounds_spec) {
  const auto beta_list = split_list(betas);
  const auto m_list = split_list(ms);
  const auto n_list = split_list(ns);
  const auto w_list = split_list(weights_list);

  if (cfg.format == gbr::RunConfig::Format::Csv) std::cout << gbr::csv_header() << '\n';
  for (const std::string& b : beta_list)
    for (const std::string& m : m_list)
      for (const std::string& n : n_list)
        for (const std::string& w : w_list) {
          gbr::RadiusProblem p;
          p.tag = tag;
          p.psi = psi_for_class(tag, psi_flags);
          p.beta = std::stod(b);
          p.m = gbr::MExponent::parse(m);
          p.N = std::stoi(n);
          p.weights = gbr::WeightSequence::parse(w);
          p.num = cfg.num;
          if (tag == gbr::ClassTag::GenStarlike)
            p.bounds = resolve_bounds(bounds_spec, p.psi, p.num.T);
          gbr::ResultRecord rec = gbr::make_record(p);
          try {
            const gbr::RadiusResult res = gbr::solve(p);
            rec = gbr::make_record(p, res);
          } catch (const gbr::SolveError& e) {
            rec.status = gbr::to_string(e.kind);
          } catch (const std::exception& e) {
            rec.status = std::string("error:") + e.what();
          }
          emit_record(rec, cfg, false);
        }
  return kExitOk;
}

int run_verify(const std::string& suite, const gbr::RunConfig& cfg, int pairs, int subordinates,
               int growth_samples, double growth_r, int max_n, int T) {
  std::vector<gbr::SuiteReport> reports;
  const bool all = suite == "all";
  if (all || suite == "lemma") {
    reports.push_back(gbr::run_lemma_suite(cfg.seed, pairs > 0 ? pairs : 1000, T));
    reports.push_back(gbr::run_weighted_suite(cfg.seed, pairs > 0 ? pairs / 2 : 500, T));
  }
  if (all || suite == "operator") {
    reports.push_back(gbr::run_operator_suite(cfg.seed, pairs > 0 ? pairs : 1000, T, max_n));
  }
  if (all || suite == "growth") {
    reports.push_back(gbr::run_growth_suite(cfg.seed, growth_samples, gbr::PsiModel::classical(),
                                            growth_r, T));
  }
  if (all || suite == "radius") {
    reports.push_back(gbr::run_radius_suite(cfg.seed, subordinates, cfg.theta_samples, T));
  }
  if (reports.empty()) {
    std::cerr << "unknown suite: " << suite << " (expected lemma|operator|radius|growth|all)\n";
    return kExitUsage;
  }
  bool ok = true;
  for (const gbr::SuiteReport& rep : reports) {
    for (const std::string& line : rep.failure_lines) std::cout << line << '\n';
    std::cout << rep.name << ": " << (rep.ok() ? "PASS " : "FAIL ") << rep.passed << '/'
              << rep.passed + rep.failed << '\n';
    ok = ok && rep.ok();
  }
  return ok ? kExitOk : kExitNoRadius;
}

int run_constants(const gbr::PsiModel& psi, const gbr::RunConfig& cfg) {
  const double quad_tol = cfg.num.quad_tol;
  struct Row {
    const char* name;
    double value;
  };
  const Row rows[] = {
      {"starlike_distance", gbr::starlike_distance(psi, quad_tol)},
      {"convex_distance", gbr::convex_distance(psi, quad_tol)},
      {"ks_distance", gbr::ks_distance(psi, quad_tol)},
      {"cs_distance", gbr::cs_distance(psi, quad_tol)},
  };
  if (cfg.format == gbr::RunConfig::Format::Json) {
    nlohmann::ordered_json j;
    for (const Row& row : rows) j[row.name] = std::stod(gbr::format_g12(row.value));
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "constant,value\n";
    for (const Row& row : rows)
      std::cout << row.name << ',' << gbr::format_g12(row.value) << '\n';
  }
  return kExitOk;
}

int run_series(const gbr::PsiModel& psi, const std::string& which, int count,
               const gbr::RunConfig& cfg) {
  if (count < 1) throw gbr::PreconditionError("--count must be >= 1");
  const int T = std::max(cfg.num.T, count + 1);
  gbr::Series s(0);
  if (which == "psi") {
    s = gbr::psi_series(psi, T);
  } else {
    const gbr::ExtremalPair pair = gbr::build_extremal_pair(psi, T);
    if (which == "f0")
      s = pair.f0;
    else if (which == "kpsi")
      s = pair.k_psi;
    else if (which == "kprime")
      s = pair.k_psi_prime;
    else
      throw gbr::PreconditionError("unknown series name: " + which);
  }
  for (int n = 0; n < count; ++n) {
    const gbr::Complex c = s.coeff(n);
    if (std::abs(c.imag()) > 1e-15)
      std::cout << gbr::format_g12(c.real()) << ' ' << gbr::format_g12(c.imag()) << '\n';
    else
      std::cout << gbr::format_g12(c.real()) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Bohr-Rogosinski radii for Ma-Minda function classes"};
  app.require_subcommand(1);

  // ---- radius ----
  auto* radius = app.add_subcommand("radius", "solve one radius instance");
  std::string r_class;
  radius->add_option("--class", r_class, "problem class")->required();
  PsiFlags r_psi;
  r_psi.attach(radius, "--psi");
  NumericFlags r_num;
  r_num.attach(radius);
  double r_beta = 0.0;
  std::string r_m = "1";
  int r_n = 1;
  std::string r_weights = "tail:1";
  std::string r_bounds = "auto";
  radius->add_option("--beta", r_beta, "blend weight in [0,1]");
  radius->add_option("--m", r_m, "inner exponent, integer or 'inf'");
  radius->add_option("--N", r_n, "tail start index");
  radius->add_option("--weights", r_weights, "tail:N | odd | even | mask:a,b,...");
  radius->add_option("--bounds", r_bounds,
                     "coefficient bounds for gen-starlike: auto|classical-n|janowski|order-alpha|extremal");

  // ---- table ----
  auto* table = app.add_subcommand("table", "sweep a parameter grid");
  std::string t_class;
  table->add_option("--class", t_class, "problem class")->required();
  PsiFlags t_psi;
  t_psi.attach(table, "--psi");
  NumericFlags t_num;
  t_num.attach(table);
  std::string t_betas = "0";
  std::string t_ms = "1";
  std::string t_ns = "1";
  std::string t_weights = "tail:1";
  std::string t_bounds = "auto";
  table->add_option("--beta", t_betas, "comma list of beta values");
  table->add_option("--m", t_ms, "comma list of m values ('inf' allowed)");
  table->add_option("--N", t_ns, "comma list of N values");
  table->add_option("--weights", t_weights, "comma list of weight specs");
  table->add_option("--bounds", t_bounds, "bounds spec for gen-starlike");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the randomized verification suites");
  std::string v_suite = "all";
  int v_pairs = 0;
  int v_subordinates = 100;
  int v_growth_samples = 100;
  double v_growth_r = 0.4;
  int v_max_n = 3;
  verify->add_option("--suite", v_suite, "lemma|operator|radius|growth|all");
  verify->add_option("--pairs", v_pairs, "pair/trial count (0 = suite default)");
  verify->add_option("--subordinates", v_subordinates, "samples per golden instance");
  verify->add_option("--growth-samples", v_growth_samples, "samples for the growth suite");
  verify->add_option("--r", v_growth_r, "radius for the growth suite");
  verify->add_option("--n", v_max_n, "largest N for the operator axioms");
  NumericFlags v_num;
  v_num.attach(verify);

  // ---- constants ----
  auto* constants = app.add_subcommand("constants", "print the distance constants");
  PsiFlags c_psi;
  c_psi.attach(constants, "--class-psi");
  NumericFlags c_num;
  c_num.attach(constants);

  // ---- series ----
  auto* series_cmd = app.add_subcommand("series", "print extremal/psi coefficients");
  PsiFlags s_psi;
  s_psi.attach(series_cmd, "--class-psi");
  NumericFlags s_num;
  s_num.attach(series_cmd);
  std::string s_which = "f0";
  int s_count = 10;
  series_cmd->add_option("--which", s_which, "f0|kpsi|kprime|psi");
  series_cmd->add_option("--count", s_count, "number of coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (radius->parsed()) {
      const gbr::RunConfig cfg = r_num.resolve();
      gbr::RadiusProblem p;
      p.tag = gbr::class_tag_parse(r_class);
      p.psi = psi_for_class(p.tag, r_psi);
      p.beta = r_beta;
      p.m = gbr::MExponent::parse(r_m);
      p.N = r_n;
      p.weights = gbr::WeightSequence::parse(r_weights);
      p.num = cfg.num;
      if (p.tag == gbr::ClassTag::GenStarlike)
        p.bounds = resolve_bounds(r_bounds, p.psi, p.num.T);
      return run_radius(p, cfg);
    }
    if (table->parsed()) {
      return run_table(gbr::class_tag_parse(t_class), t_psi, t_num.resolve(), t_betas, t_ms,
                       t_ns, t_weights, t_bounds);
    }
    if (verify->parsed()) {
      const gbr::RunConfig cfg = v_num.resolve();
      // The suites default to a lighter truncation than the solvers.
      const int suite_T = v_num.t_given() ? cfg.num.T : 96;
      return run_verify(v_suite, cfg, v_pairs, v_subordinates, v_growth_samples, v_growth_r,
                        v_max_n, suite_T);
    }
    if (constants->parsed()) {
      return run_constants(c_psi.resolve(), c_num.resolve());
    }
    if (series_cmd->parsed()) {
      return run_series(s_psi.resolve(), s_which, s_count, s_num.resolve());
    }
  } catch (const gbr::SolveError& e) {
    std::cerr << "no radius: " << e.what() << '\n';
    return kExitNoRadius;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
