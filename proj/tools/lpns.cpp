#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "lpns/fft.hpp"
#include "lpns/mnf.hpp"
#include "lpns/solver.hpp"
#include "lpns/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

lpns::MixedExponent parse_exponents(const std::string& text, int expected_dim) {
  std::vector<double> entries;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token == "inf" || token == "Inf" || token == "INF")
      entries.push_back(lpns::MixedExponent::inf);
    else
      entries.push_back(std::stod(token));
  }
  if (expected_dim > 0 && static_cast<int>(entries.size()) != expected_dim)
    throw lpns::ConfigError("expected " + std::to_string(expected_dim) +
                            " comma-separated exponents, got '" + text + "'");
  return lpns::MixedExponent(entries);
}

std::string exponent_string(const lpns::MixedExponent& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::isinf(p[i]) ? "inf" : std::to_string(p[i]);
  }
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw lpns::IoError("cannot write '" + path.string() + "'");
  out << text;
}

struct NormFlags {
  std::string flavor = "besov";
  double sigma = 0.0;
  bool sigma_set = false;
  std::string p = "2,2";
  double q = 2.0;

  lpns::BesovIndex index(int dim) const {
    const lpns::NormFlavor fl = flavor == "fourier-besov" ? lpns::NormFlavor::fourier_besov
                                                          : lpns::NormFlavor::besov;
    const lpns::MixedExponent pe = parse_exponents(p, dim);
    const double s = sigma_set ? sigma : lpns::critical_sigma(pe, fl);
    return {s, pe, q, fl};
  }
};

void add_norm_flags(CLI::App* cmd, NormFlags& flags) {
  cmd->add_option("--flavor", flags.flavor, "besov | fourier-besov")
      ->check(CLI::IsMember({"besov", "fourier-besov"}));
  cmd->add_option("--sigma", flags.sigma, "regularity index (default: critical)")
      ->each([&](const std::string&) { flags.sigma_set = true; });
  cmd->add_option("--p", flags.p, "comma list of exponents, inf allowed");
  cmd->add_option("--q", flags.q, "block summability exponent");
}

json block_breakdown(const lpns::RealField& f, const lpns::BesovIndex& idx,
                     const lpns::FilterBank& bank) {
  json blocks = json::array();
  const lpns::SpectralField F = lpns::dft(f);
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
    const double b = lpns::block_norm(bank, F, l, idx.p, idx.flavor);
    blocks.push_back({{"l", l}, {"block_norm", b}, {"weighted", std::exp2(l * idx.sigma) * b}});
  }
  return blocks;
}

int cmd_verify(const lpns::VerifyConfig& vcfg, const fs::path& out_dir, bool to_stdout) {
  const lpns::VerificationReport report = lpns::run_verify(vcfg);
  const std::string text = report.to_json().dump(2);
  if (to_stdout)
    std::cout << text << "\n";
  else
    write_text(out_dir / "verify_report.json", text);
  for (const auto& suite : report.suites) {
    std::string line = suite.skipped ? "[SKIP]" : (suite.pass() ? "[PASS]" : "[FAIL]");
    line += " " + suite.name;
    if (suite.skipped) line += " (" + suite.skip_reason + ")";
    std::cerr << line << "\n";
  }
  if (!report.pass()) {
    std::cerr << "verification failed\n";
    return 1;
  }
  return 0;
}

int cmd_solve(const std::string& input, NormFlags& norm_flags, double nu, double T, int n_t,
              double theta, int max_iters, double tol, bool project,
              const std::string& oracle, double k_hat_flag, const std::string& constants_path,
              bool no_gate, const fs::path& out_dir) {
  const lpns::RealField u0 = lpns::read_mnf(input);
  const lpns::Grid& grid = u0.grid();
  const lpns::FilterBank bank = lpns::FilterBank::build(grid);
  const lpns::BesovIndex idx = norm_flags.index(grid.dim());

  lpns::SolverConfig cfg;
  cfg.nu = nu;
  cfg.T = T;
  cfg.n_t = n_t;
  cfg.idx = idx;
  cfg.max_iters = max_iters;
  cfg.tol_residual = tol;
  cfg.project = project;

  // Bilinear constant: flag > cache > fresh estimate.
  const std::string cache_key = "d" + std::to_string(grid.dim()) + "_n" +
                                std::to_string(grid.points(0)) + "_p" +
                                exponent_string(idx.p) + "_nu" + std::to_string(nu) + "_" +
                                (idx.flavor == lpns::NormFlavor::besov ? "b" : "fb");
  json cache = json::object();
  if (!constants_path.empty() && fs::exists(constants_path)) {
    std::ifstream in(constants_path);
    in >> cache;
  }
  double k_hat = k_hat_flag;
  if (k_hat <= 0.0 && cache.contains(cache_key)) k_hat = cache[cache_key]["K_hat"];
  if (k_hat <= 0.0) {
    lpns::BilinearCorpusSpec corpus(lpns::FieldSpec{grid, grid.dim(),
                                     grid.min_frequency() * 1.9,
                                     grid.min_frequency() * 4.4, false, 0.6});
    corpus.seed = 1009;
    corpus.count = 3;
    corpus.T = T;
    corpus.n_t = n_t;
    const lpns::BesovIndex crit{lpns::critical_sigma(idx.p, idx.flavor), idx.p, idx.q,
                                idx.flavor};
    k_hat = lpns::estimate_bilinear_constant(cfg.semigroup(), corpus, crit, bank).k_hat;
    if (!constants_path.empty()) {
      cache[cache_key] = {{"K_hat", k_hat}, {"seed", corpus.seed}};
      write_text(constants_path, cache.dump(2));
    }
  }
  cfg.k_hat = k_hat;
  cfg.epsilon = theta / (4.0 * k_hat);

  // Smallness gate from the measured constants: the free evolution must fit
  // inside the contraction budget.
  const lpns::Trajectory z0 = lpns::heat_trajectory(u0, cfg, bank);
  const double z0_norm = lpns::z_norm(z0, idx, bank).total;
  const double data_norm = lpns::dyadic_norm(u0, idx, bank);
  if (!no_gate && z0_norm > cfg.epsilon)
    throw lpns::SmallnessError(
        "free evolution norm " + std::to_string(z0_norm) + " exceeds the budget " +
        std::to_string(cfg.epsilon) + "; rescale the data or pass --no-gate");

  const lpns::SolveResult result = lpns::picard_solve(u0, cfg, bank);

  fs::create_directories(out_dir);
  char name[32];
  for (int j = 0; j < result.solution.size(); ++j) {
    std::snprintf(name, sizeof name, "u_%04d.mnf1", j);
    lpns::write_mnf((out_dir / name).string(), result.solution.state(j));
  }

  std::ostringstream csv;
  csv << "t";
  for (int l = bank.l_min(); l <= bank.l_max(); ++l) csv << ",w_" << l;
  csv << ",besov_sigma,besov_sigma_plus_2,div_rel\n";
  for (int j = 0; j < result.solution.size(); ++j) {
    const lpns::RealField& u = result.solution.state(j);
    const lpns::SpectralField U = lpns::dft(u);
    csv << result.solution.time(j);
    for (int l = bank.l_min(); l <= bank.l_max(); ++l)
      csv << "," << std::exp2(l * idx.sigma) * lpns::block_norm(bank, U, l, idx.p, idx.flavor);
    const double un = lpns::l2_norm(u);
    csv << "," << lpns::dyadic_norm(U, idx, bank) << ","
        << lpns::dyadic_norm(U, idx.shifted(2.0), bank) << ","
        << (un > 0.0 ? lpns::l2_norm(lpns::divergence(u)) / un : 0.0) << "\n";
  }
  write_text(out_dir / "series.csv", csv.str());

  json run{{"K_hat", k_hat},
           {"epsilon", cfg.epsilon},
           {"theta", theta},
           {"data_besov_norm", data_norm},
           {"z0_norm", z0_norm},
           {"iterations", result.state.iterations},
           {"converged", result.converged},
           {"residuals", result.state.residual_history},
           {"z_norms", result.state.z_norm_history},
           {"final_norm", result.state.final_norm},
           {"norm_bound", {{"value", result.state.final_norm},
                           {"bound", 2.0 * result.state.z0_norm},
                           {"pass", result.state.norm_bound_ok}}}};

  if (oracle == "rk4") {
    const lpns::Trajectory reference = lpns::rk4_oracle(u0, cfg);
    run["oracle_linf_l2_distance"] =
        lpns::trajectory_linf_l2_distance(result.solution, reference);
  }
  write_text(out_dir / "run.json", run.dump(2));
  std::cout << run.dump(2) << "\n";
  return result.converged && result.state.norm_bound_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood-Paley / mixed-norm Besov toolbox and small-data "
               "Navier-Stokes mild solver"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  std::string out_dir = ".";
  bool json_stdout = false;
  app.add_option("--seed", seed, "corpus seed");
  app.add_option("--out-dir", out_dir, "output directory");
  app.add_flag("--json", json_stdout, "print reports to stdout");

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  bool quick = false;
  double sigma_override = 0.0;
  bool has_override = false;
  verify->add_flag("--quick", quick, "reduced corpus sizes");
  verify->add_option("--sigma", sigma_override, "override the solver suite index")
      ->each([&](const std::string&) { has_override = true; });

  // norm --------------------------------------------------------------------
  auto* norm = app.add_subcommand("norm", "evaluate a (Fourier-)Besov norm");
  NormFlags norm_flags;
  std::string norm_input;
  add_norm_flags(norm, norm_flags);
  norm->add_option("--input", norm_input, "MNF1 field file")->required();

  // decompose ---------------------------------------------------------------
  auto* decompose = app.add_subcommand("decompose", "per-block norms as CSV");
  std::string dec_input, dec_p = "2,2";
  decompose->add_option("--input", dec_input, "MNF1 field file")->required();
  decompose->add_option("--p", dec_p, "mixed exponents for the norm_mixed column");

  // estimate-constant ---------------------------------------------------------
  auto* estimate = app.add_subcommand("estimate-constant", "measure the bilinear constant");
  NormFlags est_flags;
  add_norm_flags(estimate, est_flags);
  double est_nu = 1.0, est_T = 0.0, est_L = 3.14159265358979323846;
  int est_d = 3, est_n = 32, est_nt = 65, est_corpus = 4;
  estimate->add_option("--nu", est_nu, "viscosity");
  estimate->add_option("--corpus-size", est_corpus, "first-generation corpus size");
  estimate->add_option("--d", est_d, "dimension");
  estimate->add_option("--n", est_n, "points per axis");
  estimate->add_option("--L", est_L, "period per axis");
  estimate->add_option("--T", est_T, "horizon (default: decay-based)");
  estimate->add_option("--nt", est_nt, "time samples");

  // solve ---------------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "Picard iteration for the mild solution");
  NormFlags solve_flags;
  add_norm_flags(solve, solve_flags);
  std::string solve_input, solve_oracle = "none", constants_path;
  double solve_nu = 1.0, solve_T = 1.0, solve_theta = 0.5, solve_tol = 1e-8, k_hat_flag = 0.0;
  int solve_nt = 65, solve_iters = 40;
  bool solve_project = false, no_gate = false;
  solve->add_option("--input", solve_input, "MNF1 initial data")->required();
  solve->add_option("--nu", solve_nu, "viscosity");
  solve->add_option("--T", solve_T, "horizon");
  solve->add_option("--nt", solve_nt, "time samples");
  solve->add_option("--theta", solve_theta, "fraction of the 1/(4K) budget");
  solve->add_option("--max-iters", solve_iters, "iteration cap");
  solve->add_option("--tol", solve_tol, "relative Z-norm residual target");
  solve->add_flag("--project", solve_project, "Leray-project non-solenoidal data");
  solve->add_option("--oracle", solve_oracle, "none | rk4")
      ->check(CLI::IsMember({"none", "rk4"}));
  solve->add_option("--k-hat", k_hat_flag, "bilinear constant (skip estimation)");
  solve->add_option("--constants", constants_path, "constants cache file");
  solve->add_flag("--no-gate", no_gate, "skip the smallness gate");

  CLI11_PARSE(app, argc, argv);

  try {
    const fs::path out(out_dir);
    if (verify->parsed()) {
      lpns::VerifyConfig vcfg;
      vcfg.seed = seed;
      vcfg.quick = quick;
      vcfg.sigma_override = sigma_override;
      vcfg.has_sigma_override = has_override;
      fs::create_directories(out);
      return cmd_verify(vcfg, out, json_stdout);
    }
    if (norm->parsed()) {
      const lpns::RealField f = lpns::read_mnf(norm_input);
      const lpns::FilterBank bank = lpns::FilterBank::build(f.grid());
      const lpns::BesovIndex idx = norm_flags.index(f.grid().dim());
      json out_json{{"norm", lpns::dyadic_norm(f, idx, bank)},
                    {"sigma", idx.sigma},
                    {"q", idx.q},
                    {"p", exponent_string(idx.p)},
                    {"flavor", idx.flavor == lpns::NormFlavor::besov ? "besov" : "fourier-besov"},
                    {"blocks", block_breakdown(f, idx, bank)}};
      std::cout << out_json.dump(2) << "\n";
      return 0;
    }
    if (decompose->parsed()) {
      const lpns::RealField f = lpns::read_mnf(dec_input);
      const lpns::FilterBank bank = lpns::FilterBank::build(f.grid());
      const lpns::MixedExponent p = parse_exponents(dec_p, f.grid().dim());
      const lpns::SpectralField F = lpns::dft(f);
      std::cout << "l,norm_l2,norm_mixed\n";
      for (int l = bank.l_min(); l <= bank.l_max(); ++l) {
        const lpns::SpectralField piece = lpns::block_spectrum(bank, F, l);
        std::cout << l << "," << lpns::l2_norm(piece) << ","
                  << lpns::mixed_norm(lpns::idft(piece), p) << "\n";
      }
      return 0;
    }
    if (estimate->parsed()) {
      const lpns::Grid grid = lpns::Grid::uniform(est_d, est_n, est_L);
      const lpns::FilterBank bank = lpns::FilterBank::build(grid);
      const lpns::BesovIndex idx = est_flags.index(est_d);
      lpns::BilinearCorpusSpec corpus(lpns::FieldSpec{grid, est_d,
                                       grid.min_frequency() * 0.95,
                                       grid.min_frequency() * 2.3, false, 0.6});
      corpus.seed = seed;
      corpus.count = est_corpus;
      corpus.n_t = est_nt;
      corpus.T = est_T > 0.0
                     ? est_T
                     : std::log(1e8) / (est_nu * grid.min_frequency() * grid.min_frequency());
      const lpns::BilinearEstimate est_out =
          lpns::estimate_bilinear_constant({est_nu}, corpus, idx, bank);
      json j{{"K_hat", est_out.k_hat},
             {"epsilon_threshold", std::min(1.0, est_nu) / (4.0 * est_out.k_hat)},
             {"corpus",
              {{"seed", est_out.seed},
               {"size", est_out.corpus_size},
               {"pairs", est_out.pairs},
               {"T", corpus.T},
               {"n_t", corpus.n_t},
               {"eta_lo", corpus.field.eta_lo},
               {"eta_hi", corpus.field.eta_hi}}},
             {"nu", est_nu}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (solve->parsed())
      return cmd_solve(solve_input, solve_flags, solve_nu, solve_T, solve_nt, solve_theta,
                       solve_iters, solve_tol, solve_project, solve_oracle, k_hat_flag,
                       constants_path, no_gate, out);
  } catch (const lpns::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const lpns::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
