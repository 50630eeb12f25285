// utq: batch driver for the half-differentiable loop-space toolkit.
// Subcommands mirror the library modules; inputs are JSON files, outputs are
// JSON reports (deterministic given --seed) and CSV tables.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "utq/acceptance.hpp"
#include "utq/composition.hpp"
#include "utq/derivations.hpp"
#include "utq/fock.hpp"
#include "utq/json_io.hpp"
#include "utq/qcalc.hpp"
#include "utq/rng.hpp"

namespace {

using namespace utq;
using Clock = std::chrono::steady_clock;

// sysexits-style: 65 bad data, 66 missing input, 70 internal
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitInternal = 70;

struct Output {
  std::string path;  // empty: stdout only
  void emit(const Report& rep) const {
    std::cout << rep.summary_table();
    if (!path.empty()) {
      write_json_file(path, rep.to_json());
      std::cout << "report written to " << path << '\n';
    }
  }
};

double require_positive(double value, const char* what) {
  if (!(value > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
  return value;
}

Json load_json(const std::string& path) {
  try {
    return read_json_file(path);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
}

Report run_loop_norm(const std::string& loop_path) {
  const FourierLoop f = loop_from_json(load_json(loop_path));
  Report rep;
  rep.experiment = "loop norm";
  rep.params = Json{{"f", loop_path}, {"modes", f.spec().N}};
  rep.rows.push_back(CheckRow::observation("h_half_norm", h_half_norm(f)));
  rep.rows.push_back(CheckRow::observation("h_half_norm_squared",
                                           h_half_norm(f) * h_half_norm(f)));
  return rep;
}

Report run_check_qs(const std::string& map_path, int samples, std::uint64_t seed, double tol) {
  const CircleMap h = map_from_json(load_json(map_path));
  const BaResult ba = ba_test(h, samples, seed);
  Report rep;
  rep.experiment = "map check-qs";
  rep.params = Json{{"map", map_path}, {"samples", samples}, {"seed", seed}};
  if (tol > 0.0) {
    rep.rows.push_back(CheckRow::defect("cross-ratio distortion eps_hat", ba.epsilon_hat, tol,
                                        ExpectationSource::kNumericalOracle));
  } else {
    rep.rows.push_back(CheckRow::observation("cross-ratio distortion eps_hat", ba.epsilon_hat));
  }
  CheckRow qs;
  qs.name = "quasisymmetric at some level eps < 1";
  qs.measured = ba.epsilon_hat;
  qs.tolerance = 1.0;
  qs.source = ExpectationSource::kNumericalOracle;
  qs.pass = ba.epsilon_hat < 1.0;
  rep.rows.push_back(qs);
  std::ostringstream worst;
  worst.precision(17);
  for (int i = 0; i < 4; ++i) {
    worst << (i ? ";" : "") << ba.worst.z[i].real() << "," << ba.worst.z[i].imag();
  }
  rep.rows.push_back(CheckRow::observation("worst quadruple recorded", 0.0, worst.str()));
  return rep;
}

Report run_op_th(const std::string& map_path, int modes, int grid, const std::string& out_dir) {
  const CircleMap h = map_from_json(load_json(map_path));
  const OneParticleOperator T = build_Th(h, ModeSpec{modes, false}, grid);
  std::filesystem::create_directories(out_dir);
  const auto csv_path = std::filesystem::path(out_dir) / "th.csv";
  const auto meta_path = std::filesystem::path(out_dir) / "th.json";
  write_text_file(csv_path.string(), operator_to_csv(T));
  write_json_file(meta_path.string(), operator_metadata(T));

  Report rep;
  rep.experiment = "op th";
  rep.params = Json{{"map", map_path}, {"modes", modes}, {"grid", grid}, {"out", out_dir}};
  rep.rows.push_back(CheckRow::observation("hs_norm_b", hs_norm_b(T)));
  const SiegelPointResult z = siegel_point_of(T);
  rep.rows.push_back(CheckRow::observation("siegel point asymmetry", z.asymmetry));
  rep.rows.push_back(CheckRow::observation("siegel point norm", z.Z.norm()));
  std::cout << "operator written to " << csv_path.string() << '\n';
  return rep;
}

Report run_op_symplectic(const std::string& map_path, int modes, int grid, int band, int trials,
                         std::uint64_t seed, double tol) {
  const CircleMap h = map_from_json(load_json(map_path));
  const OneParticleOperator T = build_Th(h, ModeSpec{modes, false}, grid);
  Report rep;
  rep.experiment = "op symplectic";
  rep.params = Json{{"map", map_path}, {"modes", modes},   {"grid", grid},
                    {"band", band},    {"trials", trials}, {"seed", seed}};
  rep.rows.push_back(CheckRow::defect("omega-invariance defect",
                                      check_symplectic(T, trials, band, seed), tol,
                                      ExpectationSource::kNumericalOracle));
  rep.rows.push_back(CheckRow::defect("block relations defect (interior band)",
                                      block_relations_defect(blocks(T), modes / 2), tol,
                                      ExpectationSource::kNumericalOracle));
  return rep;
}

Report run_qdiff(const std::string& loop_path, int modes, const std::string& check, int grid) {
  const FourierLoop raw = loop_from_json(load_json(loop_path));
  const ModeSpec spec{modes, true};
  FourierLoop f(spec, raw.is_real());
  for (int k = -raw.spec().N; k <= raw.spec().N; ++k) {
    if (k < 0 && raw.is_real()) continue;
    if (k == 0 && (!raw.spec().include_zero || raw.coeff(0) == cplx{0.0, 0.0})) continue;
    if (std::abs(k) > modes) continue;
    f.set(k, raw.coeff(k));
  }
  Report rep;
  rep.experiment = "qdiff " + check;
  rep.params = Json{{"f", loop_path}, {"modes", modes}, {"check", check}, {"grid", grid}};
  if (check == "hsnorm") {
    const HsVsSobolev r = hs_norm_vs_sobolev(f);
    rep.rows.push_back(CheckRow::observation("hs", r.hs));
    rep.rows.push_back(CheckRow::observation("sobolev", r.sobolev));
    rep.rows.push_back(CheckRow::defect("ratio vs universal constant",
                                        std::abs(r.ratio - kQdiffHsRatio), 1e-10,
                                        ExpectationSource::kNumericalOracle));
  } else if (check == "rank") {
    const int band = f.band();
    const int r = matrix_rank(quantum_differential(f, spec).op.m, 1e-10);
    rep.rows.push_back(CheckRow::observation("rank", r));
    rep.rows.push_back(CheckRow::defect("rank <= 2 * band", std::max(0, r - 2 * band), 0.0,
                                        ExpectationSource::kClosedForm));
  } else if (check == "kernel") {
    const OneParticleOperator closed = quantum_differential(f, spec).op;
    const OneParticleOperator kernel = quantum_differential_kernel_oracle(f, grid, spec);
    rep.rows.push_back(CheckRow::defect("kernel quadrature vs spectral assembly",
                                        (closed.m - kernel.m).cwiseAbs().maxCoeff(), 1e-8,
                                        ExpectationSource::kNumericalOracle));
  } else {
    throw std::invalid_argument("qdiff: unknown check '" + check + "'");
  }
  return rep;
}

Report run_siegel_act(const std::string& a_path, const std::string& b_path,
                      const std::string& z_path, const std::string& out_path) {
  // triplet CSVs only carry non-zero entries; conform both blocks to the
  // point's dimension
  const Mat Z = siegel_from_json(load_json(z_path));
  const int n = static_cast<int>(Z.rows());
  auto conform = [n](const Mat& m, const char* who) {
    if (m.rows() > n || m.cols() > n) {
      throw std::invalid_argument(std::string(who) + " block larger than the Siegel point");
    }
    Mat out = Mat::Zero(n, n);
    out.topLeftCorner(m.rows(), m.cols()) = m;
    return out;
  };
  SymplecticElement A{conform(matrix_from_csv(read_text_file(a_path)), "a"),
                      conform(matrix_from_csv(read_text_file(b_path)), "b")};
  const Mat W = siegel_act(A, Z);
  Report rep;
  rep.experiment = "siegel act";
  rep.params = Json{{"a", a_path}, {"b", b_path}, {"z", z_path}};
  rep.rows.push_back(CheckRow::defect("element relations defect", A.relations_defect(), 1e-8,
                                      ExpectationSource::kExactIdentity));
  const DiscCheck check = in_disc(W);
  rep.rows.push_back(CheckRow::defect("image in the disc (min_eig > 0)",
                                      check.ok ? 0.0 : 1.0, 0.0,
                                      ExpectationSource::kExactIdentity,
                                      "min_eig = " + std::to_string(check.min_eig)));
  if (!out_path.empty()) {
    write_json_file(out_path, siegel_to_json(W));
    std::cout << "image point written to " << out_path << '\n';
  }
  return rep;
}

Report run_fock_ccr(int modes, int degree) {
  const auto basis = FockBasis::make({modes, degree, 1.0});
  double worst = 0.0, worst_aa = 0.0;
  for (int m = 1; m <= modes; ++m) {
    const Mat am = annihilation(m, basis).m;
    for (int n = 1; n <= modes; ++n) {
      const Mat ns = creation(n, basis).m;
      const Mat an = annihilation(n, basis).m;
      const Mat comm = am * ns - ns * am;
      const Mat comm2 = am * an - an * am;
      const double delta = (m == n) ? 1.0 : 0.0;
      for (int col = 0; col < basis->dim(); ++col) {
        if (basis->degree(col) > degree - 2) continue;
        Vec v = comm.col(col);
        v(col) -= delta;
        worst = std::max(worst, v.cwiseAbs().maxCoeff());
        worst_aa = std::max(worst_aa, comm2.col(col).cwiseAbs().maxCoeff());
      }
    }
  }
  Report rep;
  rep.experiment = "fock ccr";
  rep.params = Json{{"modes", modes}, {"degree", degree}};
  rep.rows.push_back(CheckRow::defect("[a_m, a*_n] = delta I (interior)", worst, 1e-12,
                                      ExpectationSource::kNumericalOracle));
  rep.rows.push_back(CheckRow::defect("[a_m, a_n] = 0 (interior)", worst_aa, 1e-12,
                                      ExpectationSource::kNumericalOracle));
  return rep;
}

Report run_fock_coherent(const std::string& z_path, int degree) {
  const Mat Z = siegel_from_json(load_json(z_path));
  const auto basis = FockBasis::make({static_cast<int>(Z.rows()), degree, 1.0});
  const CoherentInner ci = coherent_inner(Z, Z, basis);
  Report rep;
  rep.experiment = "fock coherent";
  rep.params = Json{{"z", z_path}, {"degree", degree}};
  rep.rows.push_back(CheckRow::observation("truncated <e^{Z/2}, e^{Z/2}>", ci.truncated.real()));
  rep.rows.push_back(CheckRow::observation("det(1 - conj(Z) Z)^{-1/2}", ci.closed_form.real()));
  rep.rows.push_back(CheckRow::defect(
      "relative defect", std::abs(ci.truncated - ci.closed_form) / std::abs(ci.closed_form), 1e-8,
      ExpectationSource::kClosedForm));
  return rep;
}

Report run_fock_cocycle(const std::string& x1_path, const std::string& x2_path, int degree) {
  const SpAlgebraElement X1 = sp_element_from_json(load_json(x1_path));
  const SpAlgebraElement X2 = sp_element_from_json(load_json(x2_path));
  const auto basis = FockBasis::make({X1.dim(), degree, 1.0});
  const CocycleResult r = cocycle_defect(X1, X2, basis);
  Report rep;
  rep.experiment = "fock cocycle";
  rep.params = Json{{"x1", x1_path}, {"x2", x2_path}, {"degree", degree}};
  rep.rows.push_back(CheckRow::observation("operator scalar (re)", r.operator_scalar.real()));
  rep.rows.push_back(CheckRow::observation("operator scalar (im)", r.operator_scalar.imag()));
  rep.rows.push_back(CheckRow::defect("operator scalar vs trace formula",
                                      std::abs(r.operator_scalar - r.closed_form), 1e-10,
                                      ExpectationSource::kClosedForm));
  rep.rows.push_back(CheckRow::defect("off-scalar residual", r.off_scalar_residual, 1e-9,
                                      ExpectationSource::kExactIdentity));
  return rep;
}

Report run_fock_dgamma(const std::string& map_path, int modes, int cutoff, int grid, int degree,
                       const std::string& out_dir) {
  const CircleMap h = map_from_json(load_json(map_path));
  const MapQuantumGenerators gen = map_quantum_generators(h, modes, cutoff, grid);
  const auto basis = FockBasis::make({modes, degree, 1.0});
  const FockOperator d = map_derivation_operator(gen, basis);

  Report rep;
  rep.experiment = "fock dgamma";
  rep.params = Json{{"map", map_path}, {"modes", modes},   {"cutoff", cutoff},
                    {"grid", grid},    {"degree", degree}};
  rep.rows.push_back(CheckRow::defect("literal W+ compression of d^q h vanishes",
                                      gen.wplus_compression.norm(), 1e-15,
                                      ExpectationSource::kExactIdentity));
  rep.rows.push_back(CheckRow::observation("hankel generator |B|_F", gen.hankel_block.norm()));
  rep.rows.push_back(CheckRow::observation("dGamma(B) Frobenius norm", d.m.norm()));
  rep.rows.push_back(CheckRow::defect("dGamma(B) kills the vacuum",
                                      d.apply(vacuum(basis)).norm(), 1e-14,
                                      ExpectationSource::kExactIdentity));
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const auto gen_path = std::filesystem::path(out_dir) / "generator.csv";
    write_text_file(gen_path.string(), matrix_to_csv(gen.hankel_block));
    std::cout << "generator written to " << gen_path.string() << '\n';
  }
  return rep;
}

Report run_shale(const std::string& map_path, const std::vector<int>& sizes, int grid,
                 const std::string& out_csv) {
  const CircleMap h = map_from_json(load_json(map_path));
  Report rep;
  rep.experiment = "report shale";
  rep.params = Json{{"map", map_path}, {"sizes", sizes}, {"grid", grid}};
  std::ostringstream csv;
  csv.precision(17);
  csv << "N,hs_norm_b,successive_difference\n";
  double prev = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double norm = hs_norm_b(build_Th(h, ModeSpec{sizes[i], false}, grid));
    csv << sizes[i] << ',' << norm << ',' << (i == 0 ? 0.0 : std::abs(norm - prev)) << '\n';
    rep.rows.push_back(
        CheckRow::observation("hs_norm_b at N = " + std::to_string(sizes[i]), norm));
    prev = norm;
  }
  if (!out_csv.empty()) {
    write_text_file(out_csv, csv.str());
    std::cout << "table written to " << out_csv << '\n';
  } else {
    std::cout << csv.str();
  }
  return rep;
}

int run_suite(const std::string& config_path, const std::string& out_path) {
  const Json cfg = load_json(config_path);
  AcceptanceParams p;
  p.seed = cfg.value("seed", p.seed);
  p.modes = cfg.value("modes", p.modes);
  p.grid = cfg.value("grid", p.grid);
  p.hilbert_modes = cfg.value("hilbert_modes", p.hilbert_modes);
  p.hilbert_grid = cfg.value("hilbert_grid", p.hilbert_grid);
  p.fock_modes = cfg.value("fock_modes", p.fock_modes);
  p.fock_degree = cfg.value("fock_degree", p.fock_degree);
  p.ccr_degree = cfg.value("ccr_degree", p.ccr_degree);
  p.cocycle_degree = cfg.value("cocycle_degree", p.cocycle_degree);
  p.dgamma_degree = cfg.value("dgamma_degree", p.dgamma_degree);
  p.pair_trials = cfg.value("pair_trials", p.pair_trials);
  p.ba_samples = cfg.value("ba_samples", p.ba_samples);
  for (const char* field : {"modes", "grid", "fock_modes", "fock_degree", "pair_trials"}) {
    if (cfg.contains(field)) require_positive(cfg.at(field).get<double>(), field);
  }
  if (cfg.contains("tol")) require_positive(cfg.at("tol").get<double>(), "tol");

  std::vector<int> ids;
  if (cfg.contains("criteria")) {
    for (const auto& v : cfg.at("criteria")) ids.push_back(v.get<int>());
  } else {
    for (int i = 1; i <= 14; ++i) ids.push_back(i);
  }

  Json aggregated;
  aggregated["suite"] = config_path;
  aggregated["criteria"] = Json::array();
  bool ok = true;
  double total_ms = 0.0;
  for (int id : ids) {
    const Report rep = run_criterion(id, p);
    std::cout << (rep.pass() ? "[PASS] " : "[FAIL] ") << rep.experiment << "  ("
              << rep.wall_ms / 1000.0 << " s)\n";
    if (!rep.pass()) std::cout << rep.summary_table();
    aggregated["criteria"].push_back(rep.to_json());
    ok = ok && rep.pass();
    total_ms += rep.wall_ms;
  }
  aggregated["pass"] = ok;
  aggregated["wall_ms"] = total_ms;
  if (!out_path.empty()) {
    write_json_file(out_path, aggregated);
    std::cout << "suite report written to " << out_path << '\n';
  }
  std::cout << (ok ? "suite passed" : "suite FAILED") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator toolkit for quasisymmetric circle maps on the half-differentiable "
               "loop space: composition operators, the Siegel disc, Fock quantization and "
               "quantum differentials"};
  app.require_subcommand(1);

  std::string loop_path, map_path, out_path, check_kind = "hsnorm";
  std::string a_path, b_path, z_path, x1_path, x2_path, suite_path;
  int modes = 64, grid = 4096, degree = 24, band = 8, trials = 50, samples = 10000;
  int cutoff = 12;
  std::uint64_t seed = 20240915;
  double tol = 0.0;
  std::vector<int> sizes{16, 32, 64, 128};

  auto* loop_cmd = app.add_subcommand("loop", "loop-space quantities");
  auto* loop_norm = loop_cmd->add_subcommand("norm", "H^{1/2} norm of a loop");
  loop_norm->add_option("--f", loop_path, "loop JSON file")->required();
  loop_norm->add_option("--out", out_path, "report JSON path");

  auto* map_cmd = app.add_subcommand("map", "circle homeomorphisms");
  auto* check_qs = map_cmd->add_subcommand("check-qs", "cross-ratio quasisymmetry test");
  check_qs->add_option("--map", map_path, "map JSON file")->required();
  check_qs->add_option("--samples", samples, "quadruple count");
  check_qs->add_option("--seed", seed, "rng seed");
  check_qs->add_option("--tol", tol, "pass level for eps_hat (must be positive)");
  check_qs->add_option("--out", out_path, "report JSON path");

  auto* op_cmd = app.add_subcommand("op", "composition operators");
  auto* op_th = op_cmd->add_subcommand("th", "assemble T_h and export CSV");
  op_th->add_option("--map", map_path)->required();
  op_th->add_option("--modes", modes);
  op_th->add_option("--grid", grid);
  op_th->add_option("--out", out_path, "output directory")->required();
  auto* op_symp = op_cmd->add_subcommand("symplectic", "omega-invariance of T_h");
  op_symp->add_option("--map", map_path)->required();
  op_symp->add_option("--modes", modes);
  op_symp->add_option("--grid", grid);
  op_symp->add_option("--band", band);
  op_symp->add_option("--trials", trials);
  op_symp->add_option("--seed", seed);
  op_symp->add_option("--tol", tol);
  op_symp->add_option("--out", out_path);

  auto* qdiff = app.add_subcommand("qdiff", "quantum differential checks");
  qdiff->add_option("--f", loop_path)->required();
  qdiff->add_option("--modes", modes);
  qdiff->add_option("--check", check_kind, "hsnorm | rank | kernel");
  qdiff->add_option("--grid", grid);
  qdiff->add_option("--out", out_path);

  auto* siegel_cmd = app.add_subcommand("siegel", "Siegel disc");
  auto* siegel_act_cmd = siegel_cmd->add_subcommand("act", "fractional-linear action");
  siegel_act_cmd->add_option("--a", a_path, "a-block CSV")->required();
  siegel_act_cmd->add_option("--b", b_path, "b-block CSV")->required();
  siegel_act_cmd->add_option("--z", z_path, "point JSON")->required();
  siegel_act_cmd->add_option("--out", out_path, "image point JSON path");

  auto* fock_cmd = app.add_subcommand("fock", "truncated Fock space");
  auto* fock_ccr = fock_cmd->add_subcommand("ccr", "canonical commutation relations");
  fock_ccr->add_option("--modes", modes);
  fock_ccr->add_option("--degree", degree);
  fock_ccr->add_option("--out", out_path, "report JSON path");
  auto* fock_coh = fock_cmd->add_subcommand("coherent", "determinant inner-product formula");
  fock_coh->add_option("--z", z_path)->required();
  fock_coh->add_option("--degree", degree);
  fock_coh->add_option("--out", out_path, "report JSON path");
  auto* fock_coc = fock_cmd->add_subcommand("cocycle", "projective-representation cocycle");
  fock_coc->add_option("--x1", x1_path)->required();
  fock_coc->add_option("--x2", x2_path)->required();
  fock_coc->add_option("--degree", degree);
  fock_coc->add_option("--out", out_path, "report JSON path");
  auto* fock_dg = fock_cmd->add_subcommand("dgamma", "derivation generators from a map");
  fock_dg->add_option("--map", map_path)->required();
  fock_dg->add_option("--modes", modes);
  fock_dg->add_option("--cutoff", cutoff, "one-particle mode cutoff");
  fock_dg->add_option("--grid", grid);
  fock_dg->add_option("--degree", degree);
  fock_dg->add_option("--out", out_path, "output directory");

  auto* report_cmd = app.add_subcommand("report", "convergence tables");
  auto* shale = report_cmd->add_subcommand("shale", "|b|_F against the mode cutoff");
  shale->add_option("--map", map_path)->required();
  shale->add_option("--modes", sizes, "increasing cutoffs")->delimiter(',');
  shale->add_option("--grid", grid);
  shale->add_option("--out", out_path, "CSV path");

  auto* suite = app.add_subcommand("suite", "run the acceptance suite from a config");
  suite->add_option("config", suite_path, "suite JSON config")->required();
  suite->add_option("--out", out_path, "aggregated report path");

  CLI11_PARSE(app, argc, argv);

  try {
    Report rep;
    const auto start = Clock::now();
    if (loop_norm->parsed()) {
      rep = run_loop_norm(loop_path);
    } else if (check_qs->parsed()) {
      if (check_qs->count("--tol") && !(tol > 0.0)) {
        throw std::invalid_argument("tol must be positive");
      }
      rep = run_check_qs(map_path, samples, seed, tol);
    } else if (op_th->parsed()) {
      rep = run_op_th(map_path, modes, grid, out_path);
      out_path.clear();  // already written as a directory
    } else if (op_symp->parsed()) {
      if (op_symp->count("--tol") && !(tol > 0.0)) {
        throw std::invalid_argument("tol must be positive");
      }
      rep = run_op_symplectic(map_path, modes, grid, band, trials, seed,
                              tol > 0.0 ? tol : 1e-6);
    } else if (qdiff->parsed()) {
      if (!qdiff->count("--modes")) modes = 16;
      if (!qdiff->count("--grid")) grid = 1024;
      rep = run_qdiff(loop_path, modes, check_kind, grid);
    } else if (siegel_act_cmd->parsed()) {
      rep = run_siegel_act(a_path, b_path, z_path, out_path);
      out_path.clear();
    } else if (fock_ccr->parsed()) {
      if (!fock_ccr->count("--modes")) modes = 3;
      if (!fock_ccr->count("--degree")) degree = 12;
      rep = run_fock_ccr(modes, degree);
    } else if (fock_coh->parsed()) {
      rep = run_fock_coherent(z_path, degree);
    } else if (fock_coc->parsed()) {
      if (!fock_coc->count("--degree")) degree = 10;
      rep = run_fock_cocycle(x1_path, x2_path, degree);
    } else if (fock_dg->parsed()) {
      if (!fock_dg->count("--modes")) modes = 3;
      if (!fock_dg->count("--grid")) grid = 1024;
      if (!fock_dg->count("--degree")) degree = 8;
      rep = run_fock_dgamma(map_path, modes, cutoff, grid, degree,
                            fock_dg->count("--out") ? out_path : std::string{});
      out_path.clear();
    } else if (shale->parsed()) {
      rep = run_shale(map_path, sizes, grid, out_path);
      out_path.clear();
    } else if (suite->parsed()) {
      return run_suite(suite_path, out_path);
    }
    rep.wall_ms =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count() / 1e3;
    Output{out_path}.emit(rep);
    return rep.pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitData;
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    std::cerr << (msg.find("cannot open") != std::string::npos ? "missing file: " : "error: ")
              << msg << '\n';
    return msg.find("cannot open") != std::string::npos ? kExitNoInput : kExitInternal;
  }
}
