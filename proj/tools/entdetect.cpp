#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entdetect/errors.hpp"
#include "entdetect/io.hpp"
#include "entdetect/lft.hpp"
#include "entdetect/observables.hpp"
#include "entdetect/scans.hpp"
#include "entdetect/states.hpp"
#include "entdetect/version.hpp"
#include "entdetect/witness.hpp"

namespace {

using entdetect::BipartiteState;
using entdetect::MeasurementTuple;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitEntangled = 3;

// Parsed form of the check grammar:
//   vicente | sarbicki:hA=..,hB=.. | simplex:tA=..,tB=.. | ccnr | esic
//   | obs2:t=.. | ppt
struct CriterionSpec {
  std::string name;
  std::map<std::string, double> params;

  double get(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

CriterionSpec parse_criterion(const std::string& text) {
  CriterionSpec spec;
  const std::size_t colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw entdetect::InvalidArgumentError(
            "criterion: expected key=value, got \"" + item + "\"");
      }
      try {
        spec.params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw entdetect::InvalidArgumentError(
            "criterion: bad numeric value in \"" + item + "\"");
      }
    }
  }
  return spec;
}

// Tuple pair for the tuple-based presets; rejects obs2/ppt.
std::pair<MeasurementTuple, MeasurementTuple> preset_tuples(
    const CriterionSpec& spec, const BipartiteState& state) {
  namespace obs = entdetect::observables;
  const int da = state.dim_a;
  const int db = state.dim_b;
  if (spec.name == "vicente") {
    return {obs::tuple_vicente(da), obs::tuple_vicente(db)};
  }
  if (spec.name == "sarbicki") {
    return {obs::tuple_sarbicki(da, spec.get("hA", 0.0)),
            obs::tuple_sarbicki(db, spec.get("hB", 0.0))};
  }
  if (spec.name == "simplex") {
    return {obs::tuple_simplex(da, spec.get("tA", 0.0)),
            obs::tuple_simplex(db, spec.get("tB", 0.0))};
  }
  if (spec.name == "ccnr") {
    return {obs::tuple_simplex(da, obs::ccnr_trace(da)),
            obs::tuple_simplex(db, obs::ccnr_trace(db))};
  }
  if (spec.name == "esic") {
    return {obs::tuple_simplex(da, obs::esic_trace(da)),
            obs::tuple_simplex(db, obs::esic_trace(db))};
  }
  throw entdetect::InvalidArgumentError("unknown criterion: " + spec.name);
}

int run_check(const std::string& state_path, const std::string& criterion) {
  const BipartiteState state = entdetect::io::read_state_file(state_path);
  const CriterionSpec spec = parse_criterion(criterion);
  namespace crit = entdetect::criteria;

  json out;
  crit::Verdict verdict = crit::Verdict::Inconclusive;
  if (spec.name == "obs2") {
    const crit::Observation2Report report =
        crit::observation2_check(state, spec.get("t", 0.0));
    out = entdetect::io::observation2_to_json(report);
    out["criterion"] = criterion;
    verdict = report.verdict;
  } else if (spec.name == "ppt") {
    const double min_eig = crit::ppt_min_eigenvalue(state);
    verdict = crit::ppt_check(state);
    out = json{{"criterion", "ppt"},
               {"statistic", min_eig},
               {"bound", 0.0},
               {"margin", -min_eig},
               {"verdict", crit::to_string(verdict)}};
  } else {
    const auto [tuple_a, tuple_b] = preset_tuples(spec, state);
    crit::CriterionReport report =
        crit::theorem1_check(state, tuple_a, tuple_b);
    report.criterion = criterion;
    out = entdetect::io::report_to_json(report);
    verdict = report.verdict;
  }
  std::cout << out.dump(2) << "\n";
  return verdict == crit::Verdict::Entangled ? kExitEntangled : kExitOk;
}

int run_witness(const std::string& state_path, const std::string& criterion) {
  const BipartiteState state = entdetect::io::read_state_file(state_path);
  const CriterionSpec spec = parse_criterion(criterion);
  const auto [tuple_a, tuple_b] = preset_tuples(spec, state);
  const entdetect::witness::Witness w =
      entdetect::witness::build_witness(state, tuple_a, tuple_b);
  const double expectation =
      entdetect::witness::witness_expectation(w.op, state);
  const json out{{"criterion", criterion},
                 {"kappa", w.kappa},
                 {"expectation", expectation},
                 {"rank", w.rank},
                 {"W", entdetect::io::complex_matrix_to_json(w.op)}};
  std::cout << out.dump(2) << "\n";
  return expectation < -entdetect::criteria::kVerdictTol ? kExitEntangled
                                                         : kExitOk;
}

int run_normal_form(const std::string& state_path) {
  const BipartiteState state = entdetect::io::read_state_file(state_path);
  const entdetect::lft::NormalFormResult result =
      entdetect::lft::normal_form(state);
  const entdetect::RealMatrix t_tilde =
      entdetect::bloch::decompose_bipartite(result.rho_tilde).t;
  const json out{{"T_tilde", entdetect::io::real_matrix_to_json(t_tilde)},
                 {"residual", result.residual},
                 {"iterations", result.iterations},
                 {"F_A", entdetect::io::complex_matrix_to_json(result.filter_a)},
                 {"F_B", entdetect::io::complex_matrix_to_json(result.filter_b)}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

struct GenOptions {
  std::string family;
  int d = 3;
  int dim_a = 3;
  int dim_b = 3;
  int k = 4;
  double phi = 0.0;
  double s = 0.5;
  double p = 1.0;
  double m = 1.0, n = 1.0, a = 1.0, b = 1.0, c = 1.0, dd = 1.0;
  std::uint64_t seed = entdetect::scans::kDefaultSeed;
  std::uint64_t index = 0;
  std::string out_path;
};

int run_gen(const GenOptions& opt) {
  namespace st = entdetect::states;
  BipartiteState state;
  if (opt.family == "werner") {
    state = st::werner(opt.d, opt.phi);
  } else if (opt.family == "horodecki") {
    state = st::horodecki(opt.s, opt.p);
  } else if (opt.family == "upb") {
    state = st::upb_tiles(opt.p);
  } else if (opt.family == "chessboard") {
    state = st::chessboard(opt.m, opt.n, opt.a, opt.b, opt.c, opt.dd);
  } else if (opt.family == "random-chessboard") {
    state = st::random_chessboard(opt.seed, opt.index);
  } else if (opt.family == "random-hs") {
    state = st::random_hs(opt.dim_a, opt.dim_b, opt.seed, opt.index);
  } else if (opt.family == "random-separable") {
    state = st::random_separable(opt.dim_a, opt.dim_b, opt.k, opt.seed,
                                 opt.index);
  } else if (opt.family == "max-entangled") {
    state = st::max_entangled(opt.d);
  } else {
    throw entdetect::InvalidArgumentError("unknown family: " + opt.family);
  }
  if (opt.out_path.empty()) {
    std::cout << entdetect::io::state_to_json(state).dump(2) << "\n";
  } else {
    entdetect::io::write_state_file(opt.out_path, state);
  }
  return kExitOk;
}

void print_simplex(int n, std::ostream& os) {
  const entdetect::RealMatrix vertices =
      entdetect::observables::simplex_vertices(n);
  os << "# cmd=simplex n=" << n << " version=" << entdetect::kVersion << "\n";
  char buf[40];
  for (Eigen::Index i = 0; i < vertices.rows(); ++i) {
    for (Eigen::Index j = 0; j < vertices.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", vertices(i, j));
      os << (j > 0 ? "," : "") << buf;
    }
    os << "\n";
  }
}

// Writes to the file when a path is given, else to stdout.
template <typename Fn>
int with_output(const std::string& out_path, Fn&& fn) {
  if (out_path.empty()) {
    fn(std::cout);
    return kExitOk;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw entdetect::IoError("cannot open output file: " + out_path);
  }
  fn(file);
  if (!file) {
    throw entdetect::IoError("failed writing: " + out_path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite entanglement detection via correlation-matrix "
               "trace-norm criteria"};
  app.set_version_flag("--version", entdetect::kVersion);
  app.require_subcommand(1);

  std::string state_path;
  std::string criterion = "ccnr";
  std::string out_path;
  std::string grid_spec;

  CLI::App* check = app.add_subcommand("check", "Evaluate one criterion");
  check->add_option("--state", state_path, "State JSON file")->required();
  check->add_option("--criterion", criterion,
                    "vicente | sarbicki:hA=..,hB=.. | simplex:tA=..,tB=.. | "
                    "ccnr | esic | obs2:t=.. | ppt");

  CLI::App* witness_cmd =
      app.add_subcommand("witness", "Build the optimal witness");
  witness_cmd->add_option("--state", state_path, "State JSON file")->required();
  witness_cmd->add_option("--criterion", criterion, "Tuple-based preset");

  CLI::App* nf = app.add_subcommand("normal-form", "Filter normal form");
  nf->add_option("--state", state_path, "State JSON file")->required();

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Emit a zoo state");
  gen_cmd
      ->add_option("--family", gen.family,
                   "werner | horodecki | upb | chessboard | random-chessboard "
                   "| random-hs | random-separable | max-entangled")
      ->required();
  gen_cmd->add_option("--d", gen.d, "Local dimension");
  gen_cmd->add_option("--dA", gen.dim_a, "Dimension of A");
  gen_cmd->add_option("--dB", gen.dim_b, "Dimension of B");
  gen_cmd->add_option("--k", gen.k, "Number of product terms");
  gen_cmd->add_option("--phi", gen.phi, "Werner parameter");
  gen_cmd->add_option("--s", gen.s, "Family parameter s");
  gen_cmd->add_option("--p", gen.p, "Mixing weight with white noise");
  gen_cmd->add_option("--m", gen.m, "Chessboard m");
  gen_cmd->add_option("--n", gen.n, "Chessboard n");
  gen_cmd->add_option("--a", gen.a, "Chessboard a");
  gen_cmd->add_option("--b", gen.b, "Chessboard b");
  gen_cmd->add_option("--c", gen.c, "Chessboard c");
  gen_cmd->add_option("--dd", gen.dd, "Chessboard d");
  gen_cmd->add_option("--seed", gen.seed, "Global seed");
  gen_cmd->add_option("--index", gen.index, "Sample index");
  gen_cmd->add_option("--out", gen.out_path, "Output file (default stdout)");

  int simplex_n = 8;
  CLI::App* simplex_cmd =
      app.add_subcommand("simplex", "Regular simplex vertices");
  simplex_cmd->add_option("--n", simplex_n, "Ambient dimension")->required();
  simplex_cmd->add_option("--out", out_path, "Output file (default stdout)");

  entdetect::scans::HorodeckiConfig horodecki_cfg;
  std::vector<double> t_values;
  CLI::App* sh = app.add_subcommand("scan-horodecki",
                                    "(s, p) grid for the 3x3 bound entangled "
                                    "family");
  sh->add_option("--grid", grid_spec, "s and p grid as lo:hi:n");
  sh->add_option("--t", t_values, "Simplex traces")->delimiter(',');
  sh->add_option("--out", out_path, "Output CSV (default stdout)");

  entdetect::scans::RandomScanConfig random_cfg;
  CLI::App* sr = app.add_subcommand(
      "scan-random", "Detection fractions on Hilbert-Schmidt samples");
  sr->add_option("--samples", random_cfg.samples, "Samples per dimension");
  sr->add_option("--seed", random_cfg.seed, "Global seed");
  sr->add_option("--grid", grid_spec, "Trace/offset grid as lo:hi:n");
  sr->add_option("--dims", random_cfg.dims, "Local dimensions")
      ->delimiter(',');
  sr->add_option("--out", out_path, "Output CSV (default stdout)");

  entdetect::scans::WernerConfig werner_cfg;
  CLI::App* sw = app.add_subcommand("scan-werner", "Werner family sweep");
  sw->add_option("--d", werner_cfg.d, "Local dimension");
  sw->add_option("--grid", grid_spec, "phi grid as lo:hi:n");
  sw->add_option("--t", werner_cfg.t, "Simplex trace (0 = ESIC preset)");
  sw->add_option("--h-offset", werner_cfg.h, "Sarbicki offset");
  sw->add_option("--out", out_path, "Output CSV (default stdout)");

  entdetect::scans::UpbChessboardConfig upb_cfg;
  CLI::App* su = app.add_subcommand(
      "scan-upb-chessboard",
      "Noise thresholds for tiles states and chessboard fractions");
  su->add_option("--grid", grid_spec, "p grid as lo:hi:n");
  su->add_option("--t", t_values, "Simplex traces")->delimiter(',');
  su->add_option("--samples", upb_cfg.samples, "Chessboard samples");
  su->add_option("--seed", upb_cfg.seed, "Global seed");
  su->add_option("--out", out_path, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (check->parsed()) {
      return run_check(state_path, criterion);
    }
    if (witness_cmd->parsed()) {
      return run_witness(state_path, criterion);
    }
    if (nf->parsed()) {
      return run_normal_form(state_path);
    }
    if (gen_cmd->parsed()) {
      return run_gen(gen);
    }
    if (simplex_cmd->parsed()) {
      return with_output(out_path,
                         [&](std::ostream& os) { print_simplex(simplex_n, os); });
    }
    if (sh->parsed()) {
      if (!grid_spec.empty()) {
        horodecki_cfg.s = entdetect::scans::Grid::parse(grid_spec);
        horodecki_cfg.p = horodecki_cfg.s;
      }
      horodecki_cfg.t = t_values;
      return with_output(out_path, [&](std::ostream& os) {
        entdetect::scans::scan_horodecki(horodecki_cfg, os);
      });
    }
    if (sr->parsed()) {
      if (!grid_spec.empty()) {
        random_cfg.param = entdetect::scans::Grid::parse(grid_spec);
      }
      return with_output(out_path, [&](std::ostream& os) {
        entdetect::scans::scan_random(random_cfg, os);
      });
    }
    if (sw->parsed()) {
      if (!grid_spec.empty()) {
        werner_cfg.phi = entdetect::scans::Grid::parse(grid_spec);
      }
      return with_output(out_path, [&](std::ostream& os) {
        entdetect::scans::scan_werner(werner_cfg, os);
      });
    }
    if (su->parsed()) {
      if (!grid_spec.empty()) {
        upb_cfg.p = entdetect::scans::Grid::parse(grid_spec);
      }
      upb_cfg.t = t_values;
      return with_output(out_path, [&](std::ostream& os) {
        entdetect::scans::scan_upb_chessboard(upb_cfg, os);
      });
    }
  } catch (const entdetect::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
