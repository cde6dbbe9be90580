#include "entdetect/scans.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "entdetect/errors.hpp"
#include "entdetect/observables.hpp"
#include "entdetect/parallel.hpp"
#include "entdetect/states.hpp"
#include "entdetect/version.hpp"

namespace entdetect {
namespace scans {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += num(values[i]);
  }
  return out;
}

}  // namespace

double Grid::at(int i) const {
  if (n == 1) {
    return lo;
  }
  return lo + (hi - lo) * static_cast<double>(i) / (n - 1);
}

Grid Grid::parse(const std::string& text) {
  Grid grid;
  char trailing = '\0';
  const int got = std::sscanf(text.c_str(), "%lf:%lf:%d%c", &grid.lo, &grid.hi,
                              &grid.n, &trailing);
  if (got != 3 || grid.n < 1) {
    throw InvalidArgumentError("grid: expected lo:hi:n with n >= 1, got \"" +
                               text + "\"");
  }
  return grid;
}

std::string Grid::spec() const {
  return num(lo) + ":" + num(hi) + ":" + std::to_string(n);
}

std::vector<double> default_t_ladder(int d) {
  return {observables::ccnr_trace(d), 1.2, 1.5, observables::esic_trace(d)};
}

std::vector<HorodeckiCell> horodecki_cells(const HorodeckiConfig& config) {
  const std::vector<double> ts =
      config.t.empty() ? default_t_ladder(3) : config.t;
  const int cells_per_t = config.s.n * config.p.n;
  std::vector<HorodeckiCell> cells(ts.size() * cells_per_t);
  parallel_for(static_cast<int>(cells.size()), [&](int idx) {
    const int t_idx = idx / cells_per_t;
    const int rest = idx % cells_per_t;
    HorodeckiCell& cell = cells[idx];
    cell.t = ts[t_idx];
    cell.s = config.s.at(rest / config.p.n);
    cell.p = config.p.at(rest % config.p.n);
    const criteria::CriterionReport report = criteria::observation1_check(
        states::horodecki(cell.s, cell.p), cell.t, cell.t);
    cell.statistic = report.statistic;
    cell.bound = report.bound;
    cell.detected = report.verdict == criteria::Verdict::Entangled;
  });
  return cells;
}

void scan_horodecki(const HorodeckiConfig& config, std::ostream& out) {
  const std::vector<double> ts =
      config.t.empty() ? default_t_ladder(3) : config.t;
  out << "# cmd=scan-horodecki grid_s=" << config.s.spec()
      << " grid_p=" << config.p.spec() << " t=" << join(ts)
      << " version=" << kVersion << "\n";
  out << "s,p,t,statistic,bound,detected\n";
  for (const HorodeckiCell& cell : horodecki_cells(config)) {
    out << num(cell.s) << "," << num(cell.p) << "," << num(cell.t) << ","
        << num(cell.statistic) << "," << num(cell.bound) << ","
        << (cell.detected ? 1 : 0) << "\n";
  }
}

std::vector<FractionRow> random_fractions(const RandomScanConfig& config) {
  if (config.samples < 1) {
    throw InvalidArgumentError("scan-random: samples must be >= 1");
  }
  std::vector<FractionRow> rows;
  for (const int d : config.dims) {
    // detected flags per sample: [param][criterion], criterion 0 = obs1.
    std::vector<std::vector<int>> counts(
        config.param.n, std::vector<int>(2, 0));
    std::vector<std::vector<std::pair<bool, bool>>> flags(
        config.samples,
        std::vector<std::pair<bool, bool>>(config.param.n));
    parallel_for(config.samples, [&](int i) {
      const BipartiteState state = states::random_hs(d, d, config.seed, i);
      for (int k = 0; k < config.param.n; ++k) {
        const double x = config.param.at(k);
        flags[i][k].first =
            criteria::observation1_check(state, x, x).verdict ==
            criteria::Verdict::Entangled;
        flags[i][k].second = criteria::sarbicki_check(state, x, x).verdict ==
                             criteria::Verdict::Entangled;
      }
    });
    for (int i = 0; i < config.samples; ++i) {
      for (int k = 0; k < config.param.n; ++k) {
        counts[k][0] += flags[i][k].first ? 1 : 0;
        counts[k][1] += flags[i][k].second ? 1 : 0;
      }
    }
    for (int k = 0; k < config.param.n; ++k) {
      FractionRow row;
      row.dim = d;
      row.param = config.param.at(k);
      row.fraction_obs1 = static_cast<double>(counts[k][0]) / config.samples;
      row.fraction_sarbicki =
          static_cast<double>(counts[k][1]) / config.samples;
      rows.push_back(row);
    }
  }
  return rows;
}

void scan_random(const RandomScanConfig& config, std::ostream& out) {
  std::string dims;
  for (std::size_t i = 0; i < config.dims.size(); ++i) {
    dims += (i > 0 ? "," : "") + std::to_string(config.dims[i]);
  }
  out << "# cmd=scan-random seed=" << config.seed
      << " samples=" << config.samples << " grid=" << config.param.spec()
      << " dims=" << dims << " version=" << kVersion << "\n";
  out << "dim,samples,param,criterion,fraction\n";
  for (const FractionRow& row : random_fractions(config)) {
    out << row.dim << "," << config.samples << "," << num(row.param)
        << ",obs1," << num(row.fraction_obs1) << "\n";
    out << row.dim << "," << config.samples << "," << num(row.param)
        << ",sarbicki," << num(row.fraction_sarbicki) << "\n";
  }
}

std::vector<WernerRow> werner_rows(const WernerConfig& config) {
  const double t = config.t == 0.0 ? observables::esic_trace(config.d)
                                   : config.t;
  std::vector<WernerRow> rows(config.phi.n);
  parallel_for(config.phi.n, [&](int i) {
    WernerRow& row = rows[i];
    row.phi = config.phi.at(i);
    const BipartiteState state = states::werner(config.d, row.phi);
    row.sarbicki = criteria::sarbicki_check(state, config.h, config.h);
    row.obs1 = criteria::observation1_check(state, t, t);
    row.obs2 = criteria::observation2_check(state, t);
  });
  return rows;
}

void scan_werner(const WernerConfig& config, std::ostream& out) {
  const double t = config.t == 0.0 ? observables::esic_trace(config.d)
                                   : config.t;
  out << "# cmd=scan-werner d=" << config.d
      << " grid_phi=" << config.phi.spec() << " t=" << num(t)
      << " h=" << num(config.h) << " version=" << kVersion << "\n";
  out << "phi,criterion,statistic,bound,margin,detected\n";
  auto line = [&](double phi, const criteria::CriterionReport& report) {
    out << num(phi) << "," << report.criterion << "," << num(report.statistic)
        << "," << num(report.bound) << "," << num(report.margin) << ","
        << (report.verdict == criteria::Verdict::Entangled ? 1 : 0) << "\n";
  };
  for (const WernerRow& row : werner_rows(config)) {
    line(row.phi, row.sarbicki);
    line(row.phi, row.obs1);
    const criteria::CriterionReport& binding =
        row.obs2.lower.margin >= row.obs2.upper.margin ? row.obs2.lower
                                                       : row.obs2.upper;
    criteria::CriterionReport combined = binding;
    combined.verdict = row.obs2.verdict;
    line(row.phi, combined);
  }
}

std::vector<UpbRow> upb_thresholds(const UpbChessboardConfig& config) {
  const std::vector<double> ts =
      config.t.empty() ? default_t_ladder(3) : config.t;
  std::vector<UpbRow> rows(ts.size());
  std::vector<std::vector<char>> detected(
      ts.size(), std::vector<char>(config.p.n, 0));
  parallel_for(static_cast<int>(ts.size()) * config.p.n, [&](int idx) {
    const int t_idx = idx / config.p.n;
    const int p_idx = idx % config.p.n;
    detected[t_idx][p_idx] =
        criteria::observation1_check(states::upb_tiles(config.p.at(p_idx)),
                                     ts[t_idx], ts[t_idx])
                    .verdict == criteria::Verdict::Entangled
            ? 1
            : 0;
  });
  for (std::size_t k = 0; k < ts.size(); ++k) {
    rows[k].t = ts[k];
    for (int i = 0; i < config.p.n; ++i) {
      if (detected[k][i]) {
        rows[k].found = true;
        rows[k].p_star = config.p.at(i);
        break;
      }
    }
  }
  return rows;
}

std::vector<ChessboardRow> chessboard_fractions(
    const UpbChessboardConfig& config) {
  if (config.samples < 1) {
    throw InvalidArgumentError("scan-upb-chessboard: samples must be >= 1");
  }
  const std::vector<double> ts =
      config.t.empty() ? default_t_ladder(3) : config.t;
  std::vector<std::vector<char>> flags(
      config.samples, std::vector<char>(ts.size(), 0));
  parallel_for(config.samples, [&](int i) {
    const BipartiteState state = states::random_chessboard(config.seed, i);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      flags[i][k] = criteria::observation1_check(state, ts[k], ts[k])
                            .verdict == criteria::Verdict::Entangled
                        ? 1
                        : 0;
    }
  });
  std::vector<ChessboardRow> rows(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    rows[k].t = ts[k];
    for (int i = 0; i < config.samples; ++i) {
      rows[k].detected += flags[i][k];
    }
    rows[k].fraction = static_cast<double>(rows[k].detected) / config.samples;
  }
  return rows;
}

void scan_upb_chessboard(const UpbChessboardConfig& config, std::ostream& out) {
  const std::vector<double> ts =
      config.t.empty() ? default_t_ladder(3) : config.t;
  out << "# cmd=scan-upb-chessboard seed=" << config.seed
      << " samples=" << config.samples << " grid_p=" << config.p.spec()
      << " t=" << join(ts) << " version=" << kVersion << "\n";
  out << "family,t,p_star,fraction\n";
  for (const UpbRow& row : upb_thresholds(config)) {
    out << "upb," << num(row.t) << ","
        << (row.found ? num(row.p_star) : std::string()) << ",\n";
  }
  for (const ChessboardRow& row : chessboard_fractions(config)) {
    out << "chessboard," << num(row.t) << ",," << num(row.fraction) << "\n";
  }
}

}  // namespace scans
}  // namespace entdetect
