#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "entdetect/criteria.hpp"

namespace entdetect {
namespace scans {

inline constexpr std::uint64_t kDefaultSeed = 12345;

// Uniform inclusive grid "lo:hi:n"; n == 1 degenerates to {lo}.
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int n = 101;

  double at(int i) const;
  static Grid parse(const std::string& text);
  std::string spec() const;
};

// White-noise robustness of the 3x3 bound entangled family over an (s, p)
// grid, one sweep per simplex trace t.
struct HorodeckiConfig {
  Grid s{0.0, 1.0, 101};
  Grid p{0.0, 1.0, 101};
  std::vector<double> t;  // empty means the CCNR..ESIC ladder for d = 3
};

struct HorodeckiCell {
  double s = 0.0;
  double p = 0.0;
  double t = 0.0;
  double statistic = 0.0;
  double bound = 0.0;
  bool detected = false;
};

std::vector<double> default_t_ladder(int d);
std::vector<HorodeckiCell> horodecki_cells(const HorodeckiConfig& config);
void scan_horodecki(const HorodeckiConfig& config, std::ostream& out);

// Detection fractions over Hilbert-Schmidt random d x d states, sweeping the
// simplex trace t and the sarbicki offset h over the same grid.
struct RandomScanConfig {
  std::vector<int> dims{2, 3, 5};
  int samples = 2000;
  std::uint64_t seed = kDefaultSeed;
  Grid param{0.0, 5.0, 26};
};

struct FractionRow {
  int dim = 0;
  double param = 0.0;
  double fraction_obs1 = 0.0;
  double fraction_sarbicki = 0.0;
};

std::vector<FractionRow> random_fractions(const RandomScanConfig& config);
void scan_random(const RandomScanConfig& config, std::ostream& out);

// Werner family sweep: sarbicki(h), the simplex-trace criterion at t, and the
// equal-dimension trace pair at t, per phi.
struct WernerConfig {
  int d = 3;
  Grid phi{-1.0, 1.0, 201};
  double t = 0.0;  // 0 means esic_trace(d)
  double h = 0.0;
};

struct WernerRow {
  double phi = 0.0;
  criteria::CriterionReport sarbicki;
  criteria::CriterionReport obs1;
  criteria::Observation2Report obs2;
};

std::vector<WernerRow> werner_rows(const WernerConfig& config);
void scan_werner(const WernerConfig& config, std::ostream& out);

// Noise thresholds for the tiles family and detection fractions for random
// chessboard states, per simplex trace t.
struct UpbChessboardConfig {
  Grid p{0.0, 1.0, 101};
  std::vector<double> t;  // empty means the d = 3 ladder
  int samples = 5000;
  std::uint64_t seed = kDefaultSeed;
};

struct UpbRow {
  double t = 0.0;
  bool found = false;
  double p_star = 0.0;  // smallest grid p detected, when found
};

struct ChessboardRow {
  double t = 0.0;
  int detected = 0;
  double fraction = 0.0;
};

std::vector<UpbRow> upb_thresholds(const UpbChessboardConfig& config);
std::vector<ChessboardRow> chessboard_fractions(
    const UpbChessboardConfig& config);
void scan_upb_chessboard(const UpbChessboardConfig& config, std::ostream& out);

}  // namespace scans
}  // namespace entdetect
