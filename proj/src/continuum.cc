// Copyright 2026 The Persuade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "persuade/continuum.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "persuade/errors.h"

namespace persuade {
namespace {

constexpr double kCutoffTieTol = 1e-9;
constexpr double kMinMass = 1e-15;

double SimpsonStep(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
    return left + right + diff / 15.0;
  }
  return SimpsonStep(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         SimpsonStep(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double AdaptiveSimpson(const std::function<double(double)>& f, double a,
                       double b, double tol) {
  if (b <= a) return 0.0;
  double fa = f(a);
  double fb = f(b);
  double fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return SimpsonStep(f, a, b, fa, fm, fb, whole, tol, 40);
}

double Clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Value of one cell under the problem's tie rule.
double CellValue(const ContinuumProblem& problem, double a, double b) {
  double mass = problem.prior->Cdf(b) - problem.prior->Cdf(a);
  if (mass <= kMinMass) return 0.0;
  double mean = ConditionalMean(problem, a, b);
  return mass * problem.utilities[ActionAtMean(problem, mean)];
}

double PartitionValue(const ContinuumProblem& problem,
                      const std::vector<double>& bp) {
  double v = 0.0;
  for (size_t i = 0; i + 1 < bp.size(); ++i) {
    v += CellValue(problem, bp[i], bp[i + 1]);
  }
  return v;
}

// Smallest x in [lo, hi] with g(x) >= target for increasing g; NaN if none.
double BisectIncreasing(const std::function<double(double)>& g, double lo,
                        double hi, double target) {
  if (g(hi) < target || g(lo) > target) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

double PriorDistribution::IntegrateCdf(double a, double b) const {
  return AdaptiveSimpson([this](double x) { return Cdf(x); }, a, b, 1e-13);
}

double UniformPrior::Cdf(double x) const { return Clamp01(x); }

double UniformPrior::IntegrateCdf(double a, double b) const {
  a = Clamp01(a);
  b = Clamp01(b);
  return 0.5 * (b * b - a * a);
}

PowerPrior::PowerPrior(double p) : p_(p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw ValidationError("power prior exponent must be positive");
  }
}

double PowerPrior::Cdf(double x) const { return std::pow(Clamp01(x), p_); }

double PowerPrior::IntegrateCdf(double a, double b) const {
  a = Clamp01(a);
  b = Clamp01(b);
  return (std::pow(b, p_ + 1.0) - std::pow(a, p_ + 1.0)) / (p_ + 1.0);
}

std::string PowerPrior::Name() const {
  std::ostringstream os;
  os << "power:" << p_;
  return os.str();
}

PiecewiseLinearPrior::PiecewiseLinearPrior(std::vector<double> xs,
                                           std::vector<double> fs)
    : xs_(std::move(xs)), fs_(std::move(fs)) {
  if (xs_.size() != fs_.size() || xs_.size() < 2 || xs_.front() != 0.0 ||
      xs_.back() != 1.0 || fs_.front() != 0.0 || fs_.back() != 1.0) {
    throw ValidationError(
        "piecewise linear prior needs knots from (0, 0) to (1, 1)");
  }
  for (size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i] > xs_[i - 1]) || !(fs_[i] > fs_[i - 1])) {
      throw ValidationError(
          "piecewise linear prior knots must strictly increase");
    }
  }
}

double PiecewiseLinearPrior::Cdf(double x) const {
  x = Clamp01(x);
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end()) return 1.0;
  size_t i = static_cast<size_t>(it - xs_.begin());
  double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  return fs_[i - 1] + t * (fs_[i] - fs_[i - 1]);
}

double PiecewiseLinearPrior::IntegrateCdf(double a, double b) const {
  a = Clamp01(a);
  b = Clamp01(b);
  if (b <= a) return 0.0;
  double total = 0.0;
  for (size_t i = 1; i < xs_.size(); ++i) {
    double lo = std::max(a, xs_[i - 1]);
    double hi = std::min(b, xs_[i]);
    if (hi <= lo) continue;
    total += 0.5 * (hi - lo) * (Cdf(lo) + Cdf(hi));
  }
  return total;
}

TabulatedPrior::TabulatedPrior(std::function<double(double)> cdf,
                               std::string name)
    : cdf_(std::move(cdf)), name_(std::move(name)) {}

std::shared_ptr<const PriorDistribution> ParsePrior(const std::string& spec) {
  if (spec == "uniform") return std::make_shared<UniformPrior>();
  if (spec.rfind("power:", 0) == 0) {
    try {
      return std::make_shared<PowerPrior>(std::stod(spec.substr(6)));
    } catch (const std::logic_error&) {
      throw ParseError("bad power prior: " + spec);
    }
  }
  if (spec.rfind("pwl:", 0) == 0) {
    std::vector<double> xs = {0.0};
    std::vector<double> fs = {0.0};
    std::stringstream ss(spec.substr(4));
    std::string knot;
    while (std::getline(ss, knot, ',')) {
      size_t colon = knot.find(':');
      if (colon == std::string::npos) throw ParseError("bad knot: " + knot);
      try {
        xs.push_back(std::stod(knot.substr(0, colon)));
        fs.push_back(std::stod(knot.substr(colon + 1)));
      } catch (const std::logic_error&) {
        throw ParseError("bad knot: " + knot);
      }
    }
    xs.push_back(1.0);
    fs.push_back(1.0);
    return std::make_shared<PiecewiseLinearPrior>(xs, fs);
  }
  throw ParseError("unknown prior: " + spec);
}

void ContinuumProblem::Validate() const {
  if (!prior) throw ValidationError("prior: missing");
  if (utilities.size() != cutoffs.size() + 1) {
    throw ValidationError("utilities: need one more entry than cutoffs");
  }
  for (size_t i = 0; i < cutoffs.size(); ++i) {
    if (!(cutoffs[i] > 0.0 && cutoffs[i] < 1.0)) {
      throw ValidationError("cutoffs: must lie in (0, 1)");
    }
    if (i > 0 && !(cutoffs[i] > cutoffs[i - 1])) {
      throw ValidationError("cutoffs: must be strictly increasing");
    }
  }
  for (double u : utilities) {
    if (!std::isfinite(u)) throw ValidationError("utilities: non-finite");
  }
}

double ConditionalMean(const ContinuumProblem& problem, double a, double b) {
  if (!(a >= 0.0 && b <= 1.0 && a < b)) {
    std::ostringstream os;
    os << "interval (" << a << ", " << b << "] is not inside [0, 1]";
    throw EmptyInterval(os.str());
  }
  const PriorDistribution& f = *problem.prior;
  double fa = f.Cdf(a);
  double fb = f.Cdf(b);
  double mass = fb - fa;
  if (mass <= kMinMass) {
    std::ostringstream os;
    os << "interval (" << a << ", " << b << "] has no prior mass";
    throw EmptyInterval(os.str());
  }
  // Integration by parts: int_a^b x dF = b F(b) - a F(a) - int_a^b F.
  double mean = (b * fb - a * fa - f.IntegrateCdf(a, b)) / mass;
  return std::min(b, std::max(a, mean));
}

PartitionSignal MakePartition(const ContinuumProblem& problem,
                              const std::vector<double>& breakpoints) {
  if (breakpoints.size() < 2 || breakpoints.front() != 0.0 ||
      breakpoints.back() != 1.0) {
    throw ValidationError("breakpoints must run from 0 to 1");
  }
  PartitionSignal s;
  s.breakpoints = breakpoints;
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) {
      throw ValidationError("breakpoints must be strictly increasing");
    }
    s.interval_masses.push_back(problem.prior->Cdf(breakpoints[i + 1]) -
                                problem.prior->Cdf(breakpoints[i]));
    s.interval_means.push_back(
        ConditionalMean(problem, breakpoints[i], breakpoints[i + 1]));
  }
  return s;
}

Envelopes ComputeEnvelopes(const ContinuumProblem& problem) {
  auto prior = problem.prior;
  const double m0 = prior->Mean();
  Envelopes e;
  e.c0 = [m0](double x) { return std::max(0.0, x - m0); };
  e.c1 = [prior](double x) { return prior->IntegrateCdf(0.0, x); };
  return e;
}

int ActionAtMean(const ContinuumProblem& problem, double mean) {
  const std::vector<double>& g = problem.cutoffs;
  for (size_t j = 0; j < g.size(); ++j) {
    if (std::abs(mean - g[j]) <= kCutoffTieTol) {
      // Below the cutoff is action j, above it j + 1.
      return problem.utilities[j + 1] > problem.utilities[j]
                 ? static_cast<int>(j + 1)
                 : static_cast<int>(j);
    }
  }
  return static_cast<int>(std::upper_bound(g.begin(), g.end(), mean) -
                          g.begin());
}

double SenderValueContinuum(const ContinuumProblem& problem,
                            const PartitionSignal& signal) {
  double v = 0.0;
  for (int i = 0; i < signal.cells(); ++i) {
    v += signal.interval_masses[i] *
         problem.utilities[ActionAtMean(problem, signal.interval_means[i])];
  }
  return v;
}

double IntegratedMeanCdf(const PartitionSignal& signal, double x) {
  double c = 0.0;
  for (int i = 0; i < signal.cells(); ++i) {
    c += signal.interval_masses[i] * std::max(0.0, x - signal.interval_means[i]);
  }
  return c;
}

PartitionResult OptimizePartition(const ContinuumProblem& problem, int k,
                                  int grid) {
  problem.Validate();
  if (k < 1) throw ValidationError("signals: k must be at least 1");
  if (grid < 10) throw ValidationError("grid must be at least 10");

  // The value is a sum over cells, so the exhaustive lattice search is a
  // dynamic program over (cells used, last breakpoint).
  const int g = grid;
  auto lattice = [g](int i) { return static_cast<double>(i) / g; };
  std::vector<std::vector<double>> cell(g + 1, std::vector<double>(g + 1, 0.0));
  for (int i = 0; i < g; ++i) {
    for (int j = i + 1; j <= g; ++j) {
      cell[i][j] = CellValue(problem, lattice(i), lattice(j));
    }
  }
  const double kNeg = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> best(k + 1, std::vector<double>(g + 1, kNeg));
  std::vector<std::vector<int>> from(k + 1, std::vector<int>(g + 1, -1));
  best[0][0] = 0.0;
  for (int c = 1; c <= k; ++c) {
    for (int j = 1; j <= g; ++j) {
      for (int i = 0; i < j; ++i) {
        if (best[c - 1][i] == kNeg) continue;
        double v = best[c - 1][i] + cell[i][j];
        if (v > best[c][j] + 1e-15) {
          best[c][j] = v;
          from[c][j] = i;
        }
      }
    }
  }
  int cells = 1;
  for (int c = 1; c <= k; ++c) {
    if (best[c][g] > best[cells][g] + 1e-12) cells = c;
  }
  std::vector<double> bp;
  for (int c = cells, j = g; c > 0; j = from[c][j], --c) bp.push_back(lattice(j));
  bp.push_back(0.0);
  std::reverse(bp.begin(), bp.end());

  // Within a lattice step the actions of the two neighbouring cells only
  // change where a cell mean crosses a cutoff, and between such crossings
  // the value is monotone in the breakpoint. So the candidates are the
  // crossings and the step ends.
  double value = PartitionValue(problem, bp);
  const double h = 1.0 / g;
  for (int sweep = 0; sweep < 4; ++sweep) {
    bool improved = false;
    for (size_t i = 1; i + 1 < bp.size(); ++i) {
      double lo = std::max(bp[i - 1] + 1e-12, bp[i] - h);
      double hi = std::min(bp[i + 1] - 1e-12, bp[i] + h);
      std::vector<double> cands = {lo, hi};
      const double left = bp[i - 1];
      const double right = bp[i + 1];
      auto left_mean = [&](double x) { return ConditionalMean(problem, left, x); };
      auto right_mean = [&](double x) {
        return ConditionalMean(problem, x, right);
      };
      for (double gamma : problem.cutoffs) {
        double a = BisectIncreasing(left_mean, lo, hi, gamma);
        if (std::isfinite(a)) cands.push_back(a);
        double b = BisectIncreasing(right_mean, lo, hi, gamma);
        if (std::isfinite(b)) cands.push_back(b);
      }
      for (double x : cands) {
        std::vector<double> trial = bp;
        trial[i] = x;
        double v = PartitionValue(problem, trial);
        if (v > value + 1e-12) {
          value = v;
          bp = trial;
          improved = true;
        }
      }
    }
    if (!improved) break;
  }

  PartitionResult out;
  out.signal = MakePartition(problem, bp);
  out.value = SenderValueContinuum(problem, out.signal);
  Envelopes env = ComputeEnvelopes(problem);
  out.envelope_violation = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < 1000; ++t) {
    double x = t / 999.0;
    double c = IntegratedMeanCdf(out.signal, x);
    out.envelope_violation =
        std::max({out.envelope_violation, env.c0(x) - c, c - env.c1(x)});
  }
  out.convex = true;
  for (int i = 1; i < out.signal.cells(); ++i) {
    if (!(out.signal.interval_means[i] > out.signal.interval_means[i - 1])) {
      out.convex = false;
    }
  }
  return out;
}

}  // namespace persuade
