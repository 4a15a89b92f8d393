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

#ifndef PERSUADE_CONTINUUM_H_
#define PERSUADE_CONTINUUM_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace persuade {

// A distribution on [0, 1] with a continuous CDF and full support.
class PriorDistribution {
 public:
  virtual ~PriorDistribution() = default;
  virtual double Cdf(double x) const = 0;
  // Integral of the CDF over [a, b]. Adaptive Simpson unless overridden.
  virtual double IntegrateCdf(double a, double b) const;
  double Mean() const { return 1.0 - IntegrateCdf(0.0, 1.0); }
  virtual std::string Name() const = 0;
};

class UniformPrior : public PriorDistribution {
 public:
  double Cdf(double x) const override;
  double IntegrateCdf(double a, double b) const override;
  std::string Name() const override { return "uniform"; }
};

// F(x) = x^p, p > 0.
class PowerPrior : public PriorDistribution {
 public:
  explicit PowerPrior(double p);
  double Cdf(double x) const override;
  double IntegrateCdf(double a, double b) const override;
  std::string Name() const override;

 private:
  double p_;
};

// Linear interpolation of (x, F(x)) knots from (0, 0) to (1, 1), strictly
// increasing.
class PiecewiseLinearPrior : public PriorDistribution {
 public:
  PiecewiseLinearPrior(std::vector<double> xs, std::vector<double> fs);
  double Cdf(double x) const override;
  double IntegrateCdf(double a, double b) const override;
  std::string Name() const override { return "piecewise_linear"; }

 private:
  std::vector<double> xs_;
  std::vector<double> fs_;
};

// Any callable CDF; integrals by quadrature.
class TabulatedPrior : public PriorDistribution {
 public:
  explicit TabulatedPrior(std::function<double(double)> cdf,
                          std::string name = "tabulated");
  double Cdf(double x) const override { return cdf_(x); }
  std::string Name() const override { return name_; }

 private:
  std::function<double(double)> cdf_;
  std::string name_;
};

// "uniform", "power:P" or "pwl:x1:f1,x2:f2,..." (interior knots).
std::shared_ptr<const PriorDistribution> ParsePrior(const std::string& spec);

// Action i (0-based) is taken when the posterior mean lies in
// [cutoffs[i-1], cutoffs[i]), with cutoffs[-1] = 0 and cutoffs[m] = 1.
struct ContinuumProblem {
  std::shared_ptr<const PriorDistribution> prior;
  std::vector<double> cutoffs;
  std::vector<double> utilities;

  void Validate() const;
};

struct PartitionSignal {
  std::vector<double> breakpoints;
  std::vector<double> interval_means;
  std::vector<double> interval_masses;

  int cells() const { return static_cast<int>(interval_means.size()); }
};

double ConditionalMean(const ContinuumProblem& problem, double a, double b);

// Builds the signal for 0 = x_0 < ... < x_K = 1.
PartitionSignal MakePartition(const ContinuumProblem& problem,
                              const std::vector<double>& breakpoints);

struct Envelopes {
  std::function<double(double)> c0;
  std::function<double(double)> c1;
};
Envelopes ComputeEnvelopes(const ContinuumProblem& problem);

// Action taken at a posterior mean; a mean within 1e-9 of a cutoff takes the
// sender-preferred of the two adjacent actions.
int ActionAtMean(const ContinuumProblem& problem, double mean);

double SenderValueContinuum(const ContinuumProblem& problem,
                            const PartitionSignal& signal);

// Integral of the CDF of posterior means up to x.
double IntegratedMeanCdf(const PartitionSignal& signal, double x);

struct PartitionResult {
  PartitionSignal signal;
  double value = 0.0;
  // Max violation of c0 <= c <= c1 over a 1000-point grid (<= 0 is inside).
  double envelope_violation = 0.0;
  bool convex = false;
};

// Exhaustive search over breakpoints on the 1/grid lattice with at most k
// cells, then per-breakpoint refinement toward the exact positions where a
// cell mean meets a cutoff.
PartitionResult OptimizePartition(const ContinuumProblem& problem, int k,
                                  int grid);

}  // namespace persuade

#endif  // PERSUADE_CONTINUUM_H_
