#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ew/states.hpp"

namespace ew {

enum class Criterion { kLinear, kNonlinear };

const char* to_string(Criterion c);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Detection set {p in [0,1] : value(p) < 0} of a criterion along a family.
/// poly_coeffs holds the criterion value as a polynomial in p, constant term
/// first.
struct ThresholdResult {
  Criterion criterion = Criterion::kLinear;
  std::optional<double> p_min;
  std::vector<Interval> intervals;
  std::vector<double> poly_coeffs;

  std::optional<Interval> detects_interval() const;
  double value_at(double p) const;
};

ThresholdResult linear_threshold(const CMatrix& w, const NoiseFamily& family);
ThresholdResult nonlinear_threshold(const BlockWitness& bw, const NoiseFamily& family);

/// Detection set of a polynomial of degree <= 2 on [0, 1].
ThresholdResult threshold_from_poly(Criterion criterion, std::vector<double> coeffs);

/// Real roots of c0 + c1 p + c2 p^2 via the cancellation-free quadratic formula.
std::vector<double> quadratic_roots(double c0, double c1, double c2);

/// Root of f on [lo, hi] by bisection. Throws ValidationError without a sign
/// change.
double bisection_threshold(const std::function<double(double)>& f, double tol = 1e-12,
                           double lo = 0.0, double hi = 1.0);

}  // namespace ew
