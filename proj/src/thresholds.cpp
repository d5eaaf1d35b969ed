#include "ew/thresholds.hpp"

#include <algorithm>
#include <cmath>

namespace ew {

namespace {

constexpr double kDegenerate = 1e-15;

}  // namespace

const char* to_string(Criterion c) {
  return c == Criterion::kLinear ? "linear" : "nonlinear";
}

std::optional<Interval> ThresholdResult::detects_interval() const {
  if (intervals.empty()) return std::nullopt;
  return Interval{intervals.front().lo, intervals.back().hi};
}

double ThresholdResult::value_at(double p) const {
  double value = 0.0;
  for (auto it = poly_coeffs.rbegin(); it != poly_coeffs.rend(); ++it) value = value * p + *it;
  return value;
}

std::vector<double> quadratic_roots(double c0, double c1, double c2) {
  const double scale = std::max({std::abs(c0), std::abs(c1), std::abs(c2)});
  if (scale == 0.0) return {};
  if (std::abs(c2) <= kDegenerate * scale) {
    if (std::abs(c1) <= kDegenerate * scale) return {};
    return {-c0 / c1};
  }
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) return {};
  const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
  std::vector<double> roots;
  roots.push_back(q / c2);
  if (q != 0.0) roots.push_back(c0 / q);
  std::sort(roots.begin(), roots.end());
  return roots;
}

ThresholdResult threshold_from_poly(Criterion criterion, std::vector<double> coeffs) {
  ThresholdResult result;
  result.criterion = criterion;
  coeffs.resize(3, 0.0);
  result.poly_coeffs = coeffs;
  if (std::all_of(coeffs.begin(), coeffs.end(),
                  [](double c) { return std::abs(c) < kDegenerate; })) {
    return result;
  }

  std::vector<double> cuts{0.0};
  for (double r : quadratic_roots(coeffs[0], coeffs[1], coeffs[2])) {
    if (r > 0.0 && r < 1.0) cuts.push_back(r);
  }
  cuts.push_back(1.0);

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k];
    const double hi = cuts[k + 1];
    if (hi <= lo) continue;
    if (result.value_at(0.5 * (lo + hi)) >= 0.0) continue;
    if (!result.intervals.empty() && result.intervals.back().hi == lo) {
      result.intervals.back().hi = hi;
    } else {
      result.intervals.push_back({lo, hi});
    }
  }
  if (!result.intervals.empty()) result.p_min = result.intervals.front().lo;
  return result;
}

ThresholdResult linear_threshold(const CMatrix& w, const NoiseFamily& family) {
  const double at0 = expectation(w, family.rho_b);
  const double at1 = expectation(w, family.rho_a);
  return threshold_from_poly(Criterion::kLinear, {at0, at1 - at0});
}

ThresholdResult nonlinear_threshold(const BlockWitness& bw, const NoiseFamily& family) {
  const WitnessTriple t = triple(bw);
  const CriterionReport at0 = evaluate(t, family.rho_b.matrix());
  const CriterionReport at1 = evaluate(t, family.rho_a.matrix());
  // <W_k>(p) = c_k + s_k p
  const double c1 = at0.ev_w1, s1 = at1.ev_w1 - at0.ev_w1;
  const double c2 = at0.ev_w2, s2 = at1.ev_w2 - at0.ev_w2;
  const double c3 = at0.ev_w3, s3 = at1.ev_w3 - at0.ev_w3;
  return threshold_from_poly(Criterion::kNonlinear,
                             {c1 * c2 - 0.25 * c3 * c3,
                              c1 * s2 + c2 * s1 - 0.5 * c3 * s3,
                              s1 * s2 - 0.25 * s3 * s3});
}

double bisection_threshold(const std::function<double(double)>& f, double tol, double lo,
                           double hi) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw ValidationError("bisection_threshold: no sign change on the bracket");
  }
  for (int iter = 0; iter < 60 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ew
