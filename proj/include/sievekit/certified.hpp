#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sievekit {

// A value together with a radius such that the true quantity lies in
// [value - error_radius, value + error_radius].  All arithmetic below
// widens the radius accordingly and adds a fixed 10-ulp slack per
// operation to absorb rounding.
struct CertifiedValue {
  double value = 0.0;
  double error_radius = 0.0;

  double lower() const { return value - error_radius; }
  double upper() const { return value + error_radius; }
  bool contains(double x) const { return lower() <= x && x <= upper(); }
};

namespace cv {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline double pad(double v) { return 10.0 * kEps * (std::fabs(v) + 1e-300); }

inline CertifiedValue exact(double v) { return {v, pad(v)}; }

inline CertifiedValue add(const CertifiedValue& a, const CertifiedValue& b) {
  double v = a.value + b.value;
  return {v, a.error_radius + b.error_radius + pad(v)};
}

inline CertifiedValue sub(const CertifiedValue& a, const CertifiedValue& b) {
  double v = a.value - b.value;
  return {v, a.error_radius + b.error_radius + pad(v)};
}

inline CertifiedValue mul(const CertifiedValue& a, const CertifiedValue& b) {
  double v = a.value * b.value;
  double r = std::fabs(a.value) * b.error_radius + std::fabs(b.value) * a.error_radius +
             a.error_radius * b.error_radius;
  return {v, r + pad(v)};
}

inline CertifiedValue scale(double c, const CertifiedValue& a) {
  double v = c * a.value;
  return {v, std::fabs(c) * a.error_radius + pad(v)};
}

inline CertifiedValue div(const CertifiedValue& a, const CertifiedValue& b) {
  double denom = std::fabs(b.value) - b.error_radius;
  if (!(denom > 0.0)) throw std::domain_error("CertifiedValue division by interval containing 0");
  double v = a.value / b.value;
  double r = (a.error_radius + std::fabs(v) * b.error_radius) / denom;
  return {v, r + pad(v)};
}

// exp(a) with the exact interval image width.
inline CertifiedValue exp(const CertifiedValue& a) {
  double v = std::exp(a.value);
  double r = v * std::expm1(a.error_radius);
  return {v, r + pad(v)};
}

inline bool intervals_intersect(const CertifiedValue& a, const CertifiedValue& b) {
  return a.lower() <= b.upper() && b.lower() <= a.upper();
}

}  // namespace cv
}  // namespace sievekit
