// Test-side oracles: the explicit rank-2 closed forms of the orbit
// functions and of the X-transform, written out term by term, plus small
// helpers.  These share no code with the library evaluators they check.
#ifndef ORBITCUB_TESTS_SUPPORT_HPP_
#define ORBITCUB_TESTS_SUPPORT_HPP_

#include <cmath>
#include <complex>
#include <map>
#include <random>

#include "orbitcub/orbitcub.hpp"
#include "orbitcub/verify.hpp"

namespace testsupport {

using orbitcub::Complex;
using orbitcub::kTwoPi;

inline Complex e2pi(double t) {
  return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)};
}
inline double c2pi(double t) { return std::cos(kTwoPi * t); }

// Explicit C-functions (with their 1/h_lambda and 2/h_lambda prefactors).
inline Complex closed_C_A2(int l1, int l2, double h, double a1, double a2) {
  return (e2pi(l1 * a1 + l2 * a2) + e2pi(-l1 * a1 + (l1 + l2) * a2) +
          e2pi((l1 + l2) * a1 - l2 * a2) + e2pi(l2 * a1 - (l1 + l2) * a2) +
          e2pi((-l1 - l2) * a1 + l1 * a2) + e2pi(-l2 * a1 - l1 * a2)) /
         h;
}
inline Complex closed_S_A2(int l1, int l2, double a1, double a2) {
  return e2pi(l1 * a1 + l2 * a2) - e2pi(-l1 * a1 + (l1 + l2) * a2) -
         e2pi((l1 + l2) * a1 - l2 * a2) + e2pi(l2 * a1 - (l1 + l2) * a2) +
         e2pi((-l1 - l2) * a1 + l1 * a2) - e2pi(-l2 * a1 - l1 * a2);
}

inline double closed_C_C2(int l1, int l2, double h, double a1, double a2) {
  return 2.0 / h *
         (c2pi(l1 * a1 + l2 * a2) + c2pi(-l1 * a1 + (l1 + l2) * a2) +
          c2pi((l1 + 2 * l2) * a1 - l2 * a2) +
          c2pi((l1 + 2 * l2) * a1 - (l1 + l2) * a2));
}
inline double closed_S_C2(int l1, int l2, double a1, double a2) {
  return 2.0 *
         (c2pi(l1 * a1 + l2 * a2) - c2pi(-l1 * a1 + (l1 + l2) * a2) -
          c2pi((l1 + 2 * l2) * a1 - l2 * a2) +
          c2pi((l1 + 2 * l2) * a1 - (l1 + l2) * a2));
}

inline double closed_C_G2(int l1, int l2, double h, double a1, double a2) {
  return 2.0 / h *
         (c2pi(l1 * a1 + l2 * a2) + c2pi(-l1 * a1 + (3 * l1 + l2) * a2) +
          c2pi((l1 + l2) * a1 - l2 * a2) +
          c2pi((2 * l1 + l2) * a1 - (3 * l1 + l2) * a2) +
          c2pi((-l1 - l2) * a1 + (3 * l1 + 2 * l2) * a2) +
          c2pi((-2 * l1 - l2) * a1 + (3 * l1 + 2 * l2) * a2));
}
inline double closed_S_G2(int l1, int l2, double a1, double a2) {
  return 2.0 *
         (c2pi(l1 * a1 + l2 * a2) - c2pi(-l1 * a1 + (3 * l1 + l2) * a2) -
          c2pi((l1 + l2) * a1 - l2 * a2) +
          c2pi((2 * l1 + l2) * a1 - (3 * l1 + l2) * a2) +
          c2pi((-l1 - l2) * a1 + (3 * l1 + 2 * l2) * a2) -
          c2pi((-2 * l1 - l2) * a1 + (3 * l1 + 2 * l2) * a2));
}

// Explicit X-transforms.
inline orbitcub::OmegaPoint closed_X_A2(double a1, double a2) {
  return {c2pi(a1) + c2pi(a2) + c2pi(a1 - a2),
          std::sin(kTwoPi * a1) - std::sin(kTwoPi * a2) -
              std::sin(kTwoPi * (a1 - a2))};
}
inline orbitcub::OmegaPoint closed_X_C2(double a1, double a2) {
  return {2.0 * (c2pi(a1) + c2pi(a1 - a2)),
          2.0 * (c2pi(a2) + c2pi(2 * a1 - a2))};
}
inline orbitcub::OmegaPoint closed_X_G2(double a1, double a2) {
  return {2.0 * (c2pi(a1) + c2pi(a1 - 3 * a2) + c2pi(2 * a1 - 3 * a2)),
          2.0 * (c2pi(a2) + c2pi(a1 - a2) + c2pi(a1 - 2 * a2))};
}

// Sparse bivariate polynomials with complex coefficients, for the
// substitution-degree check.
using Poly2 = std::map<std::pair<int, int>, Complex>;

inline Poly2 poly_mul(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  return out;
}

inline Poly2 poly_pow(const Poly2& base, int n) {
  Poly2 out{{{0, 0}, Complex(1.0)}};
  for (int i = 0; i < n; ++i) out = poly_mul(out, base);
  return out;
}

/// Largest total degree carried by a coefficient above the noise floor.
inline int poly_max_degree(const Poly2& p, double floor = 1e-12) {
  int deg = -1;
  for (const auto& [e, c] : p)
    if (std::abs(c) > floor) deg = std::max(deg, e.first + e.second);
  return deg;
}

}  // namespace testsupport

#endif  // ORBITCUB_TESTS_SUPPORT_HPP_
