#ifndef ORBITCUB_XMAP_HPP_
#define ORBITCUB_XMAP_HPP_

#include <cmath>
#include <string>

#include "orbitcub/algebra.hpp"
#include "orbitcub/errors.hpp"
#include "orbitcub/orbit_functions.hpp"

namespace orbitcub {

struct OmegaPoint {
  double y1 = 0.0;
  double y2 = 0.0;
};

/// How the real-valued X_j are assembled from the generators Z_j.  Only
/// Identity (real-valued C-functions) and AEvenFold (A_{2k}) occur for the
/// supported rank <= 2 algebras; the remaining tags exist for the general
/// classification.
enum class XTransformKind { Identity, AEvenFold, AOddFold, DOddFold, E6Fold };

inline XTransformKind x_transform_kind(AlgebraLabel label) {
  return label == AlgebraLabel::A2 ? XTransformKind::AEvenFold
                                   : XTransformKind::Identity;
}

/// Jacobian prefactor of the linear recombination step.
inline double kappa(AlgebraLabel label) {
  switch (label) {
    case AlgebraLabel::A1: return 1.0;   // 2^{-floor(1/2)}
    case AlgebraLabel::A2: return 0.5;   // 2^{-floor(2/2)}
    case AlgebraLabel::C2:
    case AlgebraLabel::G2: return 1.0;
  }
  throw UnsupportedAlgebra("unknown algebra label");
}

namespace detail {

inline double require_real(const Complex& z, const char* what) {
  if (std::abs(z.imag()) >= 1e-10)
    throw InternalError(std::string(what) +
                        ": imaginary residue exceeds 1e-10");
  return z.real();
}

}  // namespace detail

/// The transform x -> (X_1(x), ..., X_n(x)) built from Z_j = C_{omega_j}.
/// Reusable: the generator orbits are computed once.
class XMap {
 public:
  explicit XMap(const AlgebraData& data)
      : rank_(data.rank),
        kind_(x_transform_kind(data.label)),
        z1_(data, Weight{1, 0}),
        z2_(data, rank_ > 1 ? Weight{0, 1} : Weight{1, 0}) {}

  OmegaPoint eval(double a1, double a2 = 0.0) const {
    if (rank_ == 1)
      return {detail::require_real(z1_.eval(a1), "X_1"), 0.0};
    const Complex z1 = z1_.eval(a1, a2);
    const Complex z2 = z2_.eval(a1, a2);
    if (kind_ == XTransformKind::AEvenFold) {
      // X_1 = (Z_1 + Z_2)/2, X_2 = (Z_1 - Z_2)/(2i).
      const Complex x1 = 0.5 * (z1 + z2);
      const Complex x2 = (z1 - z2) / Complex(0.0, 2.0);
      return {detail::require_real(x1, "X_1"), detail::require_real(x2, "X_2")};
    }
    return {detail::require_real(z1, "X_1"), detail::require_real(z2, "X_2")};
  }
  OmegaPoint operator()(const TorusPoint& x) const {
    return eval(x.a[0], x.a[1]);
  }

 private:
  int rank_;
  XTransformKind kind_;
  CFunction z1_, z2_;
};

inline OmegaPoint eval_X(const AlgebraData& data, const TorusPoint& x) {
  return XMap(data)(x);
}

/// Explicit boundary description of Omega = X(F); inequalities are checked
/// with a fixed slack so that points mapped from grid boundaries pass.
inline bool in_omega(AlgebraLabel label, const OmegaPoint& y) {
  constexpr double tol = 1e-9;
  const double y1 = y.y1, y2 = y.y2;
  switch (label) {
    case AlgebraLabel::A1:
      return std::abs(y1) <= 2.0 + tol;
    case AlgebraLabel::A2: {
      const double r2 = y1 * y1 + y2 * y2;
      const double k = -(r2 + 9.0) * (r2 + 9.0) +
                       8.0 * (y1 * y1 * y1 - 3.0 * y1 * y2 * y2) + 108.0;
      return k >= -tol;
    }
    case AlgebraLabel::C2:
      return y2 >= -2.0 * y1 - 4.0 - tol && y2 >= 2.0 * y1 - 4.0 - tol &&
             y2 <= 0.25 * y1 * y1 + tol;
    case AlgebraLabel::G2: {
      if (y2 < -3.0 - tol) return false;  // domain of the real 3/2 power
      const double s = std::pow(std::max(y2 + 3.0, 0.0), 1.5);
      return y1 >= -2.0 * (s + 3.0 * y2 + 6.0) - tol &&
             y1 <= 2.0 * (s - 3.0 * y2 - 6.0) + tol &&
             y1 >= 0.25 * y2 * y2 - 3.0 - tol;
    }
  }
  throw UnsupportedAlgebra("unknown algebra label");
}

/// The weight polynomial K with K(X(x)) = |S_rho(x)|^2.
inline double eval_K(AlgebraLabel label, const OmegaPoint& y) {
  const double y1 = y.y1, y2 = y.y2;
  switch (label) {
    case AlgebraLabel::A1:
      return 4.0 - y1 * y1;
    case AlgebraLabel::A2: {
      const double r2 = y1 * y1 + y2 * y2;
      return -(r2 + 9.0) * (r2 + 9.0) +
             8.0 * (y1 * y1 * y1 - 3.0 * y1 * y2 * y2) + 108.0;
    }
    case AlgebraLabel::C2:
      return (y1 * y1 - 4.0 * y2) *
             ((y2 + 4.0) * (y2 + 4.0) - 4.0 * y1 * y1);
    case AlgebraLabel::G2:
      return (y2 * y2 - 4.0 * y1 - 12.0) *
             (y1 * y1 - 4.0 * y2 * y2 * y2 + 12.0 * y1 * y2 + 24.0 * y1 +
              36.0 * y2 + 36.0);
  }
  throw UnsupportedAlgebra("unknown algebra label");
}

/// K^{1/2} clamped at zero: K(X(x)) can round to a tiny negative value on
/// the boundary of Omega.
inline double k_sqrt(AlgebraLabel label, const OmegaPoint& y) {
  return std::sqrt(std::max(eval_K(label, y), 0.0));
}

/// |det J| of the X-transform at x (with respect to the orthonormal ambient
/// coordinates): kappa (2 pi)^n / (|F| |W|) * |S_rho(x)|.
inline double jacobian_abs(const AlgebraData& data, const TorusPoint& x) {
  const SFunction s_rho(data, rho_weight(data));
  double pref = kappa(data.label) / (data.vol_F * data.weyl_order);
  for (int i = 0; i < data.rank; ++i) pref *= kTwoPi;
  return pref * std::abs(s_rho(x));
}

/// Finite-difference check of the Jacobian identity: central differences of
/// eval_X in alpha^vee coordinates, rescaled to the ambient measure by
/// |det(coroot matrix)|.
inline double numeric_jacobian_abs(const AlgebraData& data,
                                   const TorusPoint& x, double h) {
  if (!(h >= 1e-7 && h <= 1e-4))
    throw StepOutOfRange("numeric_jacobian_abs: h must lie in [1e-7, 1e-4]");
  const XMap map(data);
  if (data.rank == 1) {
    const double d =
        (map.eval(x.a[0] + h).y1 - map.eval(x.a[0] - h).y1) / (2.0 * h);
    return std::abs(d) / data.det_coroot;
  }
  double j[2][2];
  for (int col = 0; col < 2; ++col) {
    double ap[2] = {x.a[0], x.a[1]};
    double am[2] = {x.a[0], x.a[1]};
    ap[col] += h;
    am[col] -= h;
    const OmegaPoint yp = map.eval(ap[0], ap[1]);
    const OmegaPoint ym = map.eval(am[0], am[1]);
    j[0][col] = (yp.y1 - ym.y1) / (2.0 * h);
    j[1][col] = (yp.y2 - ym.y2) / (2.0 * h);
  }
  const double det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
  return std::abs(det) / data.det_coroot;
}

}  // namespace orbitcub

#endif  // ORBITCUB_XMAP_HPP_
