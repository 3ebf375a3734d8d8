#ifndef ORBITCUB_ORBIT_FUNCTIONS_HPP_
#define ORBITCUB_ORBIT_FUNCTIONS_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "orbitcub/algebra.hpp"
#include "orbitcub/errors.hpp"
#include "orbitcub/grid.hpp"
#include "orbitcub/numeric.hpp"
#include "orbitcub/weyl.hpp"

namespace orbitcub {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Symmetric orbit function C_lambda as a reusable evaluator: the orbit is
/// computed once, evaluation is a compensated sum of unit exponentials in a
/// fixed (sorted-orbit) order.  <nu, x> = sum nu_i a_i because the weight
/// lives in the omega basis and x in the alpha^vee basis.
class CFunction {
 public:
  CFunction(const AlgebraData& data, const Weight& lambda)
      : rank_(data.rank), label_(lambda) {
    if (!data.is_dominant(lambda))
      throw NonDominantLabel("C-function label must be dominant");
    orbit_ = orbit(data, lambda).elements;
  }

  Complex eval(double a1, double a2 = 0.0) const {
    KahanSumComplex acc;
    for (const Weight& nu : orbit_) {
      const double phase = kTwoPi * (nu[0] * a1 + (rank_ > 1 ? nu[1] * a2 : 0.0));
      acc.add({std::cos(phase), std::sin(phase)});
    }
    return acc.value();
  }
  Complex operator()(const TorusPoint& x) const { return eval(x.a[0], x.a[1]); }

  const std::vector<Weight>& orbit_elements() const { return orbit_; }
  const Weight& label() const { return label_; }

 private:
  int rank_;
  Weight label_;
  std::vector<Weight> orbit_;
};

/// Antisymmetric orbit function S_lambda: det-signed sum over the full Weyl
/// group (|W| terms).
class SFunction {
 public:
  SFunction(const AlgebraData& data, const Weight& lambda) : rank_(data.rank) {
    if (!data.is_strictly_dominant(lambda))
      throw NonStrictlyDominantLabel(
          "S-function label must be strictly dominant");
    const WeylGroup w = make_weyl_group(data);
    for (std::size_t k = 0; k < w.size(); ++k) {
      terms_.push_back(WeylGroup::apply(w.mats[k], lambda, rank_));
      signs_.push_back(w.dets[k]);
    }
  }

  Complex eval(double a1, double a2 = 0.0) const {
    KahanSumComplex acc;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const Weight& nu = terms_[k];
      const double phase = kTwoPi * (nu[0] * a1 + (rank_ > 1 ? nu[1] * a2 : 0.0));
      const double s = static_cast<double>(signs_[k]);
      acc.add({s * std::cos(phase), s * std::sin(phase)});
    }
    return acc.value();
  }
  Complex operator()(const TorusPoint& x) const { return eval(x.a[0], x.a[1]); }

 private:
  int rank_;
  std::vector<Weight> terms_;
  std::vector<int> signs_;
};

inline Complex eval_C(const AlgebraData& data, const Weight& lambda,
                      const TorusPoint& x) {
  return CFunction(data, lambda)(x);
}

inline Complex eval_S(const AlgebraData& data, const Weight& lambda,
                      const TorusPoint& x) {
  return SFunction(data, lambda)(x);
}

/// Generator Z_j = C_{omega_j}; j is 1-based.
inline Complex eval_Z(const AlgebraData& data, int j, const TorusPoint& x) {
  if (j < 1 || j > data.rank)
    throw std::out_of_range("eval_Z: generator index out of range");
  Weight omega{0, 0};
  omega[j - 1] = 1;
  return eval_C(data, omega, x);
}

/// Weight rho = omega_1 + ... + omega_n.
inline Weight rho_weight(const AlgebraData& data) {
  Weight r{1, 0};
  if (data.rank > 1) r[1] = 1;
  return r;
}

/// sum_{x in F_M} eps(x) C_lambda(x); equals c M^n for lambda in MQ and 0
/// otherwise.
inline Complex discrete_sum(const AlgebraData& data, const Weight& lambda,
                            const GridFM& grid) {
  const CFunction c(data, lambda);
  KahanSumComplex acc;
  for (const auto& p : grid.points) {
    const TorusPoint x = p.torus();
    const Complex v = c.eval(x.a[0], x.a[1]);
    acc.add(static_cast<double>(p.eps) * v);
  }
  return acc.value();
}

}  // namespace orbitcub

#endif  // ORBITCUB_ORBIT_FUNCTIONS_HPP_
