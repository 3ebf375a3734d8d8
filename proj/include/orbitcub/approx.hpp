#ifndef ORBITCUB_APPROX_HPP_
#define ORBITCUB_APPROX_HPP_

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <utility>
#include <vector>

#include "orbitcub/cubature.hpp"
#include "orbitcub/orbit_functions.hpp"
#include "orbitcub/refquad.hpp"

namespace orbitcub {

/// Coefficients a_lambda of a truncated expansion over the dominant weights
/// of m-degree <= M, keyed exactly by enumerate_dominant(M).
struct ApproxCoeffs {
  AlgebraLabel algebra{};
  int M = 0;
  std::vector<std::pair<Weight, Complex>> entries;  // sorted by weight

  Complex at(const Weight& lambda) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), lambda,
        [](const auto& e, const Weight& w) { return e.first < w; });
    if (it == entries.end() || it->first != lambda)
      throw std::out_of_range("ApproxCoeffs: no such weight");
    return it->second;
  }
};

namespace detail {

// A finite Fourier sum  sum_nu b_nu exp(2 pi i <nu, x>)  flattened over the
// orbits of all coefficient weights.  Power tables over t_j = e^{2 pi i a_j}
// make single-point evaluation cheap; t^{-k} = conj(t^k) keeps the tables
// one-sided.
class TrigSum {
 public:
  struct Workspace {
    std::vector<double> re1, im1, re2, im2;
  };

  TrigSum() = default;
  TrigSum(const AlgebraData& data, const ApproxCoeffs& coeffs)
      : rank_(data.rank) {
    for (const auto& [lambda, a] : coeffs.entries) {
      for (const Weight& nu : orbit(data, lambda).elements) {
        modes_.push_back({nu[0], rank_ > 1 ? nu[1] : 0, a.real(), a.imag()});
        max1_ = std::max(max1_, std::abs(nu[0]));
        if (rank_ > 1) max2_ = std::max(max2_, std::abs(nu[1]));
      }
    }
  }

  Complex eval(double a1, double a2, Workspace& ws) const {
    fill_powers(a1, max1_, ws.re1, ws.im1);
    if (rank_ > 1) fill_powers(a2, max2_, ws.re2, ws.im2);
    double sr = 0.0, si = 0.0;
    for (const Mode& m : modes_) {
      double zr, zi;
      pick(ws.re1, ws.im1, m.n1, zr, zi);
      if (rank_ > 1) {
        double wr, wi;
        pick(ws.re2, ws.im2, m.n2, wr, wi);
        const double tr = zr * wr - zi * wi;
        zi = zr * wi + zi * wr;
        zr = tr;
      }
      sr += m.br * zr - m.bi * zi;
      si += m.br * zi + m.bi * zr;
    }
    return {sr, si};
  }

  std::size_t mode_count() const { return modes_.size(); }

 private:
  struct Mode {
    int n1, n2;
    double br, bi;
  };

  static void fill_powers(double a, int max_pow, std::vector<double>& re,
                          std::vector<double>& im) {
    re.resize(max_pow + 1);
    im.resize(max_pow + 1);
    re[0] = 1.0;
    im[0] = 0.0;
    const double cr = std::cos(kTwoPi * a);
    const double ci = std::sin(kTwoPi * a);
    for (int k = 1; k <= max_pow; ++k) {
      re[k] = re[k - 1] * cr - im[k - 1] * ci;
      im[k] = re[k - 1] * ci + im[k - 1] * cr;
    }
  }

  static void pick(const std::vector<double>& re, const std::vector<double>& im,
                   int n, double& zr, double& zi) {
    if (n >= 0) {
      zr = re[n];
      zi = im[n];
    } else {
      zr = re[-n];
      zi = -im[-n];
    }
  }

  int rank_ = 1;
  int max1_ = 0, max2_ = 0;
  std::vector<Mode> modes_;
};

template <class F>
Complex call_on_omega(F&& f, const OmegaPoint& y, const TorusPoint& x) {
  if constexpr (std::is_invocable_v<F&, const OmegaPoint&,
                                    const TorusPoint&>) {
    return Complex(f(y, x));
  } else {
    return Complex(f(y));
  }
}

}  // namespace detail

/// Reusable evaluator of sum_lambda a_lambda C_lambda(x).
class ApproxEvaluator {
 public:
  ApproxEvaluator(const AlgebraData& data, const ApproxCoeffs& coeffs)
      : sum_(data, coeffs) {}

  Complex operator()(const TorusPoint& x) const { return eval(x.a[0], x.a[1]); }
  Complex eval(double a1, double a2 = 0.0) const {
    static thread_local detail::TrigSum::Workspace ws;
    return sum_.eval(a1, a2, ws);
  }

 private:
  detail::TrigSum sum_;
};

/// Cubature-side expansion coefficients:
/// a_lambda = (h_lambda / (c |W| M^n)) sum_j eps_j f(y^(j)) conj(C_lambda(x_j)).
template <class F>
ApproxCoeffs coeffs_v(const AlgebraData& data, int M, F&& f) {
  const CubatureRule rule = build_rule(data, M);

  std::vector<Complex> fvals;
  fvals.reserve(rule.size());
  for (const auto& n : rule.nodes)
    fvals.push_back(detail::call_on_omega(f, n.y, n.x));

  double mn = 1.0;
  for (int i = 0; i < data.rank; ++i) mn *= M;
  const double norm = data.c * data.weyl_order * mn;

  ApproxCoeffs out;
  out.algebra = data.label;
  out.M = M;
  for (const Weight& lambda : enumerate_dominant(data, M)) {
    const CFunction c(data, lambda);
    const double h = stabilizer_order(data, lambda);
    KahanSumComplex acc;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const TorusPoint& x = rule.nodes[j].x;
      acc.add(static_cast<double>(rule.nodes[j].eps) * fvals[j] *
              std::conj(c.eval(x.a[0], x.a[1])));
    }
    out.entries.emplace_back(lambda, (h / norm) * acc.value());
  }
  return out;
}

/// Oracle-side expansion coefficients through the reference quadrature:
/// a_lambda = h_lambda (f, p_lambda)_K
///          = (h_lambda / (|W| |F|)) int_F f(X(x)) conj(C_lambda(x)) dx.
template <class F>
ApproxCoeffs coeffs_u(const AlgebraData& data, int M, F&& f, int R,
                      int threads = 0) {
  const XMap map(data);
  ApproxCoeffs out;
  out.algebra = data.label;
  out.M = M;
  for (const Weight& lambda : enumerate_dominant(data, M)) {
    const CFunction c(data, lambda);
    const double h = stabilizer_order(data, lambda);
    auto integrand = [&](const TorusPoint& x) -> Complex {
      return detail::call_on_omega(f, map(x), x) *
             std::conj(c.eval(x.a[0], x.a[1]));
    };
    const RefResultC r = ref_integral_F(data, integrand, R, threads);
    out.entries.emplace_back(
        lambda, (h / (data.weyl_order * data.vol_F)) * r.value);
  }
  return out;
}

/// sum_lambda a_lambda C_lambda(x) at a single torus point.
inline Complex eval_approx(const AlgebraData& data, const ApproxCoeffs& coeffs,
                           const TorusPoint& x) {
  return ApproxEvaluator(data, coeffs)(x);
}

/// L^2_K error of the expansion against f:
/// int_Omega |f - v|^2 K^{-1/2} dy, computed as the reference-quadrature
/// pullback (kappa (2 pi)^n / (|F| |W|)) int_F |f(X(x)) - v(x)|^2 dx.
template <class F>
double error_L2K(const AlgebraData& data, F&& f, const ApproxCoeffs& coeffs,
                 int R, int threads = 0) {
  const XMap map(data);
  const detail::TrigSum vsum(data, coeffs);
  auto integrand = [&](const TorusPoint& x) -> double {
    static thread_local detail::TrigSum::Workspace ws;
    const OmegaPoint y = map(x);
    const Complex fv = detail::call_on_omega(f, y, x);
    const Complex diff = fv - vsum.eval(x.a[0], x.a[1], ws);
    return std::norm(diff);
  };
  double pref = kappa(data.label) / (data.vol_F * data.weyl_order);
  for (int i = 0; i < data.rank; ++i) pref *= kTwoPi;
  return pref * ref_integral_F(data, integrand, R, threads).value;
}

/// The model function of the approximation example: a Gaussian bump of
/// width 0.35 centred at (0, -1.8).
inline double gaussian_model(const OmegaPoint& y) {
  const double dy2 = y.y2 + 1.8;
  return std::exp(-(y.y1 * y.y1 + dy2 * dy2) / (2.0 * 0.35 * 0.35));
}

/// The same bump recentred for algebras whose Omega does not contain the
/// canonical centre: placed at the image of the barycentre of F.
struct RecentredGaussian {
  double c1 = 0.0, c2 = -1.8;

  explicit RecentredGaussian(const AlgebraData& data) {
    if (data.label == AlgebraLabel::C2) return;
    TorusPoint bary;
    const int verts = data.rank + 1;
    std::array<double, 2> u{0.0, 0.0};
    for (int i = 0; i < data.rank; ++i) u[i] = 1.0 / (verts * data.marks[i]);
    double a[2] = {0.0, 0.0};
    for (int k = 0; k < data.rank; ++k)
      for (int i = 0; i < data.rank; ++i)
        a[k] += u[i] * data.omega_in_coroot_basis[i][k].to_double();
    bary = TorusPoint::from_doubles(a[0], a[1]);
    const OmegaPoint c = eval_X(data, bary);
    c1 = c.y1;
    c2 = c.y2;
  }

  double operator()(const OmegaPoint& y) const {
    const double d1 = y.y1 - c1;
    const double d2 = y.y2 - c2;
    return std::exp(-(d1 * d1 + d2 * d2) / (2.0 * 0.35 * 0.35));
  }
};

}  // namespace orbitcub

#endif  // ORBITCUB_APPROX_HPP_
