#ifndef ORBITCUB_REFQUAD_HPP_
#define ORBITCUB_REFQUAD_HPP_

#include <type_traits>
#include <utility>
#include <vector>

#include "orbitcub/algebra.hpp"
#include "orbitcub/numeric.hpp"
#include "orbitcub/weyl.hpp"
#include "orbitcub/xmap.hpp"

namespace orbitcub {

/// Reference quadrature over the simplex F: composite midpoint (centroid)
/// cells on the uniform triangulation of F in omega^vee coordinates, with
/// Richardson extrapolation between subdivisions R and 2R.  This is the
/// verification oracle for every continuous integral; it shares no code
/// path with the cubature rules it checks.

template <class V>
struct RefResultT {
  V value{};
  double error_estimate = 0.0;
};
using RefResult = RefResultT<double>;
using RefResultC = RefResultT<Complex>;

namespace detail {

struct SimplexGeometry {
  int rank;
  double e1[2];  // d(alpha coords)/dv1, v in the unit simplex
  double e2[2];
  double volume;  // |F|

  explicit SimplexGeometry(const AlgebraData& data) : rank(data.rank) {
    for (int k = 0; k < 2; ++k) {
      e1[k] = data.omega_in_coroot_basis[0][k].to_double() / data.marks[0];
      e2[k] = rank > 1 ? data.omega_in_coroot_basis[1][k].to_double() /
                             data.marks[1]
                       : 0.0;
    }
    volume = data.vol_F;
  }
};

// Visits the centroid cells of row j (second simplex index) at subdivision
// R, in a fixed order: up triangles by ascending i, then down triangles.
template <class Fn>
void visit_row(const SimplexGeometry& geo, int R, int j, Fn&& fn) {
  const double h = 1.0 / R;
  if (geo.rank == 1) {
    const double w = geo.volume * h;
    for (int i = 0; i < R; ++i) {
      const double v1 = (i + 0.5) * h;
      fn(v1 * geo.e1[0], 0.0, w);
    }
    return;
  }
  const double w = geo.volume * h * h;
  for (int i = 0; i + j < R; ++i) {
    const double v1 = (i + 1.0 / 3.0) * h;
    const double v2 = (j + 1.0 / 3.0) * h;
    fn(v1 * geo.e1[0] + v2 * geo.e2[0], v1 * geo.e1[1] + v2 * geo.e2[1], w);
  }
  for (int i = 0; i + j < R - 1; ++i) {
    const double v1 = (i + 2.0 / 3.0) * h;
    const double v2 = (j + 2.0 / 3.0) * h;
    fn(v1 * geo.e1[0] + v2 * geo.e2[0], v1 * geo.e1[1] + v2 * geo.e2[1], w);
  }
}

template <class G>
auto midpoint_sum(const AlgebraData& data, int R, int threads, G&& g) {
  using RT = std::invoke_result_t<G&, const TorusPoint&>;
  constexpr bool complex_valued = std::is_same_v<RT, Complex>;
  using Acc = std::conditional_t<complex_valued, KahanSumComplex, KahanSum>;
  using Val = std::conditional_t<complex_valued, Complex, double>;

  const SimplexGeometry geo(data);
  const std::size_t n_rows = geo.rank == 1 ? 1 : static_cast<std::size_t>(R);
  std::vector<Val> row_sums(n_rows);
  parallel_chunks(n_rows, threads, [&](std::size_t j) {
    Acc acc;
    visit_row(geo, R, static_cast<int>(j), [&](double a1, double a2,
                                               double w) {
      acc.add(w * g(TorusPoint::from_doubles(a1, a2)));
    });
    row_sums[j] = acc.value();
  });
  Acc total;
  for (const Val& v : row_sums) total.add(v);
  return total.value();
}

}  // namespace detail

/// A materialized midpoint grid (for invariant checks; the integrators
/// stream the cells instead of storing them).
struct RefGrid {
  int R = 0;
  std::vector<std::pair<TorusPoint, double>> cells;
};

inline RefGrid make_ref_grid(const AlgebraData& data, int R) {
  RefGrid grid;
  grid.R = R;
  const detail::SimplexGeometry geo(data);
  const int n_rows = data.rank == 1 ? 1 : R;
  for (int j = 0; j < n_rows; ++j)
    detail::visit_row(geo, R, j, [&](double a1, double a2, double w) {
      grid.cells.emplace_back(TorusPoint::from_doubles(a1, a2), w);
    });
  return grid;
}

/// Composite midpoint estimate of int_F g, Richardson-extrapolated between
/// subdivisions R and 2R.  The reported error estimate is the magnitude of
/// the eliminated h^2 term.
template <class G>
auto ref_integral_F(const AlgebraData& data, G&& g, int R, int threads = 0) {
  const auto coarse = detail::midpoint_sum(data, R, threads, g);
  const auto fine = detail::midpoint_sum(data, 2 * R, threads, g);
  using Val = std::remove_cv_t<decltype(coarse)>;
  RefResultT<Val> out;
  out.value = (4.0 * fine - coarse) / 3.0;
  out.error_estimate = std::abs(fine - coarse) / 3.0;
  return out;
}

/// int_Omega f K^{-1/2} dy evaluated through the substitution y = X(x):
/// (kappa (2 pi)^n / (|F| |W|)) int_F (f o X).  The integrand may take
/// (OmegaPoint) or (OmegaPoint, TorusPoint).
template <class F>
RefResult ref_integral_Omega_weighted(const AlgebraData& data, F&& f, int R,
                                      int threads = 0) {
  const XMap map(data);
  auto g = [&](const TorusPoint& x) -> double {
    const OmegaPoint y = map(x);
    if constexpr (std::is_invocable_v<F&, const OmegaPoint&,
                                      const TorusPoint&>) {
      return f(y, x);
    } else {
      return f(y);
    }
  };
  double pref = kappa(data.label) / (data.vol_F * data.weyl_order);
  for (int i = 0; i < data.rank; ++i) pref *= kTwoPi;
  RefResult base = ref_integral_F(data, g, R, threads);
  return {pref * base.value, pref * base.error_estimate};
}

}  // namespace orbitcub

#endif  // ORBITCUB_REFQUAD_HPP_
