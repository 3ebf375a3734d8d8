#ifndef ORBITCUB_GRID_HPP_
#define ORBITCUB_GRID_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "orbitcub/algebra.hpp"
#include "orbitcub/errors.hpp"
#include "orbitcub/weyl.hpp"

namespace orbitcub {

/// One element of F_M: the index [s_0, s_1, ..., s_n] with
/// s_0 + s_1 m_1 + ... + s_n m_n = M, its exact coordinates and its
/// torus-orbit size.
struct GridPoint {
  std::array<int, 3> index{0, 0, 0};             // [s0, s1, s2]
  std::array<Rational, 2> omega_coords{};        // (s_1/M, ..., s_n/M)
  std::array<Rational, 2> alpha_coords{};        // omega_coords * B, exact
  int eps = 0;

  TorusPoint torus() const {
    auto x = TorusPoint::from_rationals(alpha_coords[0], alpha_coords[1]);
    x.canonicalize();
    return x;
  }
};

struct GridFM {
  AlgebraLabel algebra{};
  int M = 0;
  std::vector<GridPoint> points;
  std::size_t size() const { return points.size(); }
};

/// Enumerates F_M with exact coordinates and epsilon coefficients.
/// Deterministic order: ascending s_n-major (outer s2, inner s1).
inline GridFM build_grid(const AlgebraData& data, int M) {
  if (M < 1) throw InvalidM("build_grid requires M >= 1");
  GridFM grid;
  grid.algebra = data.label;
  grid.M = M;

  auto push = [&](int s1, int s2) {
    GridPoint p;
    const int s0 = M - s1 * data.marks[0] -
                   (data.rank > 1 ? s2 * data.marks[1] : 0);
    p.index = {s0, s1, s2};
    p.omega_coords = {Rational(s1, M), Rational(s2, M)};
    for (int k = 0; k < data.rank; ++k) {
      Rational a(0);
      for (int i = 0; i < data.rank; ++i)
        a += p.omega_coords[i] * data.omega_in_coroot_basis[i][k];
      p.alpha_coords[k] = a;
    }
    p.eps = detail::epsilon_exact(data, p.alpha_coords);
    grid.points.push_back(p);
  };

  if (data.rank == 1) {
    for (int s1 = 0; s1 * data.marks[0] <= M; ++s1) push(s1, 0);
  } else {
    for (int s2 = 0; s2 * data.marks[1] <= M; ++s2)
      for (int s1 = 0; s1 * data.marks[0] + s2 * data.marks[1] <= M; ++s1)
        push(s1, s2);
  }
  return grid;
}

/// Sum of the epsilon coefficients over the grid; equals c M^n.
inline std::int64_t grid_weighted_count(const GridFM& grid) {
  std::int64_t total = 0;
  for (const auto& p : grid.points) total += p.eps;
  return total;
}

}  // namespace orbitcub

#endif  // ORBITCUB_GRID_HPP_
