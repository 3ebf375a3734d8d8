#ifndef ORBITCUB_ALGEBRA_HPP_
#define ORBITCUB_ALGEBRA_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "orbitcub/errors.hpp"
#include "orbitcub/rational.hpp"

namespace orbitcub {

enum class AlgebraLabel { A1, A2, C2, G2 };

inline const char* to_string(AlgebraLabel label) {
  switch (label) {
    case AlgebraLabel::A1: return "A1";
    case AlgebraLabel::A2: return "A2";
    case AlgebraLabel::C2: return "C2";
    case AlgebraLabel::G2: return "G2";
  }
  throw UnsupportedAlgebra("unknown algebra label");
}

inline AlgebraLabel parse_label(const std::string& s) {
  if (s == "A1") return AlgebraLabel::A1;
  if (s == "A2") return AlgebraLabel::A2;
  if (s == "C2") return AlgebraLabel::C2;
  if (s == "G2") return AlgebraLabel::G2;
  throw UnsupportedAlgebra("unsupported algebra '" + s +
                           "' (expected A1, A2, C2 or G2)");
}

/// Integer coordinates of a weight in the omega basis.  Rank-1 algebras use
/// only the first coordinate; the second stays 0.
using Weight = std::array<int, 2>;

using IntMat2 = std::array<std::array<int, 2>, 2>;
using RatMat2 = std::array<std::array<Rational, 2>, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

/// Immutable root-system bundle for one simple Lie algebra.  Everything
/// lattice-related is exact (integers / rationals); the ambient realization
/// of the simple roots is the only floating-point data.
struct AlgebraData {
  AlgebraLabel label{};
  int rank = 0;
  IntMat2 cartan{};            // cartan[i][j] = <alpha_i, alpha_j^vee>
  RatMat2 gram{};              // <alpha_i, alpha_j>
  Mat2 simple_roots{};         // row i = alpha_i in orthonormal coordinates
  Mat2 coroots{};              // row i = alpha_i^vee
  std::array<int, 2> marks{};  // highest root in the alpha basis
  std::array<int, 2> dual_marks{};  // highest dual root in the coroot basis
  int coxeter_number = 0;
  int c = 0;           // det(cartan)
  int weyl_order = 0;  // |W| = n! m_1...m_n c
  RatMat2 omega_in_coroot_basis{};  // row i = omega_i^vee in the coroot basis
  double det_coroot = 0.0;          // |det| of the coroot matrix
  double vol_F = 0.0;               // det_coroot / |W|

  bool is_dominant(const Weight& w) const {
    for (int i = 0; i < rank; ++i)
      if (w[i] < 0) return false;
    return true;
  }
  bool is_strictly_dominant(const Weight& w) const {
    for (int i = 0; i < rank; ++i)
      if (w[i] < 1) return false;
    return true;
  }
  /// alpha_i in omega coordinates (row i of the Cartan matrix).
  Weight simple_root_omega(int i) const {
    return Weight{cartan[i][0], rank > 1 ? cartan[i][1] : 0};
  }
};

namespace detail {

// Closes {e_1,...,e_n} under the reflections k_i <- k_i - <row_i(A), k>.
// With A = C^T this generates the root system in root coordinates, with
// A = C the coroot system in coroot coordinates.
inline std::vector<std::array<int, 2>> reflection_closure(const IntMat2& a,
                                                          int rank) {
  std::set<std::array<int, 2>> seen;
  std::vector<std::array<int, 2>> queue;
  for (int i = 0; i < rank; ++i) {
    std::array<int, 2> e{0, 0};
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const auto k = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      auto next = k;
      int dot = 0;
      for (int j = 0; j < rank; ++j) dot += a[i][j] * k[j];
      next[i] -= dot;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

// Unique maximum of the closure under the partial order v <= w iff w - v has
// nonnegative coefficients.  The highest root of an irreducible system
// dominates every root coefficient-wise; existence and uniqueness are
// asserted.
inline std::array<int, 2> highest_element(
    const std::vector<std::array<int, 2>>& system, int rank) {
  std::array<int, 2> best{};
  bool found = false;
  for (const auto& cand : system) {
    bool dominates_all = true;
    for (const auto& other : system)
      for (int i = 0; i < rank; ++i)
        if (cand[i] < other[i]) dominates_all = false;
    if (dominates_all) {
      if (found) throw InternalError("highest root is not unique");
      best = cand;
      found = true;
    }
  }
  if (!found) throw InternalError("no highest root found");
  return best;
}

inline RatMat2 gram_for(AlgebraLabel label) {
  RatMat2 g{};
  switch (label) {
    case AlgebraLabel::A1:
      g[0][0] = Rational(2);
      break;
    case AlgebraLabel::A2:
      g[0][0] = Rational(2), g[1][1] = Rational(2);
      g[0][1] = g[1][0] = Rational(-1);
      break;
    case AlgebraLabel::C2:
      g[0][0] = Rational(1), g[1][1] = Rational(2);
      g[0][1] = g[1][0] = Rational(-1);
      break;
    case AlgebraLabel::G2:
      g[0][0] = Rational(2), g[1][1] = Rational(2, 3);
      g[0][1] = g[1][0] = Rational(-1);
      break;
  }
  return g;
}

}  // namespace detail

/// Builds the full root-system bundle from the Gram matrix alone; the
/// Cartan matrix, marks and dual marks are derived, not tabulated.
inline AlgebraData build_algebra(AlgebraLabel label) {
  AlgebraData d;
  d.label = label;
  d.rank = (label == AlgebraLabel::A1) ? 1 : 2;
  d.gram = detail::gram_for(label);

  // Cartan matrix: C_ij = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>.
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) {
      const Rational cij = Rational(2) * d.gram[i][j] / d.gram[j][j];
      if (!cij.is_integer())
        throw InternalError("Cartan entry is not an integer");
      d.cartan[i][j] = static_cast<int>(cij.num());
    }
  if (d.rank == 1) {
    d.c = d.cartan[0][0];
  } else {
    d.c = d.cartan[0][0] * d.cartan[1][1] - d.cartan[0][1] * d.cartan[1][0];
  }

  // Marks from the highest root (root basis, reflections via C^T), dual
  // marks from the highest dual root (coroot basis, reflections via C).
  IntMat2 ct{};
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) ct[i][j] = d.cartan[j][i];
  const auto roots = detail::reflection_closure(ct, d.rank);
  const auto coroots = detail::reflection_closure(d.cartan, d.rank);
  const auto xi = detail::highest_element(roots, d.rank);
  const auto eta = detail::highest_element(coroots, d.rank);
  d.marks = xi;
  d.dual_marks = eta;
  if (d.rank == 1) {
    d.marks[1] = d.dual_marks[1] = 0;
  }

  d.coxeter_number = 1;
  d.weyl_order = d.c;
  for (int i = 0; i < d.rank; ++i) {
    d.coxeter_number += d.marks[i];
    d.weyl_order *= d.marks[i];
  }
  for (int i = 2; i <= d.rank; ++i) d.weyl_order *= i;

  // The root count is |W| * rank / ... not in general; instead cross-check
  // the two closures against each other.
  if (roots.size() != coroots.size())
    throw InternalError("root and coroot systems differ in size");

  // Ambient realization: Cholesky-style factorization of the Gram matrix
  // with an upper-triangular factor (alpha_1 along the first axis).
  const double g00 = d.gram[0][0].to_double();
  d.simple_roots[0][0] = std::sqrt(g00);
  if (d.rank == 2) {
    const double g01 = d.gram[0][1].to_double();
    const double g11 = d.gram[1][1].to_double();
    d.simple_roots[1][0] = g01 / d.simple_roots[0][0];
    d.simple_roots[1][1] = std::sqrt(g11 - g01 * g01 / g00);
  }
  for (int i = 0; i < d.rank; ++i) {
    const double len2 = d.gram[i][i].to_double();
    for (int j = 0; j < d.rank; ++j)
      d.coroots[i][j] = 2.0 * d.simple_roots[i][j] / len2;
  }
  if (d.rank == 1) {
    d.det_coroot = std::abs(d.coroots[0][0]);
  } else {
    d.det_coroot = std::abs(d.coroots[0][0] * d.coroots[1][1] -
                            d.coroots[0][1] * d.coroots[1][0]);
  }
  d.vol_F = d.det_coroot / d.weyl_order;

  // omega_i^vee in the coroot basis: B = C^{-T}, exact.
  if (d.rank == 1) {
    d.omega_in_coroot_basis[0][0] = Rational(1, d.cartan[0][0]);
  } else {
    const Rational det(d.c);
    d.omega_in_coroot_basis[0][0] = Rational(d.cartan[1][1]) / det;
    d.omega_in_coroot_basis[0][1] = Rational(-d.cartan[1][0]) / det;
    d.omega_in_coroot_basis[1][0] = Rational(-d.cartan[0][1]) / det;
    d.omega_in_coroot_basis[1][1] = Rational(d.cartan[0][0]) / det;
  }
  return d;
}

/// m-degree of a weight: scalar product with the highest dual root,
/// lambda_1 m^vee_1 + ... + lambda_n m^vee_n.
inline int m_degree(const AlgebraData& data, const Weight& lambda) {
  int deg = 0;
  for (int i = 0; i < data.rank; ++i) deg += lambda[i] * data.dual_marks[i];
  return deg;
}

/// All dominant weights of m-degree <= M, sorted lexicographically.
inline std::vector<Weight> enumerate_dominant(const AlgebraData& data, int M) {
  std::vector<Weight> out;
  if (M < 0) return out;
  const int b0 = M / data.dual_marks[0];
  for (int l0 = 0; l0 <= b0; ++l0) {
    if (data.rank == 1) {
      out.push_back(Weight{l0, 0});
      continue;
    }
    const int rem = M - l0 * data.dual_marks[0];
    for (int l1 = 0; l1 <= rem / data.dual_marks[1]; ++l1)
      out.push_back(Weight{l0, l1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Exact test for lambda in M*Q (Q the root lattice), via the integer
/// linear solve lambda = M(k_1 alpha_1 + ... + k_n alpha_n).
inline bool weight_in_MQ(const AlgebraData& data, const Weight& lambda,
                         int M) {
  if (M < 1) throw InvalidM("weight_in_MQ requires M >= 1");
  // In omega coordinates lambda = M * k C, so k = lambda C^{-1} / M.
  if (data.rank == 1) {
    return (Rational(lambda[0]) / Rational(data.cartan[0][0] * M))
        .is_integer();
  }
  const Rational det(data.c);
  const Rational inv[2][2] = {
      {Rational(data.cartan[1][1]) / det, Rational(-data.cartan[0][1]) / det},
      {Rational(-data.cartan[1][0]) / det, Rational(data.cartan[0][0]) / det}};
  for (int i = 0; i < 2; ++i) {
    const Rational ki =
        (Rational(lambda[0]) * inv[0][i] + Rational(lambda[1]) * inv[1][i]) /
        Rational(M);
    if (!ki.is_integer()) return false;
  }
  return true;
}

}  // namespace orbitcub

#endif  // ORBITCUB_ALGEBRA_HPP_
