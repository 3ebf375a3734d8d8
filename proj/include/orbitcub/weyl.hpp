#ifndef ORBITCUB_WEYL_HPP_
#define ORBITCUB_WEYL_HPP_

#include <array>
#include <set>
#include <vector>

#include "orbitcub/algebra.hpp"
#include "orbitcub/errors.hpp"
#include "orbitcub/rational.hpp"

namespace orbitcub {

/// A point of the torus R^n / Q^vee in alpha^vee coordinates.  Grid points
/// carry an exact rational representation alongside the doubles; analytic
/// sample points carry doubles only.
struct TorusPoint {
  std::array<double, 2> a{0.0, 0.0};
  bool exact = true;  // the default point is the origin, which is exact
  std::array<Rational, 2> ar{Rational(0), Rational(0)};

  static TorusPoint from_doubles(double a1, double a2 = 0.0) {
    TorusPoint x;
    x.a = {a1, a2};
    x.exact = false;
    return x;
  }
  static TorusPoint from_rationals(const Rational& a1,
                                   const Rational& a2 = Rational(0)) {
    TorusPoint x;
    x.ar = {a1, a2};
    x.a = {a1.to_double(), a2.to_double()};
    x.exact = true;
    return x;
  }
  /// Reduces exact coordinates modulo 1 into [0, 1).
  void canonicalize() {
    if (!exact) return;
    for (int i = 0; i < 2; ++i) {
      ar[i] = ar[i].mod1();
      a[i] = ar[i].to_double();
    }
  }
};

/// Reflection r_i acting on a weight in omega coordinates:
/// lambda - lambda_i * (i-th Cartan row).  The index i is 1-based, matching
/// the generator names r_1, ..., r_n.
inline Weight reflect(const AlgebraData& data, int i, const Weight& lambda) {
  if (i < 1 || i > data.rank)
    throw std::out_of_range("reflect: generator index out of range");
  const int k = i - 1;
  Weight out = lambda;
  for (int j = 0; j < data.rank; ++j)
    out[j] -= lambda[k] * data.cartan[k][j];
  return out;
}

/// Full Weyl orbit of a weight, closed under both generating reflections.
/// Elements are kept canonically sorted so set equality is bit-exact.
struct WeylOrbit {
  std::vector<Weight> elements;
  std::size_t size() const { return elements.size(); }
};

inline WeylOrbit orbit(const AlgebraData& data, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::vector<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight w = queue.back();
    queue.pop_back();
    for (int i = 1; i <= data.rank; ++i) {
      const Weight r = reflect(data, i, w);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return WeylOrbit{{seen.begin(), seen.end()}};
}

/// h_lambda = |W| / |W lambda| by the orbit-stabilizer theorem.
inline int stabilizer_order(const AlgebraData& data, const Weight& lambda) {
  return data.weyl_order / static_cast<int>(orbit(data, lambda).size());
}

/// All Weyl group elements as integer matrices acting on omega coordinates
/// (weights transform as row vectors: lambda -> lambda * mat), with their
/// determinant signs.  Deterministically ordered.
struct WeylGroup {
  std::vector<IntMat2> mats;
  std::vector<int> dets;
  std::size_t size() const { return mats.size(); }

  static Weight apply(const IntMat2& m, const Weight& lambda, int rank) {
    Weight out{0, 0};
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k) out[j] += lambda[k] * m[k][j];
    return out;
  }
};

inline WeylGroup make_weyl_group(const AlgebraData& data) {
  const int n = data.rank;
  std::array<IntMat2, 2> gen{};
  for (int i = 0; i < n; ++i) {
    IntMat2 m{};
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m[r][c] = (r == c) ? 1 : 0;
    for (int j = 0; j < n; ++j) m[i][j] = (i == j ? 1 : 0) - data.cartan[i][j];
    gen[i] = m;
  }
  IntMat2 id{};
  for (int r = 0; r < n; ++r) id[r][r] = 1;

  auto mul = [n](const IntMat2& a, const IntMat2& b) {
    IntMat2 out{};
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < n; ++k) out[r][c] += a[r][k] * b[k][c];
    return out;
  };

  std::set<IntMat2> seen{id};
  std::vector<IntMat2> queue{id};
  while (!queue.empty()) {
    const IntMat2 w = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      const IntMat2 next = mul(w, gen[i]);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  WeylGroup g;
  for (const auto& m : seen) {
    g.mats.push_back(m);
    const int det = (n == 1) ? m[0][0]
                             : m[0][0] * m[1][1] - m[0][1] * m[1][0];
    g.dets.push_back(det);
  }
  if (static_cast<int>(g.mats.size()) != data.weyl_order)
    throw InternalError("Weyl group closure does not match |W|");
  return g;
}

namespace detail {

using RatVec2 = std::array<Rational, 2>;

// Generator action on torus points in alpha^vee coordinates:
// a_i <- a_i - <row_i(C), a>, then reduced mod 1.
inline RatVec2 torus_reflect_mod1(const AlgebraData& data, int i,
                                  const RatVec2& a) {
  RatVec2 out = a;
  Rational dot(0);
  for (int j = 0; j < data.rank; ++j)
    dot += Rational(data.cartan[i][j]) * a[j];
  out[i] = (out[i] - dot).mod1();
  return out;
}

inline int epsilon_exact(const AlgebraData& data, const RatVec2& start) {
  RatVec2 s = start;
  for (int j = 0; j < data.rank; ++j) s[j] = s[j].mod1();
  auto less = [&](const RatVec2& x, const RatVec2& y) {
    for (int j = 0; j < 2; ++j) {
      if (x[j] < y[j]) return true;
      if (y[j] < x[j]) return false;
    }
    return false;
  };
  std::set<RatVec2, decltype(less)> seen(less);
  seen.insert(s);
  std::vector<RatVec2> queue{s};
  while (!queue.empty()) {
    const RatVec2 x = queue.back();
    queue.pop_back();
    for (int i = 0; i < data.rank; ++i) {
      const RatVec2 r = torus_reflect_mod1(data, i, x);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return static_cast<int>(seen.size());
}

}  // namespace detail

/// Size of the W-orbit of x in R^n / Q^vee, by closure under the generating
/// reflections with exact mod-1 reduction.  Only exact (grid) points are
/// admissible.
inline int epsilon(const AlgebraData& data, const TorusPoint& x) {
  if (!x.exact)
    throw InexactPoint("epsilon requires exact rational coordinates");
  return detail::epsilon_exact(data, x.ar);
}

/// Reflection r_i on torus points (double coordinates, no mod-1 reduction);
/// used for symmetry checks of the orbit functions.
inline TorusPoint torus_reflect(const AlgebraData& data, int i,
                                const TorusPoint& x) {
  if (i < 1 || i > data.rank)
    throw std::out_of_range("torus_reflect: generator index out of range");
  const int k = i - 1;
  TorusPoint out = TorusPoint::from_doubles(x.a[0], x.a[1]);
  double dot = 0.0;
  for (int j = 0; j < data.rank; ++j) dot += data.cartan[k][j] * x.a[j];
  out.a[k] -= dot;
  return out;
}

}  // namespace orbitcub

#endif  // ORBITCUB_WEYL_HPP_
