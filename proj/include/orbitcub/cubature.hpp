#ifndef ORBITCUB_CUBATURE_HPP_
#define ORBITCUB_CUBATURE_HPP_

#include <type_traits>
#include <vector>

#include "orbitcub/grid.hpp"
#include "orbitcub/numeric.hpp"
#include "orbitcub/xmap.hpp"

namespace orbitcub {

/// Cubature rule on Omega: nodes y^(j) = X(x_j) for x_j in F_M, weights
/// w_j = prefactor * eps_j with prefactor = (kappa / (c |W|)) (2 pi / M)^n.
struct CubatureRule {
  struct Node {
    std::array<int, 3> index{0, 0, 0};
    TorusPoint x;
    OmegaPoint y;
    int eps = 0;
    double weight = 0.0;
  };

  AlgebraLabel algebra{};
  int M = 0;
  double prefactor = 0.0;
  std::vector<Node> nodes;
  std::size_t size() const { return nodes.size(); }
};

inline CubatureRule build_rule(const AlgebraData& data, int M) {
  if (M < 1) throw InvalidM("build_rule requires M >= 1");
  const GridFM grid = build_grid(data, M);
  const XMap map(data);

  CubatureRule rule;
  rule.algebra = data.label;
  rule.M = M;
  rule.prefactor = kappa(data.label) / (data.c * data.weyl_order);
  for (int i = 0; i < data.rank; ++i) rule.prefactor *= kTwoPi / M;

  rule.nodes.reserve(grid.size());
  for (const auto& p : grid.points) {
    CubatureRule::Node n;
    n.index = p.index;
    n.x = p.torus();
    n.y = map(n.x);
    n.eps = p.eps;
    n.weight = rule.prefactor * p.eps;
    if (!in_omega(data.label, n.y))
      throw InternalError("cubature node falls outside Omega");
    rule.nodes.push_back(n);
  }
  return rule;
}

/// sum_j w_j f(y^(j)) in node order with compensated accumulation.  The
/// integrand may take (OmegaPoint) or (OmegaPoint, TorusPoint); the second
/// form supports integrands defined through the pullback to F.
template <class F>
double integrate(const CubatureRule& rule, F&& f) {
  KahanSum acc;
  for (const auto& n : rule.nodes) {
    double v;
    if constexpr (std::is_invocable_v<F&, const OmegaPoint&,
                                      const TorusPoint&>) {
      v = f(n.y, n.x);
    } else {
      v = f(n.y);
    }
    acc.add(n.weight * v);
  }
  return acc.value();
}

/// prefactor * sum_j eps_j g(x_j) for g defined on F; equals integrate for
/// g = f o X.  Returns double or Complex depending on the integrand.
template <class G>
auto integrate_pullback(const CubatureRule& rule, G&& g) {
  using R = std::invoke_result_t<G&, const TorusPoint&>;
  if constexpr (std::is_same_v<R, Complex>) {
    KahanSumComplex acc;
    for (const auto& n : rule.nodes)
      acc.add(static_cast<double>(n.eps) * g(n.x));
    return rule.prefactor * acc.value();
  } else {
    KahanSum acc;
    for (const auto& n : rule.nodes)
      acc.add(n.eps * static_cast<double>(g(n.x)));
    return rule.prefactor * acc.value();
  }
}

}  // namespace orbitcub

#endif  // ORBITCUB_CUBATURE_HPP_
