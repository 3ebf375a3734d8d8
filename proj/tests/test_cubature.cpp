#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace orbitcub;

TEST_CASE("rule construction invariants") {
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    const CubatureRule rule = build_rule(d, 9);
    CHECK(rule.size() == build_grid(d, 9).size());
    for (const auto& n : rule.nodes) {
      CHECK(n.weight == rule.prefactor * n.eps);
      CHECK(in_omega(label, n.y));
    }
  }
  CHECK_THROWS_AS(build_rule(build_algebra(AlgebraLabel::A2), 0), InvalidM);
}

TEST_CASE("rule prefactors") {
  const double pi = std::numbers::pi;
  for (int M : {1, 4, 13}) {
    CHECK(build_rule(build_algebra(AlgebraLabel::A2), M).prefactor ==
          Catch::Approx(pi * pi / (9.0 * M * M)).epsilon(1e-15));
    CHECK(build_rule(build_algebra(AlgebraLabel::C2), M).prefactor ==
          Catch::Approx(pi * pi / (4.0 * M * M)).epsilon(1e-15));
    CHECK(build_rule(build_algebra(AlgebraLabel::G2), M).prefactor ==
          Catch::Approx(pi * pi / (3.0 * M * M)).epsilon(1e-15));
    CHECK(build_rule(build_algebra(AlgebraLabel::A1), M).prefactor ==
          Catch::Approx(pi / (2.0 * M)).epsilon(1e-15));
  }
}

TEST_CASE("weighted sums of simple integrands") {
  const AlgebraData a2 = build_algebra(AlgebraLabel::A2);
  const CubatureRule r2 = build_rule(a2, 2);
  const double pi = std::numbers::pi;
  CHECK(integrate(r2, [](const OmegaPoint&) { return 0.0; }) == 0.0);
  CHECK(integrate_pullback(r2, [](const TorusPoint&) { return 1.0; }) ==
        Catch::Approx(pi * pi / 3.0).epsilon(1e-12));

  const AlgebraData g2 = build_algebra(AlgebraLabel::G2);
  const CubatureRule rg = build_rule(g2, 1);
  CHECK(integrate_pullback(rg, [](const TorusPoint&) { return 1.0; }) ==
        Catch::Approx(pi * pi / 3.0).epsilon(1e-12));

  // Discrete orthogonality through the pullback form.
  const CubatureRule r3 = build_rule(a2, 3);
  const CFunction c10(a2, {1, 0});
  const Complex v =
      integrate_pullback(r3, [&](const TorusPoint& x) { return c10(x); });
  CHECK(std::abs(v) < 1e-9 * r3.prefactor * 27.0);
}

TEST_CASE("node-side and pullback-side sums coincide") {
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    const XMap map(d);
    const CubatureRule rule = build_rule(d, 7);
    auto f = [](const OmegaPoint& y) {
      return 0.4 - 0.3 * y.y1 + 0.25 * y.y2 + 0.1 * y.y1 * y.y2 -
             0.05 * y.y2 * y.y2;
    };
    const double lhs = integrate(rule, f);
    const double rhs = integrate_pullback(
        rule, [&](const TorusPoint& x) { return f(map(x)); });
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("area estimates reproduce the reference row") {
  const AlgebraData a2 = build_algebra(AlgebraLabel::A2);
  const CubatureRule rule = build_rule(a2, 10);
  const double v = integrate(
      rule, [](const OmegaPoint& y) { return k_sqrt(AlgebraLabel::A2, y); });
  CHECK(v == Catch::Approx(6.0751).margin(5e-4));
}

TEST_CASE("exactness against the reference quadrature") {
  std::mt19937_64 rng(7);
  for (AlgebraLabel label : rank2_labels()) {
    const AlgebraData d = build_algebra(label);
    double pref = kappa(label) / (d.vol_F * d.weyl_order);
    pref *= kTwoPi * kTwoPi;
    const int M = 3;
    const CubatureRule rule = build_rule(d, M);
    auto cands = enumerate_dominant(d, 2 * M - 1);
    std::shuffle(cands.begin(), cands.end(), rng);
    if (cands.size() > 8) cands.resize(8);
    for (const Weight& lambda : cands) {
      const CFunction c(d, lambda);
      const Complex lhs =
          integrate_pullback(rule, [&](const TorusPoint& x) { return c(x); });
      const RefResultC ref = ref_integral_F(
          d, [&](const TorusPoint& x) { return c(x); }, 256, 2);
      CAPTURE(to_string(label), lambda[0], lambda[1]);
      CHECK(std::abs(lhs - pref * ref.value) < 1e-6);
    }
  }
}
