#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace orbitcub;

TEST_CASE("rational arithmetic stays normalized") {
  const Rational a(2, 4), b(-1, 3);
  CHECK(a == Rational(1, 2));
  CHECK((a + b) == Rational(1, 6));
  CHECK((a * b) == Rational(-1, 6));
  CHECK((a - Rational(1)) == Rational(-1, 2));
  CHECK(Rational(-7, 3).mod1() == Rational(2, 3));
  CHECK(Rational(5, 3).mod1() == Rational(2, 3));
  CHECK(Rational(4, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("algebra labels parse and reject") {
  CHECK(parse_label("A2") == AlgebraLabel::A2);
  CHECK(parse_label("G2") == AlgebraLabel::G2);
  CHECK_THROWS_AS(parse_label("B2"), UnsupportedAlgebra);
  CHECK_THROWS_AS(parse_label("a2"), UnsupportedAlgebra);
}

TEST_CASE("root-system data is derived correctly") {
  const AlgebraData a1 = build_algebra(AlgebraLabel::A1);
  const AlgebraData a2 = build_algebra(AlgebraLabel::A2);
  const AlgebraData c2 = build_algebra(AlgebraLabel::C2);
  const AlgebraData g2 = build_algebra(AlgebraLabel::G2);

  CHECK(a2.c == 3);
  CHECK(c2.c == 2);
  CHECK(g2.c == 1);
  CHECK(a1.c == 2);

  CHECK(a2.cartan == IntMat2{{{2, -1}, {-1, 2}}});
  CHECK(c2.cartan == IntMat2{{{2, -1}, {-2, 2}}});
  CHECK(g2.cartan == IntMat2{{{2, -3}, {-1, 2}}});

  CHECK(a2.marks == std::array<int, 2>{1, 1});
  CHECK(c2.marks == std::array<int, 2>{2, 1});
  CHECK(g2.marks == std::array<int, 2>{2, 3});

  // Highest-dual-root search; these drive the m-degree.
  CHECK(a1.dual_marks[0] == 1);
  CHECK(a2.dual_marks == std::array<int, 2>{1, 1});
  CHECK(c2.dual_marks == std::array<int, 2>{1, 2});
  CHECK(g2.dual_marks == std::array<int, 2>{3, 2});

  CHECK(a2.weyl_order == 6);
  CHECK(c2.weyl_order == 8);
  CHECK(g2.weyl_order == 12);
  CHECK(a2.coxeter_number == 3);
  CHECK(c2.coxeter_number == 4);
  CHECK(g2.coxeter_number == 6);

  // |F| against the closed forms sqrt(3)/6, 1/4, sqrt(3)/12, sqrt(2)/2.
  CHECK(a2.vol_F == Catch::Approx(std::sqrt(3.0) / 6.0).epsilon(1e-12));
  CHECK(c2.vol_F == Catch::Approx(0.25).epsilon(1e-12));
  CHECK(g2.vol_F == Catch::Approx(std::sqrt(3.0) / 12.0).epsilon(1e-12));
  CHECK(a1.vol_F == Catch::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("ambient realization reproduces the Gram matrix") {
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) {
        double dot = 0.0;
        for (int k = 0; k < d.rank; ++k)
          dot += d.simple_roots[i][k] * d.simple_roots[j][k];
        CHECK(dot == Catch::Approx(d.gram[i][j].to_double()).margin(1e-12));
      }
    // |det(coroot matrix)| two ways: ambient vs sqrt of the coroot Gram.
    double gv[2][2] = {{0, 0}, {0, 0}};
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j)
        gv[i][j] = 4.0 * d.gram[i][j].to_double() /
                   (d.gram[i][i].to_double() * d.gram[j][j].to_double());
    const double det_gv = d.rank == 1
                              ? gv[0][0]
                              : gv[0][0] * gv[1][1] - gv[0][1] * gv[1][0];
    CHECK(d.det_coroot == Catch::Approx(std::sqrt(det_gv)).epsilon(1e-12));
    CHECK(d.det_coroot ==
          Catch::Approx(d.weyl_order * d.vol_F).epsilon(1e-12));
  }
}

TEST_CASE("basis-change matrix is the exact inverse transpose of Cartan") {
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) {
        Rational e(0);
        for (int k = 0; k < d.rank; ++k)
          e += d.omega_in_coroot_basis[i][k] * Rational(d.cartan[j][k]);
        CHECK(e == Rational(i == j ? 1 : 0));
      }
  }
}

TEST_CASE("omega-vee vectors pair to delta against the simple roots") {
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    for (int i = 0; i < d.rank; ++i) {
      double ov[2] = {0.0, 0.0};
      for (int k = 0; k < d.rank; ++k)
        for (int c = 0; c < d.rank; ++c)
          ov[c] += d.omega_in_coroot_basis[i][k].to_double() * d.coroots[k][c];
      for (int j = 0; j < d.rank; ++j) {
        double dot = 0.0;
        for (int c = 0; c < d.rank; ++c) dot += ov[c] * d.simple_roots[j][c];
        CHECK(dot == Catch::Approx(i == j ? 1.0 : 0.0).margin(1e-12));
      }
    }
  }
}

TEST_CASE("highest dual root pairs nonnegatively with the simple roots") {
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    for (int i = 0; i < d.rank; ++i) {
      int dot = 0;
      for (int k = 0; k < d.rank; ++k) dot += d.cartan[i][k] * d.dual_marks[k];
      CHECK(dot >= 0);
    }
  }
}

TEST_CASE("m-degree") {
  const AlgebraData a2 = build_algebra(AlgebraLabel::A2);
  const AlgebraData g2 = build_algebra(AlgebraLabel::G2);
  CHECK(m_degree(a2, {0, 0}) == 0);
  CHECK(m_degree(a2, {1, 1}) == 2);
  CHECK(m_degree(g2, {1, 0}) == 3);  // dual marks (3,2)
  CHECK(m_degree(g2, {0, 1}) == 2);
}

TEST_CASE("dominant weight enumeration") {
  const AlgebraData a2 = build_algebra(AlgebraLabel::A2);
  const AlgebraData g2 = build_algebra(AlgebraLabel::G2);
  CHECK(enumerate_dominant(a2, 0) == std::vector<Weight>{{0, 0}});
  CHECK(enumerate_dominant(a2, 2) ==
        std::vector<Weight>{
            {0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
  CHECK(enumerate_dominant(g2, 2) == std::vector<Weight>{{0, 0}, {0, 1}});

  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    const auto list = enumerate_dominant(d, 9);
    CHECK(std::is_sorted(list.begin(), list.end()));
    CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
    for (const Weight& w : list) CHECK(m_degree(d, w) <= 9);
  }
}

TEST_CASE("membership in the scaled root lattice") {
  const AlgebraData a2 = build_algebra(AlgebraLabel::A2);
  CHECK(weight_in_MQ(a2, {0, 0}, 1));
  CHECK(weight_in_MQ(a2, {0, 0}, 7));
  CHECK(weight_in_MQ(a2, {1, 1}, 1));   // alpha_1 + alpha_2
  CHECK_FALSE(weight_in_MQ(a2, {1, 0}, 1));
  CHECK(weight_in_MQ(a2, {2, 2}, 2));
  CHECK_FALSE(weight_in_MQ(a2, {2, 2}, 3));
  CHECK_THROWS_AS(weight_in_MQ(a2, {1, 0}, 0), InvalidM);
}

TEST_CASE("separation of MQ from weights of low m-degree") {
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    for (int M = 1; M <= 20; ++M)
      for (const Weight& lambda : enumerate_dominant(d, 2 * M - 1)) {
        if (lambda == Weight{0, 0}) continue;
        CAPTURE(to_string(label), M, lambda[0], lambda[1]);
        CHECK_FALSE(weight_in_MQ(d, lambda, M));
      }
  }
}

TEST_CASE("m-degree is monotone along the dominance order") {
  std::mt19937_64 rng(330);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    for (int trial = 0; trial < 400; ++trial) {
      const Weight lambda = random_dominant(d, rng, 20);
      Weight nu = lambda;
      for (int i = 0; i < d.rank; ++i) {
        const int k = coeff(rng);
        const Weight alpha = d.simple_root_omega(i);
        for (int j = 0; j < d.rank; ++j) nu[j] -= k * alpha[j];
      }
      if (!d.is_dominant(nu)) continue;
      CHECK(m_degree(d, nu) <= m_degree(d, lambda));
    }
  }
}
