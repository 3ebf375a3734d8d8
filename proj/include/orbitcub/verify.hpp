#ifndef ORBITCUB_VERIFY_HPP_
#define ORBITCUB_VERIFY_HPP_

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbitcub/approx.hpp"
#include "orbitcub/cubature.hpp"
#include "orbitcub/refquad.hpp"

namespace orbitcub {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline const std::array<AlgebraLabel, 3>& rank2_labels() {
  static const std::array<AlgebraLabel, 3> l{
      AlgebraLabel::A2, AlgebraLabel::C2, AlgebraLabel::G2};
  return l;
}
inline const std::array<AlgebraLabel, 4>& all_labels() {
  static const std::array<AlgebraLabel, 4> l{
      AlgebraLabel::A1, AlgebraLabel::A2, AlgebraLabel::C2, AlgebraLabel::G2};
  return l;
}

// ---------------------------------------------------------------------------
// Reference tables: stabilizer orders, torus orbit sizes, weighted-sum
// estimates of |Omega|, and the Gaussian approximation errors.  Each
// compute_* recomputes from scratch; golden_* / published_* hold the
// expected entries.

using Table1 = std::array<std::array<int, 3>, 4>;   // zero patterns x algebra
using Table2 = std::array<std::array<int, 3>, 7>;   // index patterns x algebra
using Table3 = std::array<std::array<double, 5>, 3>;
using Table4 = std::array<double, 3>;

inline const std::array<int, 5>& table3_densities() {
  static const std::array<int, 5> m{10, 20, 30, 50, 100};
  return m;
}

inline Table1 golden_table1() {
  return {{{6, 8, 12}, {2, 2, 2}, {2, 2, 2}, {1, 1, 1}}};
}
inline Table2 golden_table2() {
  return {{{1, 1, 1},
           {1, 2, 3},
           {1, 1, 2},
           {3, 4, 6},
           {3, 4, 6},
           {3, 4, 6},
           {6, 8, 12}}};
}
inline Table3 published_table3() {
  return {{{6.0751, 6.2314, 6.2602, 6.2749, 6.2811},
           {10.056, 10.5133, 10.5985, 10.6421, 10.6605},
           {7.4789, 8.2561, 8.4092, 8.4885, 8.5221}}};
}
inline Table4 published_table4() { return {0.0636842, 0.0035217, 0.0000636}; }

/// Stabilizer orders by zero pattern of (lambda_1, lambda_2); several
/// representatives per pattern must agree.
inline Table1 compute_table1() {
  static const std::vector<Weight> reps[4] = {
      {{0, 0}},
      {{1, 0}, {2, 0}, {5, 0}},
      {{0, 1}, {0, 2}, {0, 5}},
      {{1, 1}, {2, 1}, {1, 3}}};
  Table1 t{};
  for (int col = 0; col < 3; ++col) {
    const AlgebraData d = build_algebra(rank2_labels()[col]);
    for (int row = 0; row < 4; ++row) {
      int h = 0;
      for (const Weight& w : reps[row]) {
        const int hw = stabilizer_order(d, w);
        if (h == 0) h = hw;
        if (hw != h)
          throw InternalError("stabilizer order is not constant on pattern");
      }
      t[row][col] = h;
    }
  }
  return t;
}

/// epsilon coefficients by zero pattern of the grid index [s0, s1, s2],
/// collected from several grids; all points of a pattern must agree.
inline Table2 compute_table2() {
  Table2 t{};
  for (auto& row : t) row = {0, 0, 0};
  for (int col = 0; col < 3; ++col) {
    const AlgebraData d = build_algebra(rank2_labels()[col]);
    for (int M : {4, 5, 12}) {
      for (const GridPoint& p : build_grid(d, M).points) {
        const int bits = (p.index[0] > 0 ? 4 : 0) | (p.index[1] > 0 ? 2 : 0) |
                         (p.index[2] > 0 ? 1 : 0);
        int row;
        switch (bits) {
          case 0b100: row = 0; break;
          case 0b010: row = 1; break;
          case 0b001: row = 2; break;
          case 0b110: row = 3; break;
          case 0b101: row = 4; break;
          case 0b011: row = 5; break;
          default: row = 6; break;
        }
        if (t[row][col] == 0) t[row][col] = p.eps;
        if (t[row][col] != p.eps)
          throw InternalError("epsilon is not constant on index pattern");
      }
    }
  }
  return t;
}

/// Weighted-sum estimates of the area of Omega (integrand K^{1/2}).
inline Table3 compute_table3() {
  Table3 t{};
  for (int row = 0; row < 3; ++row) {
    const AlgebraLabel label = rank2_labels()[row];
    const AlgebraData d = build_algebra(label);
    for (int col = 0; col < 5; ++col) {
      const CubatureRule rule = build_rule(d, table3_densities()[col]);
      t[row][col] = integrate(
          rule, [&](const OmegaPoint& y) { return k_sqrt(label, y); });
    }
  }
  return t;
}

/// Gaussian approximation errors on C2 for M = 10, 20, 30.
inline Table4 compute_table4(int R, int threads) {
  const AlgebraData c2 = build_algebra(AlgebraLabel::C2);
  Table4 t{};
  int k = 0;
  for (int M : {10, 20, 30}) {
    const ApproxCoeffs coeffs = coeffs_v(c2, M, gaussian_model);
    t[k++] = error_L2K(c2, gaussian_model, coeffs, R, threads);
  }
  return t;
}

inline std::string format_table1(const Table1& t) {
  std::ostringstream os;
  static const char* rows[4] = {"(0,0)", "(*,0)", "(0,*)", "(*,*)"};
  os << "h_lambda        A2   C2   G2\n";
  for (int r = 0; r < 4; ++r) {
    char line[64];
    std::snprintf(line, sizeof(line), "%-14s %4d %4d %4d\n", rows[r],
                  t[r][0], t[r][1], t[r][2]);
    os << line;
  }
  return os.str();
}

inline std::string format_table2(const Table2& t) {
  std::ostringstream os;
  static const char* rows[7] = {"[*,0,0]", "[0,*,0]", "[0,0,*]", "[*,*,0]",
                                "[*,0,*]", "[0,*,*]", "[*,*,*]"};
  os << "eps_j           A2   C2   G2\n";
  for (int r = 0; r < 7; ++r) {
    char line[64];
    std::snprintf(line, sizeof(line), "%-14s %4d %4d %4d\n", rows[r],
                  t[r][0], t[r][1], t[r][2]);
    os << line;
  }
  return os.str();
}

inline std::string format_table3(const Table3& t) {
  std::ostringstream os;
  os << "M         10        20        30        50        100\n";
  for (int r = 0; r < 3; ++r) {
    os << to_string(rank2_labels()[r]) << "  ";
    for (int c = 0; c < 5; ++c) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " %9.6g", t[r][c]);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

inline std::string format_table4(const Table4& t) {
  std::ostringstream os;
  os << "M                10         20         30\n" << "C2        ";
  for (double v : t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), " %10.7f", v);
    os << buf;
  }
  os << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Sampling helpers (deterministic given the seed).

/// Uniform point of the open fundamental simplex, optionally shrunk toward
/// the barycentre (shrink < 1 keeps a margin from the walls).
inline TorusPoint sample_interior_point(const AlgebraData& data,
                                        std::mt19937_64& rng,
                                        double shrink = 1.0) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::array<double, 2> u{0.0, 0.0};
  for (;;) {
    double s = 0.0;
    for (int i = 0; i < data.rank; ++i) {
      u[i] = uni(rng) / data.marks[i];
      s += u[i] * data.marks[i];
    }
    if (s < 1.0 && s > 0.0) break;
  }
  for (int i = 0; i < data.rank; ++i) {
    const double c = 1.0 / ((data.rank + 1) * data.marks[i]);
    u[i] = c + shrink * (u[i] - c);
  }
  double a[2] = {0.0, 0.0};
  for (int k = 0; k < data.rank; ++k)
    for (int i = 0; i < data.rank; ++i)
      a[k] += u[i] * data.omega_in_coroot_basis[i][k].to_double();
  return TorusPoint::from_doubles(a[0], a[1]);
}

inline Weight random_dominant(const AlgebraData& data, std::mt19937_64& rng,
                              int max_coord) {
  std::uniform_int_distribution<int> coord(0, max_coord);
  Weight w{coord(rng), 0};
  if (data.rank > 1) w[1] = coord(rng);
  return w;
}

// ---------------------------------------------------------------------------
// Checks.  Each recomputes what it needs and reports one pass/fail line.

namespace checks {

inline CheckResult tables_1_2() {
  CheckResult r{"tables 1-2 (h_lambda, eps_j orbit closures)", false, ""};
  const Table1 t1 = compute_table1();
  const Table2 t2 = compute_table2();
  const bool ok1 = t1 == golden_table1();
  const bool ok2 = t2 == golden_table2();
  r.pass = ok1 && ok2;
  r.detail = ok1 ? (ok2 ? "all entries exact" : "eps table mismatch")
                 : "h_lambda table mismatch";
  return r;
}

inline CheckResult table_3(double tol) {
  CheckResult r{"table 3 (weighted-sum area estimates)", false, ""};
  const Table3 got = compute_table3();
  const Table3 want = published_table3();
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j)
      worst = std::max(worst, std::abs(got[i][j] - want[i][j]));
  r.pass = worst <= tol;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max |dev| = %.2e (tol %.0e)", worst, tol);
  r.detail = buf;
  return r;
}

inline CheckResult exact_area_convergence(double rel_tol) {
  CheckResult r{"M=100 estimates vs exact areas", false, ""};
  const Table3 got = compute_table3();
  const double exact[3] = {kTwoPi, 32.0 / 3.0, 128.0 / 15.0};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    worst = std::max(worst, std::abs(got[i][4] - exact[i]) / exact[i]);
  r.pass = worst <= rel_tol;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max rel dev = %.2e (tol %.0e)", worst,
                rel_tol);
  r.detail = buf;
  return r;
}

inline CheckResult table_4(int R, double rel_tol, int threads) {
  CheckResult r{"table 4 (C2 Gaussian approximation errors)", false, ""};
  const Table4 got = compute_table4(R, threads);
  const Table4 want = published_table4();
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    worst = std::max(worst, std::abs(got[i] - want[i]) / want[i]);
  r.pass = worst <= rel_tol;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "computed {%.7f, %.7f, %.7f}, max rel dev %.2f (tol %.2f)",
                got[0], got[1], got[2], worst, rel_tol);
  r.detail = buf;
  return r;
}

inline CheckResult discrete_orthogonality(int max_M) {
  CheckResult r{"discrete orthogonality sums", false, ""};
  double worst = 0.0;
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    for (int M = 1; M <= max_M; ++M) {
      const GridFM grid = build_grid(d, M);
      double cmn = d.c;
      for (int i = 0; i < d.rank; ++i) cmn *= M;
      for (const Weight& lambda : enumerate_dominant(d, 2 * M - 1)) {
        const bool in_mq = weight_in_MQ(d, lambda, M);
        if (in_mq && lambda != Weight{0, 0}) {
          r.detail = "separation violated: nonzero in-range weight in MQ";
          return r;
        }
        const Complex s = discrete_sum(d, lambda, grid);
        const double dev = std::abs(s - (in_mq ? Complex(cmn) : Complex(0)));
        worst = std::max(worst, dev / cmn);
      }
    }
  }
  r.pass = worst <= 1e-9;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max |dev|/cM^n = %.2e (tol 1e-09)", worst);
  r.detail = buf;
  return r;
}

inline CheckResult weighted_counts(int max_M) {
  CheckResult r{"sum of eps over F_M equals c M^n", false, ""};
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    for (int M = 1; M <= max_M; ++M) {
      std::int64_t cmn = d.c;
      for (int i = 0; i < d.rank; ++i) cmn *= M;
      if (grid_weighted_count(build_grid(d, M)) != cmn) {
        r.detail = std::string("mismatch for ") + to_string(label) +
                   " at M=" + std::to_string(M);
        return r;
      }
    }
  }
  r.pass = true;
  r.detail = "exact for all algebras, M <= " + std::to_string(max_M);
  return r;
}

inline CheckResult separation_lemma(int max_M) {
  CheckResult r{"separation of MQ from low m-degree weights", false, ""};
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    for (int M = 1; M <= max_M; ++M) {
      for (const Weight& lambda : enumerate_dominant(d, 2 * M - 1)) {
        if (lambda == Weight{0, 0}) continue;
        if (weight_in_MQ(d, lambda, M)) {
          r.detail = std::string("violation for ") + to_string(label);
          return r;
        }
      }
    }
  }
  r.pass = true;
  r.detail = "exhaustive for all algebras, M <= " + std::to_string(max_M);
  return r;
}

inline CheckResult cubature_exactness(int per_M, int R, double tol,
                                      unsigned seed, int threads) {
  CheckResult r{"cubature exactness vs reference quadrature", false, ""};
  double worst = 0.0;
  for (AlgebraLabel label : rank2_labels()) {
    const AlgebraData d = build_algebra(label);
    double pref = kappa(label) / (d.vol_F * d.weyl_order);
    for (int i = 0; i < d.rank; ++i) pref *= kTwoPi;
    for (int M : {3, 5, 8}) {
      const CubatureRule rule = build_rule(d, M);
      std::vector<Weight> cands = enumerate_dominant(d, 2 * M - 1);
      if (static_cast<int>(cands.size()) > per_M) {
        std::mt19937_64 rng(seed + 1000 * M + static_cast<unsigned>(label));
        std::shuffle(cands.begin(), cands.end(), rng);
        cands.resize(per_M);
        std::sort(cands.begin(), cands.end());
      }
      std::vector<double> devs(cands.size());
      parallel_chunks(cands.size(), threads, [&](std::size_t i) {
        const CFunction c(d, cands[i]);
        const Complex lhs = integrate_pullback(
            rule, [&](const TorusPoint& x) { return c(x); });
        const RefResultC ref = ref_integral_F(
            d, [&](const TorusPoint& x) { return c(x); }, R, 1);
        devs[i] = std::abs(lhs - pref * ref.value);
      });
      for (double dv : devs) worst = std::max(worst, dv);
    }
  }
  r.pass = worst <= tol;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max |dev| = %.2e (tol %.0e)", worst, tol);
  r.detail = buf;
  return r;
}

inline CheckResult jacobian_identity(int samples, double tol, unsigned seed) {
  CheckResult r{"analytic vs finite-difference Jacobian", false, ""};
  double worst = 0.0;
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    std::mt19937_64 rng(seed + static_cast<unsigned>(label));
    for (int i = 0; i < samples; ++i) {
      // Sampling keeps a wall margin: the relative comparison degrades where
      // |S_rho| (and with it |J|) goes to zero.
      const TorusPoint x = sample_interior_point(d, rng, 0.8);
      const double ja = jacobian_abs(d, x);
      const double jn = numeric_jacobian_abs(d, x, 1e-5);
      worst = std::max(worst, std::abs(ja - jn) / ja);
    }
  }
  r.pass = worst <= tol;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max rel dev = %.2e (tol %.0e)", worst, tol);
  r.detail = buf;
  return r;
}

inline CheckResult k_identity(int samples, double tol, unsigned seed) {
  CheckResult r{"K(X(x)) equals |S_rho(x)|^2", false, ""};
  double worst = 0.0;
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    const XMap map(d);
    const SFunction s_rho(d, rho_weight(d));
    std::mt19937_64 rng(seed + 17 * static_cast<unsigned>(label));
    for (int i = 0; i < samples; ++i) {
      const TorusPoint x = sample_interior_point(d, rng);
      const double lhs = eval_K(label, map(x));
      const double rhs = std::norm(s_rho(x));
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, rhs));
    }
  }
  r.pass = worst <= tol;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max rel dev = %.2e (tol %.0e)", worst, tol);
  r.detail = buf;
  return r;
}

inline CheckResult injectivity(int max_M) {
  CheckResult r{"node sets have |Omega_M| = |F_M|", false, ""};
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    for (int M = 1; M <= max_M; ++M) {
      const CubatureRule rule = build_rule(d, M);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < rule.nodes.size(); ++j) {
          const double dx = rule.nodes[i].y.y1 - rule.nodes[j].y.y1;
          const double dy = rule.nodes[i].y.y2 - rule.nodes[j].y.y2;
          if (dx * dx + dy * dy <= 1e-18) {
            r.detail = std::string("coincident nodes for ") +
                       to_string(label) + " at M=" + std::to_string(M);
            return r;
          }
        }
    }
  }
  r.pass = true;
  r.detail =
      "pairwise node distance > 1e-9 for all algebras, M <= " +
      std::to_string(max_M);
  return r;
}

inline CheckResult approx_recovery(double tol) {
  CheckResult r{"cubature coefficients recover pullback orbit functions",
                false, ""};
  double worst = 0.0;
  for (AlgebraLabel label : rank2_labels()) {
    const AlgebraData d = build_algebra(label);
    const int M = 6;
    for (const Weight& mu : enumerate_dominant(d, M - 1)) {
      const CFunction c(d, mu);
      auto f = [&](const OmegaPoint&, const TorusPoint& x) -> Complex {
        return c(x);
      };
      const ApproxCoeffs coeffs = coeffs_v(d, M, f);
      for (const auto& [lambda, a] : coeffs.entries) {
        const Complex want = (lambda == mu) ? Complex(1.0) : Complex(0.0);
        worst = std::max(worst, std::abs(a - want));
      }
    }
  }
  r.pass = worst <= tol;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max |dev| = %.2e (tol %.0e)", worst, tol);
  r.detail = buf;
  return r;
}

inline CheckResult approx_v_equals_u(int R, double tol, unsigned seed,
                                     int threads) {
  CheckResult r{"cubature coefficients match oracle coefficients on low "
                "degrees", false, ""};
  double worst = 0.0;
  for (AlgebraLabel label : rank2_labels()) {
    const AlgebraData d = build_algebra(label);
    const int M = 4;
    // Random combination of pullback orbit functions of m-degree <= M-1;
    // for A2 the coefficients come in conjugate pairs so f stays real.
    std::mt19937_64 rng(seed + static_cast<unsigned>(label));
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<std::pair<CFunction, Complex>> terms;
    for (const Weight& mu : enumerate_dominant(d, M - 1)) {
      Complex c(uni(rng), 0.0);
      if (label == AlgebraLabel::A2) {
        if (mu[0] < mu[1]) continue;
        if (mu[0] > mu[1]) c = Complex(uni(rng), uni(rng));
      }
      terms.emplace_back(CFunction(d, mu), c);
      if (label == AlgebraLabel::A2 && mu[0] > mu[1])
        terms.emplace_back(CFunction(d, Weight{mu[1], mu[0]}), std::conj(c));
    }
    auto f = [&](const OmegaPoint&, const TorusPoint& x) -> Complex {
      Complex s = 0.0;
      for (const auto& [c, coeff] : terms) s += coeff * c(x);
      return s;
    };
    const ApproxCoeffs v = coeffs_v(d, M, f);
    const ApproxCoeffs u = coeffs_u(d, M, f, R, threads);
    for (std::size_t i = 0; i < v.entries.size(); ++i)
      worst = std::max(worst,
                       std::abs(v.entries[i].second - u.entries[i].second));
  }
  r.pass = worst <= tol;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max |dev| = %.2e (tol %.0e)", worst, tol);
  r.detail = buf;
  return r;
}

inline CheckResult approx_residual_orthogonality(int R, int threads) {
  CheckResult r{"oracle truncation leaves an orthogonal residual", false, ""};
  const AlgebraData d = build_algebra(AlgebraLabel::C2);
  const int M = 3;
  const ApproxCoeffs u = coeffs_u(d, M, gaussian_model, R, threads);
  const ApproxEvaluator ev(d, u);
  const XMap map(d);
  double worst = 0.0;
  for (const Weight& lambda : enumerate_dominant(d, M)) {
    const CFunction c(d, lambda);
    auto integrand = [&](const TorusPoint& x) -> Complex {
      return (Complex(gaussian_model(map(x))) - ev(x)) *
             std::conj(c(x));
    };
    const RefResultC res = ref_integral_F(d, integrand, R, threads);
    const double h = stabilizer_order(d, lambda);
    const double scale = h / (d.weyl_order * d.vol_F);
    const double tol = std::max(1e-6, 5.0 * scale * res.error_estimate);
    worst = std::max(worst, scale * std::abs(res.value) / tol);
  }
  // Perturbing any coefficient must increase the computed error.
  const double base_err = error_L2K(d, gaussian_model, u, R, threads);
  bool monotone = true;
  for (std::size_t k = 0; k < u.entries.size(); k += 3) {
    ApproxCoeffs pert = u;
    pert.entries[k].second += 0.05;
    if (error_L2K(d, gaussian_model, pert, R, threads) <= base_err)
      monotone = false;
  }
  r.pass = worst <= 1.0 && monotone;
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "max residual/tol = %.2f; perturbations increase error: %s",
                worst, monotone ? "yes" : "no");
  r.detail = buf;
  return r;
}

inline CheckResult thread_determinism(int table4_R, int threads) {
  CheckResult r{"table output is identical across thread counts", false, ""};
  const std::string t1a = format_table1(compute_table1());
  const std::string t1b = format_table1(compute_table1());
  const std::string t2a = format_table2(compute_table2());
  const std::string t2b = format_table2(compute_table2());
  const std::string t3a = format_table3(compute_table3());
  const std::string t3b = format_table3(compute_table3());
  const std::string t4a = format_table4(compute_table4(table4_R, 1));
  const std::string t4b = format_table4(compute_table4(table4_R, threads));
  r.pass = t1a == t1b && t2a == t2b && t3a == t3b && t4a == t4b;
  r.detail = r.pass ? "bit-for-bit equal (1 vs " + std::to_string(threads) +
                          " threads)"
                    : "outputs differ";
  return r;
}

inline CheckResult two_forms_consistency(unsigned seed) {
  CheckResult r{"node-side and pullback-side sums agree", false, ""};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double worst = 0.0;
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    const XMap map(d);
    const double c0 = uni(rng), c1 = uni(rng), c2 = uni(rng), c3 = uni(rng);
    auto f = [&](const OmegaPoint& y) {
      return c0 + c1 * y.y1 + c2 * y.y2 + c3 * y.y1 * y.y2;
    };
    const CubatureRule rule = build_rule(d, 7);
    const double lhs = integrate(rule, f);
    const double rhs =
        integrate_pullback(rule, [&](const TorusPoint& x) { return f(map(x)); });
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  r.pass = worst <= 1e-12;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max |dev| = %.2e (tol 1e-12)", worst);
  r.detail = buf;
  return r;
}

inline CheckResult refquad_sanity(int R, double area_tol, int threads) {
  CheckResult r{"reference quadrature consistency", false, ""};
  const double exact_area[4] = {4.0, kTwoPi, 32.0 / 3.0, 128.0 / 15.0};
  double worst_vol = 0.0, worst_area = 0.0;
  int k = 0;
  for (AlgebraLabel label : all_labels()) {
    const AlgebraData d = build_algebra(label);
    const RefResult one = ref_integral_F(
        d, [](const TorusPoint&) { return 1.0; }, R, threads);
    worst_vol = std::max(worst_vol, std::abs(one.value - d.vol_F) / d.vol_F);
    const RefResult area = ref_integral_Omega_weighted(
        d, [&](const OmegaPoint& y) { return k_sqrt(label, y); }, R, threads);
    worst_area = std::max(worst_area, std::abs(area.value - exact_area[k]));
    ++k;
  }
  r.pass = worst_vol <= 1e-10 && worst_area <= area_tol;
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "|F| rel dev %.2e; area dev %.2e (tol %.0e)", worst_vol,
                worst_area, area_tol);
  r.detail = buf;
  return r;
}

}  // namespace checks

/// The verification suites behind the command-line `verify` subcommand.
inline std::vector<CheckResult> run_verification(bool full, int threads) {
  std::vector<CheckResult> out;
  out.push_back(checks::tables_1_2());
  out.push_back(checks::weighted_counts(full ? 30 : 10));
  out.push_back(checks::separation_lemma(full ? 30 : 10));
  out.push_back(checks::discrete_orthogonality(10));
  out.push_back(checks::two_forms_consistency(2024));
  out.push_back(checks::refquad_sanity(full ? 512 : 128,
                                       full ? 1e-2 : 5e-2, threads));
  out.push_back(checks::k_identity(full ? 1000 : 100, 1e-9, 91));
  out.push_back(checks::jacobian_identity(full ? 100 : 10, 1e-6, 92));
  out.push_back(checks::injectivity(full ? 60 : 20));
  out.push_back(checks::approx_recovery(1e-8));
  if (full) {
    out.push_back(checks::table_3(5e-4));
    out.push_back(checks::exact_area_convergence(3e-3));
    out.push_back(checks::cubature_exactness(67, 512, 1e-6, 7, threads));
    out.push_back(checks::approx_v_equals_u(256, 1e-6, 11, threads));
    out.push_back(checks::approx_residual_orthogonality(256, threads));
    out.push_back(checks::table_4(1024, 0.05, threads));
  }
  return out;
}

}  // namespace orbitcub

#endif  // ORBITCUB_VERIFY_HPP_
