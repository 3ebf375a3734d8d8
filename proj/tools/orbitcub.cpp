// Command-line surface: node/weight export (csv, json, svg), reference
// tables, the Gaussian approximation example, and the verification suites.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orbitcub/export.hpp"
#include "orbitcub/orbitcub.hpp"
#include "orbitcub/verify.hpp"

namespace {

using namespace orbitcub;

int cmd_nodes(const std::string& algebra, int M, const std::string& format,
              const std::string& out) {
  const AlgebraData data = build_algebra(parse_label(algebra));
  const CubatureRule rule = build_rule(data, M);
  std::ostringstream body;
  if (format == "csv") {
    write_csv(make_records(data, rule), body);
  } else if (format == "json") {
    body << rule_to_json(data, rule).dump(2) << '\n';
  } else {
    write_svg(data, rule, body);
  }
  write_file(out, body.str());
  std::printf("wrote %zu nodes (%s, M=%d) to %s\n", rule.size(),
              to_string(data.label), M, out.c_str());
  return 0;
}

int cmd_table(int which, int R, int threads) {
  switch (which) {
    case 1: {
      const Table1 t = compute_table1();
      std::fputs(format_table1(t).c_str(), stdout);
      return t == golden_table1() ? 0 : 1;
    }
    case 2: {
      const Table2 t = compute_table2();
      std::fputs(format_table2(t).c_str(), stdout);
      return t == golden_table2() ? 0 : 1;
    }
    case 3:
      std::fputs(format_table3(compute_table3()).c_str(), stdout);
      return 0;
    default:
      std::fputs(format_table4(compute_table4(R, threads)).c_str(), stdout);
      return 0;
  }
}

int cmd_approx(const std::string& algebra, int M, const std::string& out,
               int R, int threads) {
  const AlgebraData data = build_algebra(parse_label(algebra));
  const RecentredGaussian f(data);
  const ApproxCoeffs coeffs = coeffs_v(data, M, f);

  nlohmann::json j;
  j["algebra"] = to_string(data.label);
  j["M"] = M;
  j["center"] = {f.c1, f.c2};
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [lambda, a] : coeffs.entries)
    entries.push_back({{"lambda", {lambda[0], lambda[1]}},
                       {"re", a.real()},
                       {"im", a.imag()}});
  j["coeffs"] = std::move(entries);
  write_file(out + ".coeffs.json", j.dump(2) + "\n");

  // Approximant sampled on a regular grid in F, mapped through X.
  const ApproxEvaluator ev(data, coeffs);
  const XMap map(data);
  std::ostringstream csv;
  csv << "a1,a2,y1,y2,f,vM\n";
  const int G = 64;
  for (int i = 0; i <= G; ++i) {
    for (int jj = 0; jj <= (data.rank == 1 ? 0 : G - i); ++jj) {
      double a[2] = {0.0, 0.0};
      const double u[2] = {static_cast<double>(i) / (G * data.marks[0]),
                           data.rank > 1 ? static_cast<double>(jj) /
                                               (G * data.marks[1])
                                         : 0.0};
      for (int k = 0; k < data.rank; ++k)
        for (int l = 0; l < data.rank; ++l)
          a[k] += u[l] * data.omega_in_coroot_basis[l][k].to_double();
      const OmegaPoint y = map.eval(a[0], a[1]);
      const Complex v = ev.eval(a[0], a[1]);
      if (std::abs(v.imag()) >= 1e-10)
        throw InternalError("approximant of a real function is not real");
      char line[200];
      std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    a[0], a[1], y.y1, y.y2, f(y), v.real());
      csv << line;
    }
  }
  write_file(out + ".grid.csv", csv.str());

  const double err = error_L2K(data, f, coeffs, R, threads);
  std::printf("%s M=%d: %zu coefficients, L2_K error %.8g\n",
              to_string(data.label), M, coeffs.entries.size(), err);
  return 0;
}

int cmd_verify(const std::string& level, int threads) {
  const bool full = level == "full";
  const auto results = run_verification(full, threads);
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %-55s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s: %zu checks, %s\n", full ? "full" : "quick", results.size(),
              all ? "all passed" : "FAILURES present");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubature rules and polynomial approximation built from "
               "Weyl-group orbit functions (A1, A2, C2, G2)"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads for parallel sums (0 = auto); results are "
                 "identical for any value");

  std::string algebra = "C2", format = "csv", out, level = "quick";
  int M = 0, which = 0, R = 1024;

  auto* nodes =
      app.add_subcommand("nodes", "export the nodes and weights of a rule");
  nodes->add_option("--algebra", algebra, "A1, A2, C2 or G2")->required();
  nodes->add_option("--M", M, "grid density (>= 1)")->required();
  nodes->add_option("--format", format, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  nodes->add_option("--out", out, "output path")->required();

  auto* table = app.add_subcommand("table", "recompute and print a table");
  table->add_option("which", which, "1: h_lambda; 2: eps_j; 3: area "
                    "estimates; 4: Gaussian approximation errors")
      ->required()
      ->check(CLI::Range(1, 4));
  table->add_option("--R", R, "oracle subdivision for table 4");

  auto* approx = app.add_subcommand(
      "approx", "expand the Gaussian model and report its L2_K error");
  approx->add_option("--algebra", algebra, "A1, A2, C2 or G2");
  approx->add_option("--M", M, "expansion density (>= 1)")->required();
  approx->add_option("--out", out, "output file prefix")->required();
  approx->add_option("--R", R, "oracle subdivision for the error integral");

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(nodes)) {
      if (M < 1) throw InvalidM("--M must be >= 1");
      return cmd_nodes(algebra, M, format, out);
    }
    if (app.got_subcommand(table)) return cmd_table(which, R, threads);
    if (app.got_subcommand(approx)) {
      if (M < 1) throw InvalidM("--M must be >= 1");
      return cmd_approx(algebra, M, out, R, threads);
    }
    return cmd_verify(level, threads);
  } catch (const IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return 3;
  } catch (const UnsupportedAlgebra& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const InvalidM& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
