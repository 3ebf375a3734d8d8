#ifndef ORBITCUB_EXPORT_HPP_
#define ORBITCUB_EXPORT_HPP_

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbitcub/cubature.hpp"

namespace orbitcub {

/// One node record of an exported rule.  a1, a2 are the alpha^vee
/// coordinates of the grid point in their canonical closed form (not
/// reduced mod 1), y1, y2 the node, weight = prefactor * eps.
struct ExportRecord {
  std::string algebra;
  int M = 0;
  int s0 = 0, s1 = 0, s2 = 0;
  double a1 = 0.0, a2 = 0.0;
  double y1 = 0.0, y2 = 0.0;
  int eps = 0;
  double weight = 0.0;
};

inline std::vector<ExportRecord> make_records(const AlgebraData& data,
                                              const CubatureRule& rule) {
  const GridFM grid = build_grid(data, rule.M);
  std::vector<ExportRecord> out;
  out.reserve(rule.size());
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const auto& n = rule.nodes[j];
    const auto& p = grid.points[j];
    ExportRecord r;
    r.algebra = to_string(data.label);
    r.M = rule.M;
    r.s0 = n.index[0], r.s1 = n.index[1], r.s2 = n.index[2];
    r.a1 = p.alpha_coords[0].to_double();
    r.a2 = p.alpha_coords[1].to_double();
    r.y1 = n.y.y1, r.y2 = n.y.y2;
    r.eps = n.eps;
    r.weight = n.weight;
    out.push_back(std::move(r));
  }
  return out;
}

namespace detail {

inline std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

inline void write_csv(const std::vector<ExportRecord>& records,
                      std::ostream& os) {
  os << "algebra,M,s0,s1,s2,a1,a2,y1,y2,eps,weight\n";
  for (const auto& r : records) {
    os << r.algebra << ',' << r.M << ',' << r.s0 << ',' << r.s1 << ',' << r.s2
       << ',' << detail::fmt17(r.a1) << ',' << detail::fmt17(r.a2) << ','
       << detail::fmt17(r.y1) << ',' << detail::fmt17(r.y2) << ',' << r.eps
       << ',' << detail::fmt17(r.weight) << '\n';
  }
}

inline nlohmann::json rule_to_json(const AlgebraData& data,
                                   const CubatureRule& rule) {
  nlohmann::json j;
  j["algebra"] = to_string(data.label);
  j["M"] = rule.M;
  j["prefactor"] = rule.prefactor;
  nlohmann::json nodes = nlohmann::json::array();
  const auto records = make_records(data, rule);
  for (const auto& r : records) {
    nodes.push_back({{"index", {r.s0, r.s1, r.s2}},
                     {"x", {r.a1, r.a2}},
                     {"y", {r.y1, r.y2}},
                     {"eps", r.eps},
                     {"weight", r.weight}});
  }
  j["nodes"] = std::move(nodes);
  return j;
}

/// Minimal parsed form of an exported rule, for consumers that re-apply the
/// weights to their own integrand.
struct ParsedRule {
  std::string algebra;
  int M = 0;
  double prefactor = 0.0;
  std::vector<ExportRecord> nodes;
};

inline ParsedRule parse_rule_json(const nlohmann::json& j) {
  ParsedRule out;
  out.algebra = j.at("algebra").get<std::string>();
  out.M = j.at("M").get<int>();
  out.prefactor = j.at("prefactor").get<double>();
  for (const auto& n : j.at("nodes")) {
    ExportRecord r;
    r.algebra = out.algebra;
    r.M = out.M;
    r.s0 = n.at("index")[0].get<int>();
    r.s1 = n.at("index")[1].get<int>();
    r.s2 = n.at("index")[2].get<int>();
    r.a1 = n.at("x")[0].get<double>();
    r.a2 = n.at("x")[1].get<double>();
    r.y1 = n.at("y")[0].get<double>();
    r.y2 = n.at("y")[1].get<double>();
    r.eps = n.at("eps").get<int>();
    r.weight = n.at("weight").get<double>();
    out.nodes.push_back(std::move(r));
  }
  return out;
}

/// Boundary of Omega as polylines: the images of the edges of F under X
/// (one curve per wall), each sampled at a fixed number of points.
inline std::vector<std::vector<OmegaPoint>> omega_boundary(
    const AlgebraData& data, int samples_per_curve = 512) {
  const XMap map(data);
  std::vector<std::vector<OmegaPoint>> curves;
  if (data.rank == 1) {
    std::vector<OmegaPoint> seg;
    for (int i = 0; i < samples_per_curve; ++i) {
      const double t = static_cast<double>(i) / (samples_per_curve - 1);
      seg.push_back(map.eval(t * data.omega_in_coroot_basis[0][0].to_double() /
                             data.marks[0]));
    }
    curves.push_back(std::move(seg));
    return curves;
  }
  // Vertices of F in omega^vee coordinates: 0, e_1/m_1, e_2/m_2.
  const double verts[3][2] = {
      {0.0, 0.0},
      {1.0 / data.marks[0], 0.0},
      {0.0, 1.0 / data.marks[1]}};
  for (int e = 0; e < 3; ++e) {
    const double* p = verts[e];
    const double* q = verts[(e + 1) % 3];
    std::vector<OmegaPoint> curve;
    curve.reserve(samples_per_curve);
    for (int i = 0; i < samples_per_curve; ++i) {
      const double t = static_cast<double>(i) / (samples_per_curve - 1);
      const double u[2] = {p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
      double a[2] = {0.0, 0.0};
      for (int k = 0; k < 2; ++k)
        for (int i2 = 0; i2 < 2; ++i2)
          a[k] += u[i2] * data.omega_in_coroot_basis[i2][k].to_double();
      curve.push_back(map.eval(a[0], a[1]));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

/// Scatter plot of the nodes over the Omega boundary.  viewBox fitted to
/// the bounding box with a 5% margin; node radius 0.5% of the width.
inline void write_svg(const AlgebraData& data, const CubatureRule& rule,
                      std::ostream& os) {
  const auto curves = omega_boundary(data);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto grow = [&](const OmegaPoint& p) {
    xmin = std::min(xmin, p.y1), xmax = std::max(xmax, p.y1);
    ymin = std::min(ymin, p.y2), ymax = std::max(ymax, p.y2);
  };
  for (const auto& c : curves)
    for (const auto& p : c) grow(p);
  for (const auto& n : rule.nodes) grow(n.y);
  if (data.rank == 1) {
    ymin = -1.0;
    ymax = 1.0;
  }
  const double mx = 0.05 * (xmax - xmin);
  const double my = 0.05 * (ymax - ymin);
  xmin -= mx, xmax += mx, ymin -= my, ymax += my;
  const double w = xmax - xmin, h = ymax - ymin;
  const double r = 0.005 * w;

  // SVG y grows downward; emit with the vertical axis flipped.
  auto sy = [&](double y) { return ymax - y + ymin; };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin << ' '
     << ymin << ' ' << w << ' ' << h << "\">\n";
  for (const auto& c : curves) {
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\""
       << 0.2 * r << "\" points=\"";
    for (const auto& p : c) os << p.y1 << ',' << sy(p.y2) << ' ';
    os << "\"/>\n";
  }
  for (const auto& n : rule.nodes)
    os << "  <circle cx=\"" << n.y.y1 << "\" cy=\"" << sy(n.y.y2) << "\" r=\""
       << r << "\" fill=\"steelblue\"/>\n";
  os << "</svg>\n";
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace orbitcub

#endif  // ORBITCUB_EXPORT_HPP_
