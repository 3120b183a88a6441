#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "torusfan/io.hpp"

namespace torusfan {

namespace {

std::string ray_label(const RatVector& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i].get_str();
  return s + ")";
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Point2 {
  double x, y;
};

// Orthonormal basis of normal^perp by Gram-Schmidt over the unit vectors,
// then a cabinet projection when the slice is three-dimensional.
class Projector {
 public:
  explicit Projector(const RatVector& normal) {
    const std::size_t n = normal.size();
    std::vector<std::vector<double>> frame;
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = normal[i].get_d();
    frame.push_back(unit(a));
    for (std::size_t i = 0; i < n && frame.size() < n; ++i) {
      std::vector<double> v(n, 0.0);
      v[i] = 1.0;
      for (const auto& b : frame) {
        const double c = dot(v, b);
        for (std::size_t j = 0; j < n; ++j) v[j] -= c * b[j];
      }
      if (std::sqrt(dot(v, v)) > 1e-9) frame.push_back(unit(v));
    }
    basis_.assign(frame.begin() + 1, frame.end());
  }

  Point2 operator()(const RatVector& p) const {
    std::vector<double> x(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) x[i] = p[i].get_d();
    std::vector<double> c;
    for (const auto& b : basis_) c.push_back(dot(x, b));
    c.resize(3, 0.0);
    const double k = 0.5;
    return {c[0] + k * c[2] * std::cos(M_PI / 6), -(c[1] + k * c[2] * std::sin(M_PI / 6))};
  }

 private:
  static double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }
  static std::vector<double> unit(std::vector<double> v) {
    const double len = std::sqrt(dot(v, v));
    for (auto& x : v) x /= len;
    return v;
  }

  std::vector<std::vector<double>> basis_;
};

}  // namespace

FanSlice slice_fan(const Fan& fan, const RatVector& normal, const Rat& level) {
  const std::size_t n = fan.ambient_dim();
  if (normal.size() != n) throw InputError("slice: normal has " + std::to_string(normal.size()) +
                                           " entries, expected " + std::to_string(n));
  if (is_zero(normal)) throw InputError("slice: normal must be nonzero");

  FanSlice out;
  for (const auto& c : fan.maximal_cones()) {
    std::vector<AffineHalfspace> halfspaces;
    for (const auto& f : c.facets()) halfspaces.push_back({f, 0});
    std::vector<AffineHyperplane> hyperplanes{{normal, level}};
    for (const auto& e : c.equations()) hyperplanes.push_back({e, 0});
    const Polyhedron p = Polyhedron::from_inequalities(n, halfspaces, hyperplanes);
    if (p.is_empty() || p.dim() + 1 != static_cast<int>(c.dim())) continue;
    if (!p.is_bounded()) throw InputError("slice: the hyperplane cuts a cone in an unbounded set");

    SliceCell cell;
    cell.vertices = p.vertices();
    std::vector<RatVector> eqs;
    for (const auto& h : p.hyperplanes()) eqs.push_back(h.normal);
    for (std::size_t i = 0; i < cell.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < cell.vertices.size(); ++j) {
        std::vector<RatVector> tight = eqs;
        for (const auto& h : p.halfspaces())
          if (dot(h.normal, cell.vertices[i]) == h.offset && dot(h.normal, cell.vertices[j]) == h.offset)
            tight.push_back(h.normal);
        if (rank(tight, n) + 1 == n) cell.edges.emplace_back(i, j);
      }
    out.cells.push_back(std::move(cell));
  }
  if (out.cells.empty()) throw InputError("slice: the hyperplane misses the support of the fan");

  for (const auto& r : fan.rays()) {
    const Rat s = dot(normal, r);
    if (sgn(s) == 0) continue;
    const Rat t = level / s;
    if (sgn(t) > 0) out.labels.push_back({t * r, ray_label(r)});
  }
  return out;
}

std::string svg_slice(const Fan& fan, const RatVector& normal, const Rat& level) {
  const std::size_t n = fan.ambient_dim();
  if (n < 2 || n > 4) throw InputError("slice: drawing needs ambient rank 2, 3 or 4");
  const FanSlice slice = slice_fan(fan, normal, level);
  const Projector project(normal);

  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  auto extend = [&](const Point2& p) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  };
  for (const auto& cell : slice.cells)
    for (const auto& v : cell.vertices) extend(project(v));
  for (const auto& l : slice.labels) extend(project(l.point));
  double span = std::max(hi_x - lo_x, hi_y - lo_y);
  if (span <= 0) span = 1;
  const double margin = 0.05 * span;
  const double vx = lo_x - margin, vy = lo_y - margin;
  const double vw = std::max(hi_x - lo_x, 1e-9 * span) + 2 * margin;
  const double vh = std::max(hi_y - lo_y, 1e-9 * span) + 2 * margin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(vx) << ' ' << fmt(vy) << ' '
      << fmt(vw) << ' ' << fmt(vh) << "\" width=\"600\" height=\"" << fmt(600 * vh / vw) << "\">\n";
  const std::string stroke = fmt(0.004 * span), font = fmt(0.035 * span), dot_r = fmt(0.008 * span);

  for (std::size_t c = 0; c < slice.cells.size(); ++c) {
    const auto& cell = slice.cells[c];
    svg << "  <g class=\"cell\" id=\"cell-" << c << "\" stroke=\"#1f4e79\" stroke-width=\"" << stroke
        << "\" fill=\"none\">\n";
    for (const auto& [i, j] : cell.edges) {
      const Point2 a = project(cell.vertices[i]), b = project(cell.vertices[j]);
      svg << "    <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
          << "\"/>\n";
    }
    svg << "  </g>\n";
  }
  svg << "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"" << font << "\">\n";
  for (const auto& l : slice.labels) {
    const Point2 p = project(l.point);
    svg << "    <circle class=\"ray-point\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"" << dot_r
        << "\"/>\n";
    svg << "    <text class=\"ray-label\" x=\"" << fmt(p.x + 0.015 * span) << "\" y=\"" << fmt(p.y - 0.015 * span)
        << "\">" << l.text << "</text>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace torusfan
