#include "galfold/render_svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "galfold/error.hpp"

namespace galfold {

namespace {

struct XY {
  double x, y;
};

std::string fmt(double v) {
  if (std::fabs(v) < 0.00005) v = 0.0;  // avoid "-0.0000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

/// Euclidean realization from the Cartan data: symmetrizer d with
/// d_i A(i,j) symmetric, |alpha_i|^2 = 2 d_i, (alpha_i,alpha_j) = A(i,j) d_j.
struct Realization {
  XY alpha[2];
  double d[2];

  explicit Realization(const RootSystem& rs) {
    const Matrix& a = rs.cartan();
    d[0] = 1.0;
    d[1] = a(0, 1).to_double() / a(1, 0).to_double();
    double s1 = std::sqrt(2.0 * d[0]);
    double c = a(0, 1).to_double() * d[1] / s1;
    double h = std::sqrt(2.0 * d[1] - c * c);
    alpha[0] = {s1, 0.0};
    alpha[1] = {c, h};
  }

  /// Level coordinates -> Cartesian: solve (v, alpha_j) = x_j d_j.
  XY point(const Point& x) const {
    double b0 = x(0).to_double() * d[0];
    double b1 = x(1).to_double() * d[1];
    double det = alpha[0].x * alpha[1].y - alpha[0].y * alpha[1].x;
    return {(b0 * alpha[1].y - b1 * alpha[0].y) / det,
            (alpha[0].x * b1 - alpha[1].x * b0) / det};
  }

  XY root_vector(const Vector& coeffs) const {
    return {coeffs(0).to_double() * alpha[0].x + coeffs(1).to_double() * alpha[1].x,
            coeffs(0).to_double() * alpha[0].y + coeffs(1).to_double() * alpha[1].y};
  }
};

constexpr double kScale = 80.0;
constexpr double kPad = 1.0;

const char* kPalette[] = {"#c1272d", "#0000a7", "#008176", "#b3b3b3",
                          "#7f3c8d", "#f2b701"};

}  // namespace

std::string render_svg(const RootSystem& rs,
                       const std::vector<CombinatorialGallery>& galleries) {
  if (rs.rank() != 2)
    fail(Errc::RankUnsupported, "rendering supports rank-2 systems only");
  Realization re(rs);

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  auto grow = [&](XY p) {
    if (first) {
      minx = maxx = p.x;
      miny = maxy = p.y;
      first = false;
      return;
    }
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  };
  Face fund = fundamental_alcove(rs);
  for (const auto& v : fund.vertices()) grow(re.point(v));
  for (const auto& g : galleries) {
    for (const auto& f : g.panels)
      for (const auto& v : f.vertices()) grow(re.point(v));
    for (const auto& f : g.alcoves)
      for (const auto& v : f.vertices()) grow(re.point(v));
  }
  minx -= kPad;
  miny -= kPad;
  maxx += kPad;
  maxy += kPad;

  auto sx = [&](double x) { return (x - minx) * kScale; };
  auto sy = [&](double y) { return (maxy - y) * kScale; };
  double width = (maxx - minx) * kScale;
  double height = (maxy - miny) * kScale;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width)
      << " " << fmt(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  // Walls H_{beta,m} with a trace inside the viewport, clipped to it.
  for (int idx = 0; idx < static_cast<int>(rs.positive_roots().size()); ++idx) {
    const Vector& coeffs = rs.root(idx).coeffs;
    XY beta = re.root_vector(coeffs);
    double nb = beta.x * beta.x + beta.y * beta.y;
    double dbeta = nb / 2.0;
    XY corners[4] = {{minx, miny}, {minx, maxy}, {maxx, miny}, {maxx, maxy}};
    double lo = 1e300, hi = -1e300;
    for (auto cpt : corners) {
      double lvl = (cpt.x * beta.x + cpt.y * beta.y) / dbeta;
      lo = std::min(lo, lvl);
      hi = std::max(hi, lvl);
    }
    for (long m = static_cast<long>(std::ceil(lo)); m <= static_cast<long>(std::floor(hi)); ++m) {
      // Line (v,beta) = m*dbeta: base point + perpendicular direction.
      XY base{beta.x * m * dbeta / nb, beta.y * m * dbeta / nb};
      XY dir{-beta.y, beta.x};
      double tmin = -1e300, tmax = 1e300;
      auto clip = [&](double p, double q) {
        // p*t <= q
        if (p == 0.0) return q >= 0.0;
        double t = q / p;
        if (p < 0) tmin = std::max(tmin, t);
        else tmax = std::min(tmax, t);
        return true;
      };
      bool ok = clip(-dir.x, base.x - minx) && clip(dir.x, maxx - base.x) &&
                clip(-dir.y, base.y - miny) && clip(dir.y, maxy - base.y);
      if (!ok || tmin > tmax) continue;
      XY a{base.x + tmin * dir.x, base.y + tmin * dir.y};
      XY b{base.x + tmax * dir.x, base.y + tmax * dir.y};
      svg << "<line x1=\"" << fmt(sx(a.x)) << "\" y1=\"" << fmt(sy(a.y))
          << "\" x2=\"" << fmt(sx(b.x)) << "\" y2=\"" << fmt(sy(b.y))
          << "\" stroke=\"#d0d0d0\" stroke-width=\"1\"/>\n";
    }
  }

  // Fundamental alcove outline.
  {
    const auto& verts = fund.vertices();
    svg << "<polygon points=\"";
    for (std::size_t i = 0; i < verts.size(); ++i) {
      XY p = re.point(verts[i]);
      if (i) svg << " ";
      svg << fmt(sx(p.x)) << "," << fmt(sy(p.y));
    }
    svg << "\" fill=\"#efefef\" stroke=\"#808080\" stroke-width=\"1\"/>\n";
  }

  // Galleries: polyline through panel/alcove barycenters, markers at folds.
  for (std::size_t gi = 0; gi < galleries.size(); ++gi) {
    const auto& g = galleries[gi];
    const char* color = kPalette[gi % (sizeof kPalette / sizeof *kPalette)];
    svg << "<polyline points=\"";
    XY p0 = re.point(g.panels[0].barycenter());
    svg << fmt(sx(p0.x)) << "," << fmt(sy(p0.y));
    for (std::size_t i = 0; i < g.alcoves.size(); ++i) {
      XY c = re.point(g.alcoves[i].barycenter());
      XY p = re.point(g.panels[i + 1].barycenter());
      svg << " " << fmt(sx(c.x)) << "," << fmt(sy(c.y));
      svg << " " << fmt(sx(p.x)) << "," << fmt(sy(p.y));
    }
    svg << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    for (std::size_t i = 1; i < g.alcoves.size(); ++i) {
      if (g.alcoves[i - 1] == g.alcoves[i]) {
        XY p = re.point(g.panels[i].barycenter());
        svg << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y))
            << "\" r=\"4\" fill=\"" << color << "\"/>\n";
      }
    }
    // Endpoint dots.
    XY pe = re.point(g.panels.back().barycenter());
    svg << "<circle cx=\"" << fmt(sx(p0.x)) << "\" cy=\"" << fmt(sy(p0.y))
        << "\" r=\"3\" fill=\"#303030\"/>\n";
    svg << "<circle cx=\"" << fmt(sx(pe.x)) << "\" cy=\"" << fmt(sy(pe.y))
        << "\" r=\"3\" fill=\"#303030\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace galfold
