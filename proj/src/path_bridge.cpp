#include "galfold/path_bridge.hpp"

#include <cassert>

#include "galfold/error.hpp"

namespace galfold {

CombinatorialGallery embed_segment(const RootSystem& rs, const Segment& pi) {
  return segment_walk(rs, pi.start, pi.end).gallery;
}

namespace {

struct PushedWalk {
  SegmentWalk walk;
  std::vector<AffineMap> maps;  // accumulated block isometry per alcove
  CombinatorialGallery folded;
};

PushedWalk run_ops(const RootSystem& rs, const Segment& pi,
                   const std::vector<OperatorChoice>& ops) {
  PushedWalk pw;
  pw.walk = segment_walk(rs, pi.start, pi.end);
  pw.folded = pw.walk.gallery;
  pw.maps.assign(pw.folded.alcoves.size(), AffineMap::identity(rs.rank()));
  for (const auto& op : ops) {
    OperatorApplication app =
        apply_operator(rs, pw.folded, op.simple_root, op.kind);
    for (std::size_t i = 0; i < pw.maps.size(); ++i)
      pw.maps[i] = compose(app.alcove_maps[i], pw.maps[i]);
    pw.folded = std::move(app.gallery);
  }
  return pw;
}

}  // namespace

CombinatorialGallery push_through_gallery(const RootSystem& rs,
                                          const Segment& pi,
                                          const std::vector<OperatorChoice>& ops) {
  return run_ops(rs, pi, ops).folded;
}

PiecewisePath push_through(const RootSystem& rs, const Segment& pi,
                           const std::vector<OperatorChoice>& ops) {
  PushedWalk pw = run_ops(rs, pi, ops);
  PiecewisePath path;
  const auto& cuts = pw.walk.cuts;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    int idx = pw.walk.piece_alcove[p];
    AffineMap map =
        idx >= 0 ? pw.maps[static_cast<std::size_t>(idx)] : AffineMap::identity(rs.rank());
    Point a = map(pi.at(cuts[p]));
    Point b = map(pi.at(cuts[p + 1]));
    if (!path.breakpoints.empty()) {
      // Consecutive block images must agree at the shared cut parameter; the
      // cut points lie on the fixed walls of the governing reflections.
      assert(path.breakpoints.back().second == a &&
             "pushed path discontinuous at a cut");
      path.breakpoints.back().second = a;
    } else {
      path.breakpoints.emplace_back(cuts[p], a);
    }
    path.breakpoints.emplace_back(cuts[p + 1], b);
  }
  return path;
}

namespace {

/// Solve sum t_i v_i = x, sum t_i = 1 exactly (vertices affinely
/// independent); nullopt when x is outside the affine span.
std::optional<std::vector<Rat>> barycentric_coords(const Point& x,
                                                   const Face& f) {
  const auto& vs = f.vertices();
  const int rows = static_cast<int>(x.size()) + 1;
  const int cols = static_cast<int>(vs.size());
  Matrix a(rows, cols + 1);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r + 1 < rows; ++r) a(r, c) = vs[c](r);
    a(rows - 1, c) = Rat(1);
  }
  for (int r = 0; r + 1 < rows; ++r) a(r, cols) = x(r);
  a(rows - 1, cols) = Rat(1);

  // Row echelon with exact pivots.
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (!a(r, c).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != rank) a.row(p).swap(a.row(rank));
    Rat q = a(rank, c);
    for (int cc = 0; cc <= cols; ++cc) a(rank, cc) /= q;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a(r, c).is_zero()) continue;
      Rat factor = a(r, c);
      for (int cc = 0; cc <= cols; ++cc) a(r, cc) -= factor * a(rank, cc);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (!a(r, cols).is_zero()) return std::nullopt;  // inconsistent
  std::vector<Rat> t(static_cast<std::size_t>(cols), Rat(0));
  for (int r = 0; r < rank; ++r) t[static_cast<std::size_t>(pivot_col[r])] = a(r, cols);
  return t;
}

}  // namespace

bool point_in_closed_face(const Point& x, const Face& f) {
  auto t = barycentric_coords(x, f);
  if (!t) return false;
  for (const auto& ti : *t)
    if (ti < Rat(0)) return false;
  return true;
}

}  // namespace galfold
