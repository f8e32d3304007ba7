#ifndef GALFOLD_PATH_BRIDGE_HPP
#define GALFOLD_PATH_BRIDGE_HPP

#include <utility>
#include <vector>

#include "galfold/folding.hpp"
#include "galfold/gallery.hpp"

namespace galfold {

/// A geodesic segment t |-> start + t (end - start), t in [0,1], inside the
/// standard apartment, with rational endpoints.
struct Segment {
  Point start;
  Point end;

  Point at(const Rat& t) const {
    Point d = end - start;
    return start + (d * t).eval();
  }
};

/// A minimal gallery containing the segment, from the support of pi(0) to the
/// support of pi(1). If pi lies in a wall, so does the gallery.
CombinatorialGallery embed_segment(const RootSystem& rs, const Segment& pi);

/// Piecewise-linear path as (parameter, point) breakpoints.
struct PiecewisePath {
  std::vector<std::pair<Rat, Point>> breakpoints;

  Point endpoint() const { return breakpoints.back().second; }
};

/// Image of the segment under a sequence of gallery folding operators applied
/// to its embedding gallery: each linear piece is moved by the block isometry
/// governing the alcove containing it. Errc::OperatorUndefined propagates.
PiecewisePath push_through(const RootSystem& rs, const Segment& pi,
                           const std::vector<OperatorChoice>& ops);

/// The folded gallery push_through maps into (for containment checks).
CombinatorialGallery push_through_gallery(const RootSystem& rs,
                                          const Segment& pi,
                                          const std::vector<OperatorChoice>& ops);

/// Exact membership of a point in the closed simplex spanned by a face.
bool point_in_closed_face(const Point& x, const Face& f);

}  // namespace galfold

#endif  // GALFOLD_PATH_BRIDGE_HPP
