#ifndef GALFOLD_FACE_HPP
#define GALFOLD_FACE_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "galfold/affine_map.hpp"
#include "galfold/rational.hpp"
#include "galfold/root_system.hpp"

namespace galfold {

/// A simplex of the standard apartment, stored as its exact vertex set.
/// Vertices are kept lexicographically sorted so equality of faces is
/// equality of vertex sets.
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<Point> vertices);
  static Face vertex(Point p) { return Face({std::move(p)}); }

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  bool is_vertex() const { return verts_.size() == 1; }
  const std::vector<Point>& vertices() const { return verts_; }
  Point barycenter() const;

  /// Vertex-set inclusion (improper faces allowed).
  bool has_subface(const Face& sub) const;

  friend bool operator==(const Face& a, const Face& b) {
    if (a.verts_.size() != b.verts_.size()) return false;
    for (std::size_t i = 0; i < a.verts_.size(); ++i)
      if (a.verts_[i] != b.verts_[i]) return false;
    return true;
  }
  friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }
  friend bool operator<(const Face& a, const Face& b);

  std::string str() const;
  std::vector<std::int64_t> key() const;

 private:
  std::vector<Point> verts_;
};

Face apply(const AffineMap& phi, const Face& f);

/// Result of walking a point into the closed fundamental alcove by repeated
/// reflection at violated facet walls (tie-break: smallest (root index,
/// level)). `map` sends the input to `image`; `inv` undoes it.
struct FoldResult {
  AffineMap map;
  AffineMap inv;
  Point image;
  int steps = 0;
};

FoldResult fold_to_fundamental(const RootSystem& rs, const Point& x);

/// The fundamental alcove as a Face: the origin plus, for each i, e_i scaled
/// so that the highest-root pairing is 1.
Face fundamental_alcove(const RootSystem& rs);

/// The smallest simplex of the complex containing x in its relative
/// interior (the simplicial support of x).
Face support_face(const RootSystem& rs, const Point& x);

/// Canonical W_aff-orbit representative: the image of f inside the closed
/// fundamental alcove under the deterministic fold of its barycenter.
Face canonical_face(const RootSystem& rs, const Face& f);

/// Whether f is a genuine simplex of the Coxeter complex: distinct vertices
/// whose canonical image is a subset of the fundamental alcove's vertices.
bool is_complex_face(const RootSystem& rs, const Face& f);

/// Caller-owned memo for complex-face checks over exact faces; corpus
/// drivers share one across galleries. Purely an accelerator.
struct FaceCheckCache {
  std::unordered_map<std::string, bool> complex_face;
};

bool is_complex_face(const RootSystem& rs, const Face& f,
                     FaceCheckCache* cache);

/// All vertices of f satisfy sign * (<v,alpha> - m) >= 0.
bool weakly_in_halfspace(const RootSystem& rs, const Face& f,
                         const Hyperplane& h, int sign);

/// Level m with f contained in H_{alpha,m}, if any (alpha a positive root).
std::optional<long> wall_level_of(const RootSystem& rs, const Face& f,
                                  int root_index);

/// The unique wall containing a codimension-one face of an alcove;
/// nullopt when the span is not a wall (i.e. the face is not a panel).
std::optional<Hyperplane> spanning_wall(const RootSystem& rs, const Face& f);

}  // namespace galfold

#endif  // GALFOLD_FACE_HPP
