#ifndef GALFOLD_GALLERY_HPP
#define GALFOLD_GALLERY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galfold/face.hpp"

namespace galfold {

/// Combinatorial gallery (p_0 c c_0 > p_1 c ... c_l > p_{l+1}): interleaved
/// small faces (panels) and equidimensional large faces (alcoves). The
/// trivial gallery is a single panel and no alcoves. Endpoint faces may be
/// arbitrary faces; vertex-bounded galleries are the subclass where both are
/// vertices.
struct CombinatorialGallery {
  std::vector<Face> panels;   // size = alcoves.size() + 1
  std::vector<Face> alcoves;

  static CombinatorialGallery trivial(Face f) {
    return {{std::move(f)}, {}};
  }

  int length() const { return static_cast<int>(alcoves.size()); }
  const Face& first_face() const { return panels.front(); }
  const Face& last_face() const { return panels.back(); }

  friend bool operator==(const CombinatorialGallery& a,
                         const CombinatorialGallery& b) {
    return a.panels == b.panels && a.alcoves == b.alcoves;
  }

  std::string str() const;
};

enum class ViolationKind {
  CountMismatch,
  InvalidFace,
  DimensionMismatch,
  PanelNotFace,
  RepeatedPanel,
};

struct Violation {
  ViolationKind kind;
  int index;  // face position: panel index or alcove index per `at_panel`
  bool at_panel;
  std::string detail;
};

const char* violation_name(ViolationKind k);

/// Empty result means the gallery satisfies every invariant; otherwise each
/// violation names the failing index and clause. A shared FaceCheckCache
/// speeds corpus-scale runs.
std::vector<Violation> validate(const RootSystem& rs,
                                const CombinatorialGallery& g,
                                FaceCheckCache* cache = nullptr);
bool is_valid(const RootSystem& rs, const CombinatorialGallery& g,
              FaceCheckCache* cache = nullptr);

/// gamma = gamma_k^- * gamma_k^+ split at panel k (0 <= k <= l+1).
std::pair<CombinatorialGallery, CombinatorialGallery> split(
    const CombinatorialGallery& g, int k);

/// Concatenation along an exactly-equal junction face.
CombinatorialGallery concat(const CombinatorialGallery& a,
                            const CombinatorialGallery& b);

/// Apply an isometry of the extended affine Weyl group facewise.
CombinatorialGallery apply_map(const RootSystem& rs, const AffineMap& phi,
                               const CombinatorialGallery& g);

/// Endpoint vertex as a Point (Errc::EndpointNotVertex otherwise).
Point weight(const CombinatorialGallery& g);

/// Sequence of canonical orbit labels, one per face, invariant under the
/// affine Weyl group acting on the whole gallery.
struct GalleryType {
  std::vector<Face> labels;

  friend bool operator==(const GalleryType& a, const GalleryType& b) {
    return a.labels == b.labels;
  }
  std::string str() const;
};

GalleryType gallery_type(const RootSystem& rs, const CombinatorialGallery& g);

/// A minimal gallery from f_start to f_end: cells along the straight segment
/// between barycenters (staying inside every wall containing the segment),
/// with deterministic minimal detours where the segment meets faces of
/// codimension > 1.
CombinatorialGallery minimal_gallery(const RootSystem& rs, const Face& f_start,
                                     const Face& f_end);

/// The walk behind minimal_gallery, with the bookkeeping the path bridge
/// needs: cut parameters 0 = t_0 < ... < t_r = 1 of the segment x0 -> y0 and,
/// per open piece (t_i, t_{i+1}), the index of the gallery alcove containing
/// it (detour alcoves inserted at a multi-wall crossing carry no piece).
struct SegmentWalk {
  CombinatorialGallery gallery;
  std::vector<Rat> cuts;
  std::vector<int> piece_alcove;  // size = cuts.size() - 1; -1 for a trivial walk
};

SegmentWalk segment_walk(const RootSystem& rs, const Point& x0, const Point& y0);

/// Positive-fold predicate: the fold at panel index i (where alcoves i-1 and
/// i coincide) bounces off its wall from the negative side.
bool fold_is_positive(const RootSystem& rs, const CombinatorialGallery& g,
                      int panel_index);
bool is_positively_folded(const RootSystem& rs, const CombinatorialGallery& g);

/// Seeded corpus generator: walks the type of `minimal`, at each step either
/// crossing the prescribed panel or folding at it. With `positive_only`,
/// folds are chosen only when positive. Deterministic for fixed seed.
CombinatorialGallery generate_random_folded(const RootSystem& rs,
                                            const CombinatorialGallery& minimal,
                                            std::uint64_t seed,
                                            bool positive_only = false);

}  // namespace galfold

#endif  // GALFOLD_GALLERY_HPP
