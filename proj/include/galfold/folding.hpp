#ifndef GALFOLD_FOLDING_HPP
#define GALFOLD_FOLDING_HPP

#include <optional>
#include <vector>

#include "galfold/gallery.hpp"

namespace galfold {

enum class OperatorKind { E, F, ETilde };

const char* operator_name(OperatorKind k);

/// Case data (m, j, k) for the three folding operators. `m` is the minimal
/// integer level over all panels lying in a wall of direction alpha; j and k
/// delimit the reflected block per case:
///   (I,   e)      m <= -1; k minimal with p_k in H_{alpha,m},
///                 j <= k maximal with p_j in H_{alpha,m+1}.
///   (II,  f)      m <= <nu,alpha> - 1; j maximal with p_j in H_{alpha,m},
///                 k >= j minimal with p_k in H_{alpha,m+1}.
///   (III, etilde) the gallery crosses H_{alpha,m}; j minimal with p_j in
///                 H_{alpha,m} and every earlier alcove separated from the
///                 dominant chamber by it; k > j maximal with p_k in
///                 H_{alpha,m}.
struct OperatorIndices {
  OperatorKind kind;
  int root_index;  // simple root
  long m;
  int j;
  int k;
};

/// Case detection. Returns nullopt exactly when the case condition fails.
/// Requires a valid gallery starting at the origin vertex and a simple root
/// (Errc::NotOriginBased / Errc::NotSimpleRoot otherwise).
std::optional<OperatorIndices> operator_indices(const RootSystem& rs,
                                                const CombinatorialGallery& g,
                                                int simple_root,
                                                OperatorKind kind);

/// An operator application together with the block isometry that moved each
/// face (identity / s_{alpha,.} / t_{+-alpha^vee}); the maps drive the path
/// bridge and the normal-form checks.
struct OperatorApplication {
  CombinatorialGallery gallery;
  std::vector<AffineMap> alcove_maps;  // one per alcove
  std::vector<AffineMap> panel_maps;   // one per panel
  OperatorIndices indices;
  std::vector<std::string> notes;      // strict-paper diagnostics
};

/// Core application. With `strict_paper`, uses the printed variants (clause
/// gap in e, s_{alpha,m+1} in f and etilde, endpoints kept verbatim) whose
/// defects surface in validate().
OperatorApplication apply_operator(const RootSystem& rs,
                                   const CombinatorialGallery& g,
                                   int simple_root, OperatorKind kind,
                                   bool strict_paper = false);

CombinatorialGallery e_alpha(const RootSystem& rs,
                             const CombinatorialGallery& g, int simple_root);
CombinatorialGallery f_alpha(const RootSystem& rs,
                             const CombinatorialGallery& g, int simple_root);
CombinatorialGallery e_tilde_alpha(const RootSystem& rs,
                                   const CombinatorialGallery& g,
                                   int simple_root);

/// Blockwise reflection identity behind the root-group corollary:
///   e:      prefix * s_{alpha,m+1}(middle) * (s_{alpha,m+1} s_{alpha,m})(tail)
///   f:      prefix * s_{alpha,m}(middle) * (s_{alpha,m} s_{alpha,m+1})(tail)
///   etilde: prefix * s_{alpha,m}(middle) * tail
/// built from split/concat/apply_map; must equal the operator exactly.
CombinatorialGallery reflection_normal_form(const RootSystem& rs,
                                            const CombinatorialGallery& g,
                                            int simple_root, OperatorKind kind);

struct OperatorChoice {
  OperatorKind kind;
  int simple_root;
};

/// Least set containing gamma_min closed under all defined applications of
/// the chosen operators, enumerated breadth-first with galleries ordered by
/// serialized form. Errc::BudgetExceeded past `budget` galleries.
std::vector<CombinatorialGallery> orbit(const RootSystem& rs,
                                        const CombinatorialGallery& gamma_min,
                                        const std::vector<OperatorChoice>& ops,
                                        std::size_t budget = 20000);

}  // namespace galfold

#endif  // GALFOLD_FOLDING_HPP
