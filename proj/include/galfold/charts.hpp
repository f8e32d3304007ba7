#ifndef GALFOLD_CHARTS_HPP
#define GALFOLD_CHARTS_HPP

#include <string>

#include "galfold/folding.hpp"
#include "galfold/gallery.hpp"

namespace galfold {

/// Chart of the glued multi-apartment model. Base is the standard apartment
/// A. Lower(alpha,k) is the auxiliary apartment A_k with A n A_k = H-_{alpha,k};
/// Folded(alpha,k) is B_k = (A_k \ A) u (A \ A_k). Every chart is
/// coordinatized as a copy of the standard apartment; the chart transitions
/// are: Lower <-> Folded on the shared branch by s_{alpha,k}, Base <-> Folded
/// on H+_{alpha,k} by the identity.
struct ChartId {
  enum Kind { Base, Lower, Folded };
  Kind kind = Base;
  int root_index = -1;  // simple root, for Lower/Folded
  long level = 0;

  static ChartId base() { return {}; }
  static ChartId lower(int root, long k) { return {Lower, root, k}; }
  static ChartId folded(int root, long k) { return {Folded, root, k}; }

  friend bool operator==(const ChartId& a, const ChartId& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Base) return true;
    return a.root_index == b.root_index && a.level == b.level;
  }
  std::string str() const;
};

/// A face tagged with the chart it lives in. Canonical form: faces weakly in
/// a shared region carry the Base label; Folded labels normalize away
/// entirely (each Folded face is either Base-upper or a Lower branch face).
struct LabeledFace {
  ChartId chart;
  Face face;

  friend bool operator==(const LabeledFace& a, const LabeledFace& b) {
    return a.chart == b.chart && a.face == b.face;
  }
  std::string str() const;
};

LabeledFace canonicalize(const RootSystem& rs, const LabeledFace& x);

enum class Direction { Antidominant, Dominant };

/// rho_m^{-1}: the lift of a Base face into the apartment A_m (identical
/// chart coordinates; shared-half faces stay Base after canonicalization).
LabeledFace lift(const RootSystem& rs, const Face& base_face, int simple_root,
                 long m);

/// Restricted retractions onto the standard apartment. Antidominant is
/// rho_{A,-Cf} (identity on Base and Lower charts, s_{alpha,k} on the Folded
/// branch); Dominant is rho_{A,Cf} (identity on Base and Folded, s_{alpha,k}
/// on the Lower branch).
Face retract(const RootSystem& rs, const LabeledFace& x, Direction dir);

/// iota^op_{k,l,B} = (rho^op_k)^{-1} o rho^op_l : B_l -> B_k. Fixes the
/// overlap pointwise; faces ending strictly below H_{alpha,k} land on the
/// Lower(alpha,k) branch. Errc::OutsideDomain if x is not in B_l.
LabeledFace iota(const RootSystem& rs, const LabeledFace& x, int simple_root,
                 long from_level, long to_level);

/// Right-hand side of the main theorem for e/f:
///   e: rho_{A,-Cf}( iota_{m+1,m,B}( gamma_k^- * rho_m^{-1}(gamma_k^+) ) )
///   f: rho_{A,-Cf}( iota_{m-1,m,B}( gamma_j^- * rho_m^{-1}(gamma_j^+) ) )
/// With enforce_regularity, checks the scope precondition (e: every alcove
/// weakly in H+_{alpha,m} and every alcove before j weakly in H+_{alpha,m+1};
/// mirrored for f) and raises Errc::RegularityViolated with the offending
/// alcove index.
CombinatorialGallery theorem_ef_rhs(const RootSystem& rs,
                                    const CombinatorialGallery& g,
                                    int simple_root, OperatorKind kind,
                                    bool enforce_regularity = true);

/// Right-hand side of the etilde theorem: the middle block gamma_jk pulled
/// through the Folded(alpha,m) chart and retracted, net effect s_{alpha,m};
/// prefix and suffix untouched. Requires the middle block weakly in
/// H-_{alpha,m} (Errc::RegularityViolated otherwise).
CombinatorialGallery theorem_etilde_rhs(const RootSystem& rs,
                                        const CombinatorialGallery& g,
                                        int simple_root);

/// Outcome of evaluating both routes on one (gallery, root) pair without
/// asserting anything -- the experiment mode of the theorem evaluators.
enum class TheoremOutcome {
  Undefined,        // operator indices not defined
  RegularAgree,     // precondition holds; sides equal (the theorem)
  RegularMismatch,  // precondition holds; sides differ (would be a bug)
  IrregularAgree,
  IrregularMismatch,
  IrregularDomainError,  // pipeline left its chart domain
};

TheoremOutcome compare_theorem(const RootSystem& rs,
                               const CombinatorialGallery& g, int simple_root,
                               OperatorKind kind);

/// Combinatorial shadow of a root group element: an automorphism fixing the
/// half-apartment a_u pointwise and carrying the complementary half of Base
/// to the branch chart at the same wall.
struct FoldingAutomorphism {
  int root_index;  // simple root
  long level;
  bool fixes_upper;  // a_u = H+_{alpha,level} if true, else H-
};

/// Applies u to a labeled face. Faces weakly inside a_u are fixed; faces on
/// the other side move between Base and the branch chart.
/// Errc::ChartMismatch if x lives in a chart not adjacent to u's wall.
LabeledFace folding_automorphism_apply(const RootSystem& rs,
                                       const FoldingAutomorphism& u,
                                       const LabeledFace& x);

/// u followed by the opposite branch element and a final antidominant
/// retraction; on Base this equals the reflection at u's wall.
Face m_composite_on_base(const RootSystem& rs, const FoldingAutomorphism& u,
                         const Face& base_face);

}  // namespace galfold

#endif  // GALFOLD_CHARTS_HPP
