#include "galfold/charts.hpp"

#include <cassert>
#include <sstream>

#include "galfold/error.hpp"

namespace galfold {

std::string ChartId::str() const {
  std::ostringstream os;
  switch (kind) {
    case Base: os << "Base"; break;
    case Lower: os << "Lower(a" << root_index + 1 << "," << level << ")"; break;
    case Folded: os << "Folded(a" << root_index + 1 << "," << level << ")"; break;
  }
  return os.str();
}

std::string LabeledFace::str() const {
  return chart.str() + " " + face.str();
}

namespace {

bool weakly_below(const RootSystem& rs, const Face& f, int root, long level) {
  return weakly_in_halfspace(rs, f, Hyperplane{root, level}, -1);
}
bool weakly_above(const RootSystem& rs, const Face& f, int root, long level) {
  return weakly_in_halfspace(rs, f, Hyperplane{root, level}, +1);
}

}  // namespace

LabeledFace canonicalize(const RootSystem& rs, const LabeledFace& x) {
  switch (x.chart.kind) {
    case ChartId::Base:
      return x;
    case ChartId::Lower: {
      // Shared half H-_{alpha,k} is Base.
      if (weakly_below(rs, x.face, x.chart.root_index, x.chart.level))
        return {ChartId::base(), x.face};
      if (!weakly_above(rs, x.face, x.chart.root_index, x.chart.level))
        fail(Errc::InvalidArgument, "labeled face straddles its chart wall");
      return x;
    }
    case ChartId::Folded: {
      // Upper half is Base; the rest is the Lower branch, transition s_{alpha,k}.
      if (weakly_above(rs, x.face, x.chart.root_index, x.chart.level))
        return {ChartId::base(), x.face};
      if (!weakly_below(rs, x.face, x.chart.root_index, x.chart.level))
        fail(Errc::InvalidArgument, "labeled face straddles its chart wall");
      AffineMap s = affine_reflection(
          rs, Hyperplane{x.chart.root_index, x.chart.level});
      return canonicalize(
          rs, {ChartId::lower(x.chart.root_index, x.chart.level),
               apply(s, x.face)});
    }
  }
  fail(Errc::InvalidArgument, "unreachable");
}

LabeledFace lift(const RootSystem& rs, const Face& base_face, int simple_root,
                 long m) {
  rs.simple_root(simple_root);
  return canonicalize(rs, {ChartId::lower(simple_root, m), base_face});
}

Face retract(const RootSystem& rs, const LabeledFace& x, Direction dir) {
  LabeledFace c = canonicalize(rs, x);
  if (c.chart.kind == ChartId::Base) return c.face;
  // Canonical non-Base labels are Lower branch faces.
  if (dir == Direction::Antidominant) return c.face;
  AffineMap s =
      affine_reflection(rs, Hyperplane{c.chart.root_index, c.chart.level});
  return apply(s, c.face);
}

namespace {

/// (rho^op_k)^{-1}: A -> B_k. Faces weakly above H_{alpha,k} stay Base; the
/// rest land on the Lower(alpha,k) branch with coordinates s_{alpha,k}(y).
LabeledFace dominant_retraction_inverse(const RootSystem& rs, const Face& y,
                                        int simple_root, long k) {
  if (weakly_above(rs, y, simple_root, k)) return {ChartId::base(), y};
  if (!weakly_below(rs, y, simple_root, k))
    fail(Errc::InvalidArgument, "face straddles the wall");
  AffineMap s = affine_reflection(rs, Hyperplane{simple_root, k});
  return canonicalize(
      rs, {ChartId::lower(simple_root, k), apply(s, y)});
}

/// rho^op_l on B_l: identity on the Base-upper part, s_{alpha,l} on the
/// branch. Errc::OutsideDomain off B_l.
Face dominant_retraction_from(const RootSystem& rs, const LabeledFace& x,
                              int simple_root, long l) {
  LabeledFace c = canonicalize(rs, x);
  if (c.chart.kind == ChartId::Base) {
    if (!weakly_above(rs, c.face, simple_root, l))
      fail(Errc::OutsideDomain,
           "Base face strictly below the wall is not in B_l");
    return c.face;
  }
  if (c.chart.root_index != simple_root || c.chart.level != l)
    fail(Errc::ChartMismatch, "face lives in a different chart: " + c.str());
  AffineMap s = affine_reflection(rs, Hyperplane{simple_root, l});
  return apply(s, c.face);
}

}  // namespace

LabeledFace iota(const RootSystem& rs, const LabeledFace& x, int simple_root,
                 long from_level, long to_level) {
  Face mid = dominant_retraction_from(rs, x, simple_root, from_level);
  return dominant_retraction_inverse(rs, mid, simple_root, to_level);
}

namespace {

void require_alcoves_weakly_above(const RootSystem& rs,
                                  const CombinatorialGallery& g, int root,
                                  long level, int from, int to,
                                  const char* what) {
  for (int i = from; i < to; ++i)
    if (!weakly_above(rs, g.alcoves[i], root, level)) {
      std::ostringstream os;
      os << what << ": alcove " << i << " dips below H_{alpha," << level << "}";
      throw Error(Errc::RegularityViolated, os.str(), i);
    }
}

}  // namespace

CombinatorialGallery theorem_ef_rhs(const RootSystem& rs,
                                    const CombinatorialGallery& g,
                                    int simple_root, OperatorKind kind,
                                    bool enforce_regularity) {
  if (kind != OperatorKind::E && kind != OperatorKind::F)
    fail(Errc::InvalidArgument, "theorem_ef_rhs handles e and f only");
  auto idx = operator_indices(rs, g, simple_root, kind);
  if (!idx)
    fail(Errc::OperatorUndefined,
         std::string(operator_name(kind)) + "_alpha undefined");
  const long m = idx->m;
  const int split_at = kind == OperatorKind::E ? idx->k : idx->j;
  const long to_level = kind == OperatorKind::E ? m + 1 : m - 1;

  if (enforce_regularity) {
    require_alcoves_weakly_above(rs, g, simple_root, m, 0, g.length(),
                                 "regularity");
    if (kind == OperatorKind::E)
      require_alcoves_weakly_above(rs, g, simple_root, m + 1, 0, idx->j,
                                   "regularity (prefix)");
    else
      require_alcoves_weakly_above(rs, g, simple_root, m + 1, idx->k,
                                   g.length(), "regularity (tail)");
  }

  // gamma = gamma^- * gamma^+; the tail is pulled back through rho_m^{-1},
  // everything is carried by iota into B_{m+-1} and dropped back onto the
  // standard apartment by the antidominant retraction.
  auto pipeline = [&](const Face& f, bool lifted) {
    LabeledFace lf = lifted ? lift(rs, f, simple_root, m)
                            : LabeledFace{ChartId::base(), f};
    LabeledFace moved = iota(rs, lf, simple_root, m, to_level);
    return retract(rs, moved, Direction::Antidominant);
  };

  CombinatorialGallery out;
  const int np = static_cast<int>(g.panels.size());
  out.panels.reserve(np);
  out.alcoves.reserve(g.alcoves.size());
  for (int i = 0; i < np; ++i)
    out.panels.push_back(pipeline(g.panels[i], i >= split_at));
  for (int i = 0; i < g.length(); ++i)
    out.alcoves.push_back(pipeline(g.alcoves[i], i >= split_at));

  // The junction panel is shared between the Base-kept prefix and the lifted
  // tail; both routes must agree.
  assert(pipeline(g.panels[split_at], false) ==
         pipeline(g.panels[split_at], true));
  return out;
}

CombinatorialGallery theorem_etilde_rhs(const RootSystem& rs,
                                        const CombinatorialGallery& g,
                                        int simple_root) {
  auto idx = operator_indices(rs, g, simple_root, OperatorKind::ETilde);
  if (!idx) fail(Errc::OperatorUndefined, "etilde_alpha undefined");
  const long m = idx->m;
  for (int i = idx->j; i < idx->k; ++i)
    if (!weakly_below(rs, g.alcoves[i], simple_root, m))
      throw Error(Errc::RegularityViolated,
                  "middle block alcove not weakly below H_{alpha,m}", i);

  // gamma_j * rho_m((rho_m^op)^{-1}(gamma_jk)) * gamma_k: the middle block
  // crosses into the Folded chart and comes back reflected along H_{alpha,m}.
  auto middle = [&](const Face& f) {
    LabeledFace branch = dominant_retraction_inverse(rs, f, simple_root, m);
    return retract(rs, branch, Direction::Antidominant);
  };

  CombinatorialGallery out = g;
  for (int i = idx->j; i <= idx->k && i < static_cast<int>(g.panels.size());
       ++i)
    out.panels[i] = middle(g.panels[i]);
  for (int i = idx->j; i < idx->k && i < g.length(); ++i)
    out.alcoves[i] = middle(g.alcoves[i]);
  return out;
}

TheoremOutcome compare_theorem(const RootSystem& rs,
                               const CombinatorialGallery& g, int simple_root,
                               OperatorKind kind) {
  auto idx = operator_indices(rs, g, simple_root, kind);
  if (!idx) return TheoremOutcome::Undefined;
  CombinatorialGallery lhs = apply_operator(rs, g, simple_root, kind).gallery;

  bool regular = true;
  if (kind == OperatorKind::ETilde) {
    for (int i = idx->j; i < idx->k && regular; ++i)
      regular = weakly_below(rs, g.alcoves[i], simple_root, idx->m);
  } else {
    for (int i = 0; i < g.length() && regular; ++i)
      regular = weakly_above(rs, g.alcoves[i], simple_root, idx->m);
    int from = kind == OperatorKind::E ? 0 : idx->k;
    int to = kind == OperatorKind::E ? idx->j : g.length();
    for (int i = from; i < to && regular; ++i)
      regular = weakly_above(rs, g.alcoves[i], simple_root, idx->m + 1);
  }

  try {
    CombinatorialGallery rhs =
        kind == OperatorKind::ETilde
            ? theorem_etilde_rhs(rs, g, simple_root)
            : theorem_ef_rhs(rs, g, simple_root, kind, false);
    bool agree = rhs == lhs;
    if (regular)
      return agree ? TheoremOutcome::RegularAgree
                   : TheoremOutcome::RegularMismatch;
    return agree ? TheoremOutcome::IrregularAgree
                 : TheoremOutcome::IrregularMismatch;
  } catch (const Error& e) {
    if (e.code() == Errc::OutsideDomain || e.code() == Errc::RegularityViolated)
      return TheoremOutcome::IrregularDomainError;
    throw;
  }
}

LabeledFace folding_automorphism_apply(const RootSystem& rs,
                                       const FoldingAutomorphism& u,
                                       const LabeledFace& x) {
  LabeledFace c = canonicalize(rs, x);
  const int root = u.root_index;
  const long k = u.level;
  AffineMap s = affine_reflection(rs, Hyperplane{root, k});
  if (c.chart.kind != ChartId::Base &&
      (c.chart.root_index != root || c.chart.level != k))
    fail(Errc::ChartMismatch,
         "automorphism wall (alpha," + std::to_string(k) +
             ") does not touch chart " + c.chart.str());

  if (u.fixes_upper) {
    // a_u = H+_{alpha,k}: swaps Base's lower half with the branch of B_k.
    if (c.chart.kind == ChartId::Base) {
      if (weakly_above(rs, c.face, root, k)) return c;  // fixed
      return canonicalize(rs, {ChartId::lower(root, k), apply(s, c.face)});
    }
    return {ChartId::base(), apply(s, c.face)};
  }
  // a_u = H-_{alpha,k}: swaps Base's upper half with the branch of A_k,
  // identically coordinatized.
  if (c.chart.kind == ChartId::Base) {
    if (weakly_below(rs, c.face, root, k)) return c;  // fixed
    return {ChartId::lower(root, k), c.face};
  }
  return {ChartId::base(), c.face};
}

Face m_composite_on_base(const RootSystem& rs, const FoldingAutomorphism& u,
                         const Face& base_face) {
  LabeledFace step1 =
      folding_automorphism_apply(rs, u, {ChartId::base(), base_face});
  FoldingAutomorphism opposite{u.root_index, u.level, !u.fixes_upper};
  LabeledFace step2 = folding_automorphism_apply(rs, opposite, step1);
  // Retract from the chamber on u's moved side, so the branch excursion
  // registers as the reflection rather than being undone.
  Direction dir =
      u.fixes_upper ? Direction::Dominant : Direction::Antidominant;
  return retract(rs, step2, dir);
}

}  // namespace galfold
