#include "galfold/folding.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <sstream>

#include "galfold/document.hpp"
#include "galfold/error.hpp"

namespace galfold {

const char* operator_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::E: return "e";
    case OperatorKind::F: return "f";
    case OperatorKind::ETilde: return "etilde";
  }
  return "?";
}

namespace {

void check_operator_preconditions(const RootSystem& rs,
                                  const CombinatorialGallery& g,
                                  int simple_root) {
  rs.simple_root(simple_root);  // NotSimpleRoot
  if (!g.first_face().is_vertex() ||
      g.first_face().vertices()[0] != rs.origin())
    fail(Errc::NotOriginBased, "operators act on galleries starting at the origin");
}

/// Integer wall level of each panel in direction alpha, where defined.
std::vector<std::optional<long>> panel_levels(const RootSystem& rs,
                                              const CombinatorialGallery& g,
                                              int simple_root) {
  std::vector<std::optional<long>> levels;
  levels.reserve(g.panels.size());
  for (const auto& p : g.panels)
    levels.push_back(wall_level_of(rs, p, simple_root));
  return levels;
}

}  // namespace

std::optional<OperatorIndices> operator_indices(const RootSystem& rs,
                                                const CombinatorialGallery& g,
                                                int simple_root,
                                                OperatorKind kind) {
  check_operator_preconditions(rs, g, simple_root);
  auto levels = panel_levels(rs, g, simple_root);
  const int np = static_cast<int>(g.panels.size());

  std::optional<long> m;
  for (const auto& lv : levels)
    if (lv && (!m || *lv < *m)) m = *lv;
  assert(m && "p_0 is the origin, so some panel lies in a wall");

  const Vector& alpha = rs.simple_root(simple_root).coeffs;

  switch (kind) {
    case OperatorKind::E: {
      if (*m > -1) return std::nullopt;
      int k = -1, j = -1;
      for (int q = 0; q < np; ++q)
        if (levels[q] && *levels[q] == *m) {
          k = q;
          break;
        }
      for (int q = k; q >= 0; --q)
        if (levels[q] && *levels[q] == *m + 1) {
          j = q;
          break;
        }
      if (k < 0 || j < 0) return std::nullopt;
      return OperatorIndices{kind, simple_root, *m, j, k};
    }
    case OperatorKind::F: {
      Rat nu_pairing = raw_pairing(weight(g), alpha);
      if (Rat(*m) > nu_pairing - Rat(1)) return std::nullopt;
      int j = -1, k = -1;
      for (int q = np - 1; q >= 0; --q)
        if (levels[q] && *levels[q] == *m) {
          j = q;
          break;
        }
      for (int q = j; q < np; ++q)
        if (levels[q] && *levels[q] == *m + 1) {
          k = q;
          break;
        }
      if (j < 0 || k < 0) return std::nullopt;
      return OperatorIndices{kind, simple_root, *m, j, k};
    }
    case OperatorKind::ETilde: {
      // j minimal with p_j in H_{alpha,m} and H_{alpha,m} separating every
      // earlier alcove from the dominant chamber.
      Hyperplane wall{simple_root, *m};
      int j = -1;
      for (int q = 0; q < np; ++q) {
        if (levels[q] && *levels[q] == *m) {
          j = q;
          break;
        }
        if (q < g.length() &&
            rs.position_sign(g.alcoves[q].barycenter(), wall) >= 0)
          break;  // alcove q not separated; no later index can qualify
      }
      if (j < 0) return std::nullopt;
      int k = -1;
      for (int q = np - 1; q > j; --q)
        if (levels[q] && *levels[q] == *m) {
          k = q;
          break;
        }
      if (k < 0) return std::nullopt;
      // The gallery must actually cross the wall.
      bool crosses = false;
      for (const auto& c : g.alcoves)
        if (rs.position_sign(c.barycenter(), wall) < 0) crosses = true;
      if (!crosses) return std::nullopt;
      return OperatorIndices{kind, simple_root, *m, j, k};
    }
  }
  return std::nullopt;
}

OperatorApplication apply_operator(const RootSystem& rs,
                                   const CombinatorialGallery& g,
                                   int simple_root, OperatorKind kind,
                                   bool strict_paper) {
  auto idx = operator_indices(rs, g, simple_root, kind);
  if (!idx) {
    std::ostringstream os;
    os << operator_name(kind) << "_alpha undefined";
    switch (kind) {
      case OperatorKind::E: os << ": case (I) requires m <= -1"; break;
      case OperatorKind::F: os << ": case (II) requires m <= <nu,alpha> - 1"; break;
      case OperatorKind::ETilde:
        os << ": case (III) requires the gallery to cross H_{alpha,m}";
        break;
    }
    fail(Errc::OperatorUndefined, os.str());
  }
  const int j = idx->j, k = idx->k;
  const long m = idx->m;
  const Root& alpha = rs.simple_root(simple_root);
  const int n = rs.rank();

  AffineMap id = AffineMap::identity(n);
  AffineMap s_m = affine_reflection(rs, Hyperplane{simple_root, m});
  AffineMap s_m1 = affine_reflection(rs, Hyperplane{simple_root, m + 1});
  AffineMap t_up = coroot_translation(rs, alpha);
  AffineMap t_down{Matrix::Identity(n, n), (-alpha.coroot_levels).eval()};

  OperatorApplication app;
  app.indices = *idx;

  AffineMap mid = kind == OperatorKind::E ? s_m1 : s_m;
  if (strict_paper && kind != OperatorKind::E) mid = s_m1;
  AffineMap tail = id;
  if (kind == OperatorKind::E) tail = t_up;
  if (kind == OperatorKind::F) tail = t_down;

  for (int i = 0; i < g.length(); ++i) {
    if (i < j) {
      app.alcove_maps.push_back(id);
      if (strict_paper && kind == OperatorKind::E && i == j - 1)
        app.notes.push_back(
            "printed clause gap: c_{j-1} matches no clause; kept fixed");
    } else if (i < k) {
      app.alcove_maps.push_back(mid);
    } else {
      app.alcove_maps.push_back(tail);
    }
  }
  const int np = static_cast<int>(g.panels.size());
  if (!strict_paper) {
    for (int i = 0; i < np; ++i) {
      if (i <= j)
        app.panel_maps.push_back(id);
      else if (kind == OperatorKind::ETilde ? i < k : i <= k)
        app.panel_maps.push_back(mid);
      else
        app.panel_maps.push_back(kind == OperatorKind::ETilde ? id : tail);
    }
    // Block boundaries are well defined: p_j and p_k lie on the fixed walls,
    // so either adjacent block's map applies. Asserted, not assumed.
    assert(apply(mid, g.panels[j]) == g.panels[j]);
    assert(kind == OperatorKind::ETilde
               ? apply(mid, g.panels[k]) == g.panels[k]
               : apply(mid, g.panels[k]) == apply(tail, g.panels[k]));
  } else {
    // Printed displays: endpoints verbatim, interior panels carried by the
    // block of their right-adjacent alcove.
    app.notes.push_back("strict-paper variant in effect");
    for (int i = 0; i < np; ++i) {
      if (i == 0 || i == np - 1)
        app.panel_maps.push_back(id);
      else
        app.panel_maps.push_back(i < j   ? id
                                 : i < k ? mid
                                         : (kind == OperatorKind::ETilde ? id : tail));
    }
  }

  app.gallery.panels.reserve(g.panels.size());
  app.gallery.alcoves.reserve(g.alcoves.size());
  for (int i = 0; i < np; ++i)
    app.gallery.panels.push_back(apply(app.panel_maps[i], g.panels[i]));
  for (int i = 0; i < g.length(); ++i)
    app.gallery.alcoves.push_back(apply(app.alcove_maps[i], g.alcoves[i]));
  return app;
}

CombinatorialGallery e_alpha(const RootSystem& rs,
                             const CombinatorialGallery& g, int simple_root) {
  return apply_operator(rs, g, simple_root, OperatorKind::E).gallery;
}

CombinatorialGallery f_alpha(const RootSystem& rs,
                             const CombinatorialGallery& g, int simple_root) {
  return apply_operator(rs, g, simple_root, OperatorKind::F).gallery;
}

CombinatorialGallery e_tilde_alpha(const RootSystem& rs,
                                   const CombinatorialGallery& g,
                                   int simple_root) {
  return apply_operator(rs, g, simple_root, OperatorKind::ETilde).gallery;
}

CombinatorialGallery reflection_normal_form(const RootSystem& rs,
                                            const CombinatorialGallery& g,
                                            int simple_root,
                                            OperatorKind kind) {
  auto idx = operator_indices(rs, g, simple_root, kind);
  if (!idx)
    fail(Errc::OperatorUndefined,
         std::string(operator_name(kind)) + "_alpha undefined");
  AffineMap s_m = affine_reflection(rs, Hyperplane{simple_root, idx->m});
  AffineMap s_m1 = affine_reflection(rs, Hyperplane{simple_root, idx->m + 1});

  auto [pre, rest] = split(g, idx->j);
  auto [mid, tail] = split(rest, idx->k - idx->j);
  switch (kind) {
    case OperatorKind::E:
      return concat(concat(pre, apply_map(rs, s_m1, mid)),
                    apply_map(rs, compose(s_m1, s_m), tail));
    case OperatorKind::F:
      return concat(concat(pre, apply_map(rs, s_m, mid)),
                    apply_map(rs, compose(s_m, s_m1), tail));
    case OperatorKind::ETilde:
      return concat(concat(pre, apply_map(rs, s_m, mid)), tail);
  }
  fail(Errc::InvalidArgument, "unreachable");
}

std::vector<CombinatorialGallery> orbit(const RootSystem& rs,
                                        const CombinatorialGallery& gamma_min,
                                        const std::vector<OperatorChoice>& ops,
                                        std::size_t budget) {
  std::map<std::string, CombinatorialGallery> seen;
  std::deque<std::string> frontier;
  std::string key0 = serialize_gallery(gamma_min);
  seen.emplace(key0, gamma_min);
  frontier.push_back(key0);
  while (!frontier.empty()) {
    std::string key = frontier.front();
    frontier.pop_front();
    const CombinatorialGallery cur = seen.at(key);
    std::vector<std::string> added;
    for (const auto& op : ops) {
      if (!operator_indices(rs, cur, op.simple_root, op.kind)) continue;
      CombinatorialGallery next =
          apply_operator(rs, cur, op.simple_root, op.kind).gallery;
      std::string nkey = serialize_gallery(next);
      if (seen.count(nkey)) continue;
      if (seen.size() >= budget)
        fail(Errc::BudgetExceeded, "orbit exceeded budget");
      seen.emplace(nkey, std::move(next));
      added.push_back(std::move(nkey));
    }
    std::sort(added.begin(), added.end());
    for (auto& kk : added) frontier.push_back(std::move(kk));
  }
  std::vector<CombinatorialGallery> out;
  out.reserve(seen.size());
  for (auto& [kk, gal] : seen) out.push_back(std::move(gal));
  return out;
}

}  // namespace galfold
