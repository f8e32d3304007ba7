#include "galfold/gallery.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "galfold/error.hpp"

namespace galfold {

std::string CombinatorialGallery::str() const {
  std::ostringstream os;
  os << panels[0].str();
  for (std::size_t i = 0; i < alcoves.size(); ++i)
    os << " < " << alcoves[i].str() << " > " << panels[i + 1].str();
  return os.str();
}

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::CountMismatch: return "CountMismatch";
    case ViolationKind::InvalidFace: return "InvalidFace";
    case ViolationKind::DimensionMismatch: return "DimensionMismatch";
    case ViolationKind::PanelNotFace: return "PanelNotFace";
    case ViolationKind::RepeatedPanel: return "RepeatedPanel";
  }
  return "?";
}

std::vector<Violation> validate(const RootSystem& rs,
                                const CombinatorialGallery& g,
                                FaceCheckCache* cache) {
  std::vector<Violation> out;
  if (g.panels.size() != g.alcoves.size() + 1 || g.panels.empty()) {
    out.push_back({ViolationKind::CountMismatch, 0, false,
                   "need |panels| = |alcoves| + 1 >= 1"});
    return out;
  }
  const int l1 = static_cast<int>(g.alcoves.size());

  // Alcove validity and equal dimension. Panels that are vertex subsets of a
  // valid alcove are automatically simplices of the complex.
  std::map<std::vector<std::int64_t>, bool> alcove_ok;
  for (int i = 0; i < l1; ++i) {
    auto key = g.alcoves[i].key();
    auto it = alcove_ok.find(key);
    bool ok = it != alcove_ok.end() ? it->second
                                    : is_complex_face(rs, g.alcoves[i], cache);
    alcove_ok[key] = ok;
    if (!ok)
      out.push_back({ViolationKind::InvalidFace, i, false, "alcove"});
    if (g.alcoves[i].dim() != g.alcoves[0].dim())
      out.push_back({ViolationKind::DimensionMismatch, i, false,
                     "alcoves must share one dimension"});
  }

  auto check_panel = [&](int i, const Face& p, const Face* left,
                         const Face* right, bool need_codim1) {
    if (need_codim1 && p.dim() != g.alcoves[0].dim() - 1) {
      out.push_back({ViolationKind::DimensionMismatch, i, true,
                     "interior panel must have codimension one"});
      return;
    }
    bool contained = true;
    if (left && !left->has_subface(p)) contained = false;
    if (right && !right->has_subface(p)) contained = false;
    if (!contained) {
      out.push_back({ViolationKind::PanelNotFace, i, true,
                     "panel is not a face of its neighbor alcoves"});
      return;
    }
    if (!left && !right) return;
    const Face* host = left ? left : right;
    if (!alcove_ok[host->key()] && !is_complex_face(rs, p, cache))
      out.push_back({ViolationKind::InvalidFace, i, true, "panel"});
  };

  if (l1 == 0) {
    if (!is_complex_face(rs, g.panels[0], cache))
      out.push_back({ViolationKind::InvalidFace, 0, true, "panel"});
    return out;
  }

  check_panel(0, g.panels[0], nullptr, &g.alcoves[0], false);
  for (int i = 1; i < l1; ++i)
    check_panel(i, g.panels[i], &g.alcoves[i - 1], &g.alcoves[i], true);
  check_panel(l1, g.panels[l1], &g.alcoves[l1 - 1], nullptr, false);

  // A panel of the apartment complex has exactly two cofaces, so an interior
  // repeated panel can only flank a fold or a bounce; anything else is a
  // corrupt document.
  for (int i = 1; i + 1 <= l1; ++i) {
    if (g.panels[i] == g.panels[i + 1]) {
      bool fold_left = g.alcoves[i - 1] == g.alcoves[i];
      bool fold_right = (i + 1 <= l1 - 1) && g.alcoves[i] == g.alcoves[i + 1];
      bool bounce = (i + 1 <= l1 - 1) && g.alcoves[i - 1] == g.alcoves[i + 1];
      if (!fold_left && !fold_right && !bounce)
        out.push_back({ViolationKind::RepeatedPanel, i, true,
                       "repeated panel without a fold or bounce"});
    }
  }
  return out;
}

bool is_valid(const RootSystem& rs, const CombinatorialGallery& g,
              FaceCheckCache* cache) {
  return validate(rs, g, cache).empty();
}

std::pair<CombinatorialGallery, CombinatorialGallery> split(
    const CombinatorialGallery& g, int k) {
  const int lp1 = static_cast<int>(g.alcoves.size());
  if (k < 0 || k > lp1)
    fail(Errc::IndexOutOfRange, "split index out of range", k);
  CombinatorialGallery lo, hi;
  lo.panels.assign(g.panels.begin(), g.panels.begin() + k + 1);
  lo.alcoves.assign(g.alcoves.begin(), g.alcoves.begin() + k);
  hi.panels.assign(g.panels.begin() + k, g.panels.end());
  hi.alcoves.assign(g.alcoves.begin() + k, g.alcoves.end());
  return {std::move(lo), std::move(hi)};
}

CombinatorialGallery concat(const CombinatorialGallery& a,
                            const CombinatorialGallery& b) {
  if (a.last_face() != b.first_face())
    fail(Errc::JunctionMismatch, "junction faces differ: " +
                                     a.last_face().str() + " vs " +
                                     b.first_face().str());
  CombinatorialGallery out = a;
  out.panels.insert(out.panels.end(), b.panels.begin() + 1, b.panels.end());
  out.alcoves.insert(out.alcoves.end(), b.alcoves.begin(), b.alcoves.end());
  return out;
}

CombinatorialGallery apply_map(const RootSystem& rs, const AffineMap& phi,
                               const CombinatorialGallery& g) {
  if (!is_extended_affine_weyl(rs, phi))
    fail(Errc::InvalidArgument,
         "map is not in the extended affine Weyl group");
  CombinatorialGallery out;
  out.panels.reserve(g.panels.size());
  out.alcoves.reserve(g.alcoves.size());
  for (const auto& p : g.panels) out.panels.push_back(apply(phi, p));
  for (const auto& c : g.alcoves) out.alcoves.push_back(apply(phi, c));
  return out;
}

Point weight(const CombinatorialGallery& g) {
  if (!g.last_face().is_vertex())
    fail(Errc::EndpointNotVertex, "gallery does not end in a vertex");
  return g.last_face().vertices()[0];
}

std::string GalleryType::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << " ";
    os << labels[i].str();
  }
  return os.str();
}

GalleryType gallery_type(const RootSystem& rs, const CombinatorialGallery& g) {
  GalleryType t;
  t.labels.push_back(canonical_face(rs, g.panels[0]));
  for (std::size_t i = 0; i < g.alcoves.size(); ++i) {
    t.labels.push_back(canonical_face(rs, g.alcoves[i]));
    t.labels.push_back(canonical_face(rs, g.panels[i + 1]));
  }
  return t;
}

namespace {

/// Largest exact step along `dir` from `from` that crosses no wall other
/// than those through `from`, halved. The returned point's support is the
/// cell entered when leaving `from` in direction `dir`.
Point nudge(const RootSystem& rs, const Point& from, const Vector& dir) {
  Rat eps(1);
  for (const auto& root : rs.positive_roots()) {
    Rat d = raw_pairing(dir, root.coeffs);
    if (d.is_zero()) continue;
    Rat a = raw_pairing(from, root.coeffs);
    Rat lo = Rat(a.floor_long());
    Rat gap = d > Rat(0) ? (lo + Rat(1) - a) : (a - lo);
    if (gap.is_zero()) gap = Rat(1);  // on a wall, moving off it
    Rat bound = gap / abs(d);
    if (bound < eps) eps = bound;
  }
  eps /= Rat(2);
  return from + (dir * eps).eval();
}

Face cell_after(const RootSystem& rs, const Point& from, const Vector& dir) {
  return support_face(rs, nudge(rs, from, dir));
}

/// Codimension-one subfaces of `cell` containing `hub`.
std::vector<Face> panels_through(const Face& cell, const Face& hub) {
  std::vector<Face> out;
  const auto& vs = cell.vertices();
  for (std::size_t drop = 0; drop < vs.size(); ++drop) {
    std::vector<Point> keep;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (i != drop) keep.push_back(vs[i]);
    Face f(std::move(keep));
    if (f.has_subface(hub)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Minimal gallery from `from` to `to` among the cells around `hub`
/// (breadth-first, deterministic). Returns interleaved panels/cells strictly
/// between the two cells: (panel, cell, panel, cell, ..., panel).
struct DetourResult {
  std::vector<Face> panels;
  std::vector<Face> cells;
};

DetourResult detour_around(const RootSystem& rs, const Face& hub,
                           const Face& from, const Face& to) {
  std::map<Face, std::pair<Face, Face>> pred;  // cell -> (prev cell, shared panel)
  std::deque<Face> queue{from};
  pred[from] = {from, Face()};
  while (!queue.empty()) {
    Face cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (const Face& panel : panels_through(cur, hub)) {
      Face nbr = cell_after(rs, panel.barycenter(),
                            panel.barycenter() - cur.barycenter());
      if (pred.count(nbr)) continue;
      pred[nbr] = {cur, panel};
      queue.push_back(nbr);
    }
  }
  if (!pred.count(to))
    fail(Errc::InvalidArgument, "detour target not reachable around a face");
  DetourResult res;
  Face cur = to;
  while (cur != from) {
    auto [prev, panel] = pred[cur];
    res.cells.push_back(cur);
    res.panels.push_back(panel);
    cur = prev;
  }
  std::reverse(res.cells.begin(), res.cells.end());
  std::reverse(res.panels.begin(), res.panels.end());
  res.cells.pop_back();  // `to` itself is not part of the in-between chain
  return res;
}

}  // namespace

SegmentWalk segment_walk(const RootSystem& rs, const Point& x0,
                         const Point& y0) {
  SegmentWalk walk;
  if (x0 == y0) {
    walk.gallery = CombinatorialGallery::trivial(support_face(rs, x0));
    walk.cuts = {Rat(0), Rat(1)};
    walk.piece_alcove = {-1};
    return walk;
  }
  Vector dir = y0 - x0;

  // Interior wall crossings of the straight segment, grouped by parameter.
  std::map<Rat, std::vector<Hyperplane>> crossings;
  for (int idx = 0; idx < static_cast<int>(rs.positive_roots().size()); ++idx) {
    const Vector& coeffs = rs.root(idx).coeffs;
    Rat a = raw_pairing(x0, coeffs), b = raw_pairing(y0, coeffs);
    if (a == b) continue;
    Rat lo = a < b ? a : b, hi = a < b ? b : a;
    for (long m = lo.floor_long();; ++m) {
      Rat rm(m);
      if (rm <= lo) continue;
      if (rm >= hi) break;
      crossings[(rm - a) / (b - a)].push_back({idx, m});
    }
  }

  CombinatorialGallery g;
  g.panels.push_back(support_face(rs, x0));
  Face cell = cell_after(rs, x0, dir);
  if (!cell.has_subface(g.panels[0]))
    fail(Errc::InvalidArgument, "start face not on its first cell");
  g.alcoves.push_back(cell);
  walk.cuts.push_back(Rat(0));
  walk.piece_alcove.push_back(0);

  for (const auto& [t, walls] : crossings) {
    Point z = x0 + (dir * t).eval();
    Face hub = support_face(rs, z);
    Face next = cell_after(rs, z, dir);
    if (hub.dim() == cell.dim() - 1) {
      g.panels.push_back(hub);
    } else {
      DetourResult d = detour_around(rs, hub, cell, next);
      for (std::size_t i = 0; i < d.cells.size(); ++i) {
        g.panels.push_back(d.panels[i]);
        g.alcoves.push_back(d.cells[i]);
      }
      g.panels.push_back(d.panels.back());
    }
    g.alcoves.push_back(next);
    walk.cuts.push_back(t);
    walk.piece_alcove.push_back(g.length() - 1);
    cell = next;
  }
  Face f_end = support_face(rs, y0);
  if (!cell.has_subface(f_end))
    fail(Errc::InvalidArgument, "end face not on its last cell");
  g.panels.push_back(f_end);
  walk.cuts.push_back(Rat(1));
  walk.gallery = std::move(g);
  return walk;
}

CombinatorialGallery minimal_gallery(const RootSystem& rs, const Face& f_start,
                                     const Face& f_end) {
  if (!is_complex_face(rs, f_start) || !is_complex_face(rs, f_end))
    fail(Errc::InvalidArgument, "minimal_gallery endpoints must be faces");
  if (f_start == f_end) return CombinatorialGallery::trivial(f_start);
  // support(barycenter(F)) = F, so the walk starts and ends exactly at the
  // given faces.
  return segment_walk(rs, f_start.barycenter(), f_end.barycenter()).gallery;
}

bool fold_is_positive(const RootSystem& rs, const CombinatorialGallery& g,
                      int panel_index) {
  const int i = panel_index;
  if (i < 1 || i >= static_cast<int>(g.panels.size()) - 1) return false;
  if (g.alcoves[i - 1] != g.alcoves[i]) return false;
  auto wall = spanning_wall(rs, g.panels[i]);
  if (!wall) return false;
  return rs.position_sign(g.alcoves[i - 1].barycenter(), *wall) < 0;
}

bool is_positively_folded(const RootSystem& rs,
                          const CombinatorialGallery& g) {
  for (int i = 1; i + 1 < static_cast<int>(g.panels.size()); ++i)
    if (g.alcoves[i - 1] == g.alcoves[i] && !fold_is_positive(rs, g, i))
      return false;
  return true;
}

CombinatorialGallery generate_random_folded(
    const RootSystem& rs, const CombinatorialGallery& minimal,
    std::uint64_t seed, bool positive_only) {
  if (minimal.length() > 0 && minimal.alcoves[0].dim() != rs.rank())
    fail(Errc::InvalidArgument, "generator needs a gallery of full alcoves");
  if (!minimal.first_face().is_vertex() ||
      minimal.first_face().vertices()[0] != rs.origin())
    fail(Errc::InvalidArgument, "generator needs an origin-based gallery");
  std::mt19937_64 rng(seed);
  // mt19937_64 output is standard-specified; avoiding std distributions keeps
  // the sequence identical across library implementations.
  auto fold_coin = [&rng]() { return rng() % 3 == 0; };

  CombinatorialGallery out;
  out.panels.push_back(minimal.panels[0]);
  // Galleries of a fixed type may enter any alcove of the origin's star:
  // seed the walk with a spherical Weyl twist.
  const auto& weyl = rs.weyl_linear_parts();
  AffineMap phi{weyl[rng() % weyl.size()], Vector::Zero(rs.rank())};
  for (int i = 0; i < minimal.length(); ++i) {
    out.alcoves.push_back(apply(phi, minimal.alcoves[i]));
    if (i + 1 < static_cast<int>(minimal.panels.size())) {
      Face panel = apply(phi, minimal.panels[i + 1]);
      out.panels.push_back(panel);
      if (i + 1 <= minimal.length() - 1) {
        auto wall = spanning_wall(rs, panel);
        assert(wall && "interior minimal panel must span a wall");
        bool positive =
            rs.position_sign(out.alcoves.back().barycenter(), *wall) < 0;
        bool want_fold = fold_coin();
        if (want_fold && (!positive_only || positive))
          phi = compose(affine_reflection(rs, *wall), phi);
      }
    }
  }
  return out;
}

}  // namespace galfold
