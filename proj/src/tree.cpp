#include "galfold/tree.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace galfold {

TreeBuilding TreeBuilding::build(int q, int radius) {
  if (q < 2) fail(Errc::InvalidArgument, "thickness needs q >= 2");
  if (radius < 1) fail(Errc::InvalidArgument, "radius must be positive");
  if (radius > 12) fail(Errc::BudgetExceeded, "truncation radius above 12");

  TreeBuilding t;
  t.q_ = q;
  t.radius_ = radius;

  auto add_vertex = [&](int dist) {
    t.adj_.emplace_back();
    t.dist_to_base_.push_back(dist);
    return static_cast<int>(t.adj_.size()) - 1;
  };
  auto add_edge = [&](int u, int v) {
    t.adj_[u].push_back(v);
    t.adj_[v].push_back(u);
  };

  // Marked apartment first: a path a_{-R} .. a_0, a_1, .. a_{R+1} with the
  // base edge (a_0, a_1) in the middle.
  int a0 = add_vertex(0);
  int a1 = add_vertex(0);
  add_edge(a0, a1);
  t.apartment_.assign({a0, a1});
  for (int i = 1; i <= radius; ++i) {
    int fwd = add_vertex(i);
    add_edge(t.apartment_.back(), fwd);
    t.apartment_.push_back(fwd);
    int bwd = add_vertex(i);
    add_edge(t.apartment_.front(), bwd);
    t.apartment_.insert(t.apartment_.begin(), bwd);
  }
  for (std::size_t i = 0; i < t.apartment_.size(); ++i)
    t.level_of_[t.apartment_[i]] = static_cast<long>(i) - radius;

  // Grow every interior vertex to degree q+1 (thickness).
  for (int v = 0; v < static_cast<int>(t.adj_.size()); ++v) {
    if (t.dist_to_base_[v] >= radius) continue;
    while (static_cast<int>(t.adj_[v].size()) < q + 1) {
      int child = add_vertex(t.dist_to_base_[v] + 1);
      add_edge(v, child);
    }
  }
  for (auto& nbrs : t.adj_) std::sort(nbrs.begin(), nbrs.end());

  // Multi-source BFS from the apartment: nearest apartment vertex and the
  // distance to it, for O(1) retractions.
  t.conf_.assign(t.adj_.size(), -1);
  t.dconf_.assign(t.adj_.size(), 0);
  std::deque<int> queue;
  for (int a : t.apartment_) {
    t.conf_[a] = a;
    queue.push_back(a);
  }
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int nb : t.adj_[cur])
      if (t.conf_[nb] < 0) {
        t.conf_[nb] = t.conf_[cur];
        t.dconf_[nb] = t.dconf_[cur] + 1;
        queue.push_back(nb);
      }
  }
  return t;
}

long TreeBuilding::apartment_level(int v) const {
  auto it = level_of_.find(v);
  if (it == level_of_.end())
    fail(Errc::InvalidArgument, "vertex not on the marked apartment", v);
  return it->second;
}

int TreeBuilding::apartment_vertex(long level) const {
  long idx = level + radius_;
  if (idx < 0 || idx >= static_cast<long>(apartment_.size()))
    fail(Errc::MarginExceeded, "apartment level outside truncation", level);
  return apartment_[static_cast<std::size_t>(idx)];
}

std::vector<TreeEdge> TreeBuilding::apartment_edges() const {
  std::vector<TreeEdge> out;
  for (std::size_t i = 0; i + 1 < apartment_.size(); ++i)
    out.push_back({apartment_[i], apartment_[i + 1]});
  return out;
}

std::vector<int> TreeBuilding::geodesic(int u, int v) const {
  // BFS; the tree is small and queries are desk scale.
  std::vector<int> prev(adj_.size(), -1);
  std::deque<int> queue{u};
  prev[u] = u;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == v) break;
    for (int nb : adj_[cur])
      if (prev[nb] < 0) {
        prev[nb] = cur;
        queue.push_back(nb);
      }
  }
  std::vector<int> path;
  for (int cur = v; cur != u; cur = prev[cur]) path.push_back(cur);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

int TreeBuilding::dist(int u, int v) const {
  return static_cast<int>(geodesic(u, v).size()) - 1;
}

int TreeBuilding::confluence(int v) const { return conf_.at(v); }

namespace {

void extend_to_boundary(const TreeBuilding& t, std::vector<int>* path) {
  // Extend the back of the path by smallest-id fresh neighbors until a leaf.
  for (;;) {
    int tip = path->back();
    int before = path->size() > 1 ? (*path)[path->size() - 2] : -1;
    if (t.is_leaf(tip)) return;
    int next = -1;
    for (int nb : t.neighbors(tip))
      if (nb != before) {
        next = nb;
        break;
      }
    if (next < 0) return;
    path->push_back(next);
  }
}

}  // namespace

TreeApartment TreeBuilding::apartment_through(int x, const TreeEdge& anchor) const {
  TreeApartment a;
  if (on_apartment(x)) {
    a.vertices = apartment_;
    return a;
  }
  // Geodesic from x through the whole anchor edge, extended to the
  // truncation boundary on both sides (smallest-id extension).
  int far_end = dist(x, anchor.u) > dist(x, anchor.v) ? anchor.u : anchor.v;
  std::vector<int> path = geodesic(x, far_end);
  extend_to_boundary(*this, &path);
  std::reverse(path.begin(), path.end());
  extend_to_boundary(*this, &path);
  a.vertices = std::move(path);
  return a;
}

TreeApartment TreeBuilding::apartment_through(int x, TreeEnd anchor) const {
  TreeApartment a;
  if (on_apartment(x)) {
    a.vertices = apartment_;
    return a;
  }
  long target = anchor == TreeEnd::Minus ? -radius_ : radius_ + 1;
  std::vector<int> path = geodesic(apartment_vertex(target), x);
  extend_to_boundary(*this, &path);  // extend beyond x
  a.vertices = std::move(path);
  return a;
}

long TreeBuilding::retract_at_alcove(const TreeEdge& c, int x) const {
  long ca = std::min(apartment_level(c.u), apartment_level(c.v));
  long cb = std::max(apartment_level(c.u), apartment_level(c.v));
  assert(cb == ca + 1 && "anchor must be an edge of the apartment");
  if (on_apartment(x)) return apartment_level(x);
  long lu = apartment_level(conf_.at(x));
  int d = dconf_.at(x);
  // The image continues from the confluence away from c.
  if (lu <= ca) return lu - d;
  return lu + d;
}

long TreeBuilding::retract_from_end(TreeEnd xi, int x) const {
  if (!within_end_margin(x))
    fail(Errc::MarginExceeded,
         "end retraction needs distance >= 2 from the truncation boundary", x);
  if (on_apartment(x)) return apartment_level(x);
  long lu = apartment_level(conf_.at(x));
  int d = dconf_.at(x);
  // Busemann level normalized along A: away from xi.
  return xi == TreeEnd::Minus ? lu + d : lu - d;
}

TreeEdge TreeBuilding::compat_witness(TreeEnd xi, int d) const {
  long want = retract_from_end(xi, d);
  for (const TreeEdge& c : apartment_edges())
    if (retract_at_alcove(c, d) == want) return c;
  fail(Errc::NoWitness, "no compatible alcove-based retraction", d);
}

std::map<long, std::vector<int>> TreeBuilding::fiber_partition(
    const RetractionSpec& spec) const {
  std::map<long, std::vector<int>> fibers;
  for (int v = 0; v < vertex_count(); ++v) {
    if (spec.kind == RetractionSpec::FromEnd) {
      if (!within_end_margin(v)) continue;
      fibers[retract_from_end(spec.end, v)].push_back(v);
    } else {
      fibers[retract_at_alcove(spec.alcove, v)].push_back(v);
    }
  }
  return fibers;
}

}  // namespace galfold
