#include "galfold/face.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "galfold/error.hpp"

namespace galfold {

Face::Face(std::vector<Point> vertices) : verts_(std::move(vertices)) {
  std::sort(verts_.begin(), verts_.end(), lex_less);
}

Point Face::barycenter() const {
  assert(!verts_.empty());
  Point b = Vector::Zero(verts_[0].size());
  for (const auto& v : verts_) b += v;
  return b / Rat(static_cast<long long>(verts_.size()));
}

bool Face::has_subface(const Face& sub) const {
  // both vertex lists are sorted
  std::size_t i = 0;
  for (const auto& v : sub.verts_) {
    while (i < verts_.size() && lex_less(verts_[i], v)) ++i;
    if (i == verts_.size() || verts_[i] != v) return false;
    ++i;
  }
  return true;
}

bool operator<(const Face& a, const Face& b) {
  std::size_t n = std::min(a.verts_.size(), b.verts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (lex_less(a.verts_[i], b.verts_[i])) return true;
    if (lex_less(b.verts_[i], a.verts_[i])) return false;
  }
  return a.verts_.size() < b.verts_.size();
}

std::string Face::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) os << " ";
    os << to_string(verts_[i]);
  }
  os << "}";
  return os.str();
}

std::vector<std::int64_t> Face::key() const {
  std::vector<std::int64_t> out;
  out.push_back(static_cast<std::int64_t>(verts_.size()));
  for (const auto& v : verts_) {
    auto k = vector_key(v);
    out.insert(out.end(), k.begin(), k.end());
  }
  return out;
}

Face apply(const AffineMap& phi, const Face& f) {
  std::vector<Point> verts;
  verts.reserve(f.vertices().size());
  for (const auto& v : f.vertices()) verts.push_back(phi(v));
  return Face(std::move(verts));
}

FoldResult fold_to_fundamental(const RootSystem& rs, const Point& x) {
  const int n = rs.rank();
  FoldResult res{AffineMap::identity(n), AffineMap::identity(n), x, 0};
  constexpr int kMaxSteps = 100000;
  for (;;) {
    // Violated facet walls of the fundamental alcove, scanned in the
    // (root index, level) order: the simple walls at level 0 come first,
    // the highest-root wall at level 1 last.
    std::optional<Hyperplane> wall;
    for (int i = 0; i < n; ++i) {
      if (raw_pairing(res.image, rs.simple_root(i).coeffs) < Rat(0)) {
        wall = Hyperplane{i, 0};
        break;
      }
    }
    if (!wall && raw_pairing(res.image, rs.highest_root().coeffs) > Rat(1))
      wall = Hyperplane{rs.highest_root_index(), 1};
    if (!wall) return res;
    AffineMap s = affine_reflection(rs, *wall);
    res.image = s(res.image);
    res.map = compose(s, res.map);
    res.inv = compose(res.inv, s);  // reflections are involutions
    if (++res.steps > kMaxSteps)
      fail(Errc::InvalidArgument, "fold walk did not terminate");
  }
}

Face fundamental_alcove(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<Point> verts;
  verts.push_back(Vector::Zero(n));
  const Vector& top = rs.highest_root().coeffs;
  for (int i = 0; i < n; ++i) {
    Vector v = Vector::Zero(n);
    v(i) = Rat(1) / top(i);
    verts.push_back(std::move(v));
  }
  return Face(std::move(verts));
}

namespace {

/// Barycentric coordinates of a point of the closed fundamental alcove over
/// its vertices (origin first, then the scaled e_i).
std::vector<Rat> fundamental_barycentric(const RootSystem& rs, const Point& x) {
  const int n = rs.rank();
  const Vector& top = rs.highest_root().coeffs;
  std::vector<Rat> t(static_cast<std::size_t>(n) + 1);
  Rat rest(0);
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i) + 1] = x(i) * top(i);
    rest += t[static_cast<std::size_t>(i) + 1];
  }
  t[0] = Rat(1) - rest;  // = 1 - <x, highest root>
  return t;
}

}  // namespace

Face support_face(const RootSystem& rs, const Point& x) {
  FoldResult fold = fold_to_fundamental(rs, x);
  const int n = rs.rank();
  const Vector& top = rs.highest_root().coeffs;
  auto t = fundamental_barycentric(rs, fold.image);
  std::vector<Point> verts;
  if (t[0] > Rat(0)) verts.push_back(Vector::Zero(n));
  for (int i = 0; i < n; ++i) {
    if (t[static_cast<std::size_t>(i) + 1] > Rat(0)) {
      Vector v = Vector::Zero(n);
      v(i) = Rat(1) / top(i);
      verts.push_back(std::move(v));
    }
  }
  return apply(fold.inv, Face(std::move(verts)));
}

Face canonical_face(const RootSystem& rs, const Face& f) {
  FoldResult fold = fold_to_fundamental(rs, f.barycenter());
  return apply(fold.map, f);
}

bool is_complex_face(const RootSystem& rs, const Face& f) {
  if (f.vertices().empty()) return false;
  for (const auto& v : f.vertices())
    if (v.size() != rs.rank()) return false;
  for (std::size_t i = 0; i + 1 < f.vertices().size(); ++i)
    if (f.vertices()[i] == f.vertices()[i + 1]) return false;
  // A set of complex vertices spans a simplex of the complex exactly when its
  // canonical image is a vertex subset of the fundamental alcove.
  Face canon = canonical_face(rs, f);
  return fundamental_alcove(rs).has_subface(canon);
}

bool is_complex_face(const RootSystem& rs, const Face& f,
                     FaceCheckCache* cache) {
  if (!cache) return is_complex_face(rs, f);
  auto raw = f.key();
  std::string key(reinterpret_cast<const char*>(raw.data()),
                  raw.size() * sizeof(raw[0]));
  auto it = cache->complex_face.find(key);
  if (it != cache->complex_face.end()) return it->second;
  bool ok = is_complex_face(rs, f);
  cache->complex_face.emplace(std::move(key), ok);
  return ok;
}

bool weakly_in_halfspace(const RootSystem& rs, const Face& f,
                         const Hyperplane& h, int sign) {
  for (const auto& v : f.vertices())
    if (rs.position_sign(v, h) * sign < 0) return false;
  return true;
}

std::optional<long> wall_level_of(const RootSystem& rs, const Face& f,
                                  int root_index) {
  const Vector& coeffs = rs.root(root_index).coeffs;
  Rat level = raw_pairing(f.vertices().front(), coeffs);
  for (const auto& v : f.vertices())
    if (raw_pairing(v, coeffs) != level) return std::nullopt;
  if (!level.is_integer()) return std::nullopt;
  return level.floor_long();
}

std::optional<Hyperplane> spanning_wall(const RootSystem& rs, const Face& f) {
  if (f.dim() != rs.rank() - 1) return std::nullopt;
  for (int idx = 0; idx < static_cast<int>(rs.positive_roots().size()); ++idx)
    if (auto m = wall_level_of(rs, f, idx)) return Hyperplane{idx, *m};
  return std::nullopt;
}

}  // namespace galfold
