#include "galfold/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "galfold/error.hpp"

namespace galfold {

namespace {

Matrix cartan_for(const std::string& label) {
  auto mk = [](int n, std::initializer_list<int> entries) {
    Matrix m(n, n);
    auto it = entries.begin();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rat(*it++);
    return m;
  };
  // A(i,j) = <alpha_j^vee, alpha_i>, Bourbaki numbering.
  if (label == "A1") return mk(1, {2});
  if (label == "A2") return mk(2, {2, -1, -1, 2});
  if (label == "B2") return mk(2, {2, -2, -1, 2});
  if (label == "C2") return mk(2, {2, -1, -2, 2});
  if (label == "G2") return mk(2, {2, -1, -3, 2});
  if (label == "A3") return mk(3, {2, -1, 0, -1, 2, -1, 0, -1, 2});
  fail(Errc::UnsupportedType, "unsupported root system type '" + label + "'");
}

Rat height(const Vector& coeffs) {
  Rat h(0);
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) h += coeffs(i);
  return h;
}

}  // namespace

RootSystem RootSystem::build(const std::string& type_label) {
  RootSystem rs;
  rs.label_ = type_label;
  rs.cartan_ = cartan_for(type_label);
  rs.rank_ = static_cast<int>(rs.cartan_.rows());
  const int n = rs.rank_;

  // Reflection closure from the simple roots, tracking root coefficients and
  // coroot coefficients in parallel: s_i(beta) drops <alpha_i^vee,beta> off
  // coordinate i, s_i(beta^vee) drops <beta^vee,alpha_i> likewise.
  std::map<std::vector<std::int64_t>, int> seen;
  std::vector<std::pair<Vector, Vector>> all;  // (coeffs, coroot coeffs)
  auto push = [&](const Vector& c, const Vector& d) {
    auto key = vector_key(c);
    if (seen.count(key)) return;
    seen[key] = static_cast<int>(all.size());
    all.emplace_back(c, d);
  };
  for (int i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    e(i) = 1;
    push(e, e);
  }
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      auto [c, d] = all[head];
      Rat pc = rs.cartan_.col(i).dot(c);  // <alpha_i^vee, beta>
      Rat pd = rs.cartan_.row(i).dot(d);  // <beta^vee, alpha_i>
      Vector c2 = c, d2 = d;
      c2(i) -= pc;
      d2(i) -= pd;
      push(c2, d2);
    }
  }

  for (auto& [c, d] : all) {
    bool positive = true;
    for (int i = 0; i < n; ++i)
      if (c(i) < Rat(0)) positive = false;
    if (!positive) continue;
    Root r;
    r.coeffs = c;
    r.coroot_coeffs = d;
    r.coroot_levels = rs.cartan_ * d;
    rs.positive_.push_back(std::move(r));
  }
  // Height first, then descending lex so the simple roots land at positions
  // 0..n-1 in their natural order.
  std::sort(rs.positive_.begin(), rs.positive_.end(),
            [&](const Root& a, const Root& b) {
              Rat ha = height(a.coeffs), hb = height(b.coeffs);
              if (ha != hb) return ha < hb;
              return lex_less(b.coeffs, a.coeffs);
            });

  rs.highest_ = static_cast<int>(rs.positive_.size()) - 1;
  for (const auto& r : rs.positive_) {
    bool dominates = true;
    for (int i = 0; i < n; ++i)
      if (rs.positive_[rs.highest_].coeffs(i) < r.coeffs(i)) dominates = false;
    assert(dominates && "highest root must dominate componentwise");
    (void)dominates;
  }

  // Linear parts of the spherical Weyl group: closure of the simple
  // reflections I - alpha_i^vee . alpha_i^T on level coordinates.
  std::map<std::vector<std::int64_t>, bool> wseen;
  auto mat_key = [n](const Matrix& m) {
    std::vector<std::int64_t> key;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto [p, q] = m(i, j).key();
        key.push_back(p);
        key.push_back(q);
      }
    return key;
  };
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i) {
    const Root& a = rs.positive_[i];
    gens.push_back(Matrix::Identity(n, n) -
                   (a.coroot_levels * a.coeffs.transpose()).eval());
  }
  rs.weyl_linear_.push_back(Matrix::Identity(n, n));
  wseen[mat_key(rs.weyl_linear_[0])] = true;
  for (std::size_t head = 0; head < rs.weyl_linear_.size(); ++head) {
    for (const auto& g : gens) {
      Matrix m = g * rs.weyl_linear_[head];
      auto key = mat_key(m);
      if (!wseen.count(key)) {
        wseen[key] = true;
        rs.weyl_linear_.push_back(std::move(m));
      }
    }
  }

  return rs;
}

const Root& RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank_)
    fail(Errc::NotSimpleRoot, "simple root index out of range", i);
  return positive_[i];
}

std::optional<std::pair<int, int>> RootSystem::find_root(
    const Vector& coeffs) const {
  for (int idx = 0; idx < static_cast<int>(positive_.size()); ++idx) {
    if (positive_[idx].coeffs == coeffs) return std::make_pair(idx, 1);
    if ((-positive_[idx].coeffs).eval() == coeffs) return std::make_pair(idx, -1);
  }
  return std::nullopt;
}

Rat RootSystem::pairing(const Point& x, const Vector& root_coeffs) const {
  if (!find_root(root_coeffs))
    fail(Errc::ForeignRoot, "not a root of " + label_);
  return raw_pairing(x, root_coeffs);
}

int RootSystem::position_sign(const Point& x, const Hyperplane& h) const {
  Rat v = raw_pairing(x, positive_.at(h.root_index).coeffs) - Rat(h.level);
  return v.sign();
}

Hyperplane RootSystem::hyperplane(const Vector& root_coeffs, long m) const {
  auto found = find_root(root_coeffs);
  if (!found) fail(Errc::ForeignRoot, "not a root of " + label_);
  auto [idx, sign] = *found;
  return Hyperplane{idx, sign > 0 ? m : -m};
}

}  // namespace galfold
