#include "galfold/affine_map.hpp"

#include "galfold/error.hpp"

namespace galfold {

bool AffineMap::is_identity() const {
  int n = static_cast<int>(linear.rows());
  return linear == Matrix::Identity(n, n) && offset == Vector::Zero(n);
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return {f.linear * g.linear, f.linear * g.offset + f.offset};
}

Matrix exact_inverse(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  Matrix a = m;
  Matrix inv = Matrix::Identity(n, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) fail(Errc::InvalidArgument, "singular matrix");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    Rat p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Rat factor = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

AffineMap AffineMap::inverse() const {
  Matrix li = exact_inverse(linear);
  return {li, (-(li * offset)).eval()};
}

AffineMap affine_reflection(const RootSystem& rs, const Vector& root_coeffs,
                            long m) {
  Hyperplane h = rs.hyperplane(root_coeffs, m);  // validates membership
  return affine_reflection(rs, h);
}

AffineMap affine_reflection(const RootSystem& rs, const Hyperplane& h) {
  const Root& a = rs.root(h.root_index);
  const int n = rs.rank();
  // s_{alpha,m}(x) = x - (<x,alpha> - m) alpha^vee, a rank-one update.
  Matrix linear =
      Matrix::Identity(n, n) - (a.coroot_levels * a.coeffs.transpose()).eval();
  Vector offset = a.coroot_levels * Rat(h.level);
  return {std::move(linear), std::move(offset)};
}

AffineMap translation(const RootSystem& rs, const Point& lambda) {
  // lambda must be an integer combination of coroots: cartan^{-1} lambda
  // integral.
  Vector coeffs = exact_inverse(rs.cartan()) * lambda;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (!coeffs(i).is_integer())
      fail(Errc::NotCoweight, "not in the coroot lattice");
  return {Matrix::Identity(rs.rank(), rs.rank()), lambda};
}

AffineMap coroot_translation(const RootSystem& rs, const Root& alpha) {
  return {Matrix::Identity(rs.rank(), rs.rank()), alpha.coroot_levels};
}

bool is_extended_affine_weyl(const RootSystem& rs, const AffineMap& phi) {
  for (Eigen::Index i = 0; i < phi.offset.size(); ++i)
    if (!phi.offset(i).is_integer()) return false;
  for (const auto& w : rs.weyl_linear_parts())
    if (w == phi.linear) return true;
  return false;
}

}  // namespace galfold
