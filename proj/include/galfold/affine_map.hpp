#ifndef GALFOLD_AFFINE_MAP_HPP
#define GALFOLD_AFFINE_MAP_HPP

#include "galfold/rational.hpp"
#include "galfold/root_system.hpp"

namespace galfold {

/// Affine map x |-> L x + b on level coordinates, the canonical form of every
/// isometry used here (reflections s_{alpha,m}, coweight translations and
/// their compositions).
struct AffineMap {
  Matrix linear;
  Vector offset;

  Point operator()(const Point& x) const { return linear * x + offset; }

  static AffineMap identity(int n) {
    return {Matrix::Identity(n, n), Vector::Zero(n)};
  }

  bool is_identity() const;

  AffineMap inverse() const;

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.linear == b.linear && a.offset == b.offset;
  }
};

/// f after g: (f*g)(x) = f(g(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g);

/// s_{alpha,m}: x |-> x - (<x,alpha> - m) alpha^vee. Fixes H_{alpha,m}
/// pointwise and swaps the two half-spaces. Throws Errc::ForeignRoot.
AffineMap affine_reflection(const RootSystem& rs, const Vector& root_coeffs,
                            long m);
AffineMap affine_reflection(const RootSystem& rs, const Hyperplane& h);

/// Translation by lambda given in level coordinates. Requires lambda to be an
/// integer combination of coroots (Errc::NotCoweight otherwise).
AffineMap translation(const RootSystem& rs, const Point& lambda);

/// t_{alpha^vee} for a root of the system.
AffineMap coroot_translation(const RootSystem& rs, const Root& alpha);

/// Exact inverse of a square rational matrix (Gauss-Jordan; any nonzero pivot
/// is exact). Throws Errc::InvalidArgument on singular input.
Matrix exact_inverse(const Matrix& m);

/// Whether phi lies in W_aff extended by coweight translations: linear part a
/// spherical Weyl element, offset an integer level vector.
bool is_extended_affine_weyl(const RootSystem& rs, const AffineMap& phi);

}  // namespace galfold

#endif  // GALFOLD_AFFINE_MAP_HPP
