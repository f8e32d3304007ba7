#ifndef GALFOLD_ROOT_SYSTEM_HPP
#define GALFOLD_ROOT_SYSTEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "galfold/rational.hpp"

namespace galfold {

/// A root, stored by its integer coefficients over the simple roots together
/// with the coefficients of its coroot over the simple coroots. The level
/// coordinates of the coroot (as a point of the apartment) are cached.
struct Root {
  Vector coeffs;         // alpha = sum coeffs[i] * alpha_i
  Vector coroot_coeffs;  // alpha^vee = sum coroot_coeffs[i] * alpha_i^vee
  Vector coroot_levels;  // <alpha^vee, alpha_j> for each simple alpha_j
};

/// Wall H_{alpha,m} keyed by a positive root index and an integer level.
struct Hyperplane {
  int root_index;  // index into RootSystem::positive_roots()
  long level;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.root_index == b.root_index && a.level == b.level;
  }
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    if (a.root_index != b.root_index) return a.root_index < b.root_index;
    return a.level < b.level;
  }
};

/// Finite crystallographic root system of one of the supported types, with
/// the positive roots generated from the hard-coded Cartan matrix by
/// reflection closure. Immutable after construction.
class RootSystem {
 public:
  /// Builds the system for one of A1, A2, B2, C2, G2, A3.
  /// Throws Errc::UnsupportedType otherwise.
  static RootSystem build(const std::string& type_label);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }

  /// Cartan integers A(i,j) = <alpha_j^vee, alpha_i>.
  const Matrix& cartan() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& root(int index) const { return positive_.at(index); }
  const Root& simple_root(int i) const;  // Errc::NotSimpleRoot if i >= rank
  const Root& highest_root() const { return positive_[highest_]; }
  int highest_root_index() const { return highest_; }

  /// Index of a positive root given by coefficients; the sign tells whether
  /// the input was the positive root (+1) or its negative (-1).
  std::optional<std::pair<int, int>> find_root(const Vector& coeffs) const;

  /// <x, alpha> for alpha in Phi (given by coefficients over simple roots).
  /// Throws Errc::ForeignRoot if alpha is not a root of this system.
  Rat pairing(const Point& x, const Vector& root_coeffs) const;

  /// Sign of <x,alpha> - m: -1, 0 or +1.
  int position_sign(const Point& x, const Hyperplane& h) const;

  /// Canonical wall through a (possibly negative) root: H_{-alpha,m} is
  /// normalized to H_{alpha,-m}.
  Hyperplane hyperplane(const Vector& root_coeffs, long m) const;

  /// Linear parts of the spherical Weyl group acting on level coordinates.
  const std::vector<Matrix>& weyl_linear_parts() const { return weyl_linear_; }

  Point origin() const { return Vector::Zero(rank_); }

 private:
  RootSystem() = default;

  std::string label_;
  int rank_ = 0;
  Matrix cartan_;
  std::vector<Root> positive_;
  int highest_ = -1;
  std::vector<Matrix> weyl_linear_;
};

/// Unnormalized pairing helper: <x, sum c_i alpha_i> = sum c_i x_i.
inline Rat raw_pairing(const Point& x, const Vector& root_coeffs) {
  return root_coeffs.dot(x);
}

}  // namespace galfold

#endif  // GALFOLD_ROOT_SYSTEM_HPP
