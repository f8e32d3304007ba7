#ifndef GALFOLD_RATIONAL_HPP
#define GALFOLD_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace galfold {

namespace bmp = boost::multiprecision;

/// Exact rational scalar. A thin value wrapper around
/// boost::multiprecision::cpp_rational so that Eigen's overload resolution
/// only ever sees a plain class type (the raw boost type trips over Eigen
/// expression types during SFINAE on this toolchain).
class Rat {
 public:
  Rat() = default;
  template <typename I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  Rat(I n) : v_(n) {}
  Rat(long long num, long long den) : v_(bmp::cpp_rational(num, den)) {}
  explicit Rat(bmp::cpp_rational v) : v_(std::move(v)) {}

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) { return Rat(a.v_ / b.v_); }
  Rat operator-() const { return Rat(-v_); }
  Rat operator+() const { return *this; }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator(v_) == 1; }
  int sign() const { return v_.sign(); }

  /// Largest integer <= *this.
  long floor_long() const {
    bmp::cpp_int n = numerator(v_), d = denominator(v_);
    bmp::cpp_int q = n / d;
    if (n < 0 && q * d != n) --q;
    return static_cast<long>(q);
  }

  double to_double() const { return v_.convert_to<double>(); }

  /// "n" or "n/d", lowest terms, positive denominator.
  std::string str() const {
    if (is_integer()) return numerator(v_).str();
    return numerator(v_).str() + "/" + denominator(v_).str();
  }

  /// Strict parse of the document format: -?digits(/digits)?, denominator
  /// nonzero. Returns nullopt on anything else (including "1/0").
  static std::optional<Rat> parse(std::string_view s) {
    std::size_t i = 0;
    auto digits = [&](std::string* out) {
      std::size_t b = i;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
      if (i == b) return false;
      out->assign(s.substr(b, i - b));
      return true;
    };
    bool neg = false;
    if (i < s.size() && s[i] == '-') { neg = true; ++i; }
    std::string num, den;
    if (!digits(&num)) return std::nullopt;
    if (i < s.size() && s[i] == '/') {
      ++i;
      if (!digits(&den)) return std::nullopt;
      if (i != s.size()) return std::nullopt;
      bmp::cpp_int d(den);
      if (d == 0) return std::nullopt;
      bmp::cpp_rational r(bmp::cpp_int(num), d);
      return Rat(neg ? -r : r);
    }
    if (i != s.size()) return std::nullopt;
    bmp::cpp_rational r{bmp::cpp_int(num)};
    return Rat(neg ? -r : r);
  }

  /// (numerator, denominator) packed into int64, for hashing and fast keys.
  /// Desk-scale values only; asserts on overflow.
  std::pair<std::int64_t, std::int64_t> key() const;

  const bmp::cpp_rational& value() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  bmp::cpp_rational v_{};
};

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

using Vector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

/// A point of the standard apartment in level coordinates x_i = <x, alpha_i>.
using Point = Vector;

bool lex_less(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Flat integer key of a vector, for hash maps over exact points.
std::vector<std::int64_t> vector_key(const Vector& v);

}  // namespace galfold

namespace Eigen {
template <>
struct NumTraits<galfold::Rat> : GenericNumTraits<galfold::Rat> {
  typedef galfold::Rat Real;
  typedef galfold::Rat NonInteger;
  typedef galfold::Rat Nested;
  static inline Real epsilon() { return galfold::Rat(0); }
  static inline Real dummy_precision() { return galfold::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
};
}  // namespace Eigen

#endif  // GALFOLD_RATIONAL_HPP
