#include "galfold/rational.hpp"

#include <cassert>
#include <sstream>

namespace galfold {

std::pair<std::int64_t, std::int64_t> Rat::key() const {
  const bmp::cpp_int& n = numerator(v_);
  const bmp::cpp_int& d = denominator(v_);
  assert(n >= std::numeric_limits<std::int64_t>::min() &&
         n <= std::numeric_limits<std::int64_t>::max() &&
         d <= std::numeric_limits<std::int64_t>::max());
  return {n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>()};
}

bool lex_less(const Vector& a, const Vector& b) {
  Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v(i).str();
  }
  os << ")";
  return os.str();
}

std::vector<std::int64_t> vector_key(const Vector& v) {
  std::vector<std::int64_t> out;
  out.reserve(2 * static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    auto [n, d] = v(i).key();
    out.push_back(n);
    out.push_back(d);
  }
  return out;
}

}  // namespace galfold
