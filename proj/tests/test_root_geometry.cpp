#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galfold/affine_map.hpp"
#include "galfold/error.hpp"
#include "galfold/face.hpp"
#include "galfold/root_system.hpp"

using namespace galfold;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = Rat(x);
  return v;
}

}  // namespace

TEST_CASE("build_root_system sizes from the reflection closure") {
  // |Phi+| = 1, 3, 4, 4, 6, 6 for A1, A2, B2, C2, G2, A3.
  CHECK(RootSystem::build("A1").positive_roots().size() == 1);
  CHECK(RootSystem::build("A2").positive_roots().size() == 3);
  CHECK(RootSystem::build("B2").positive_roots().size() == 4);
  CHECK(RootSystem::build("C2").positive_roots().size() == 4);
  CHECK(RootSystem::build("G2").positive_roots().size() == 6);
  CHECK(RootSystem::build("A3").positive_roots().size() == 6);
  CHECK_THROWS_AS(RootSystem::build("E8"), Error);
}

TEST_CASE("A1 defining data") {
  RootSystem rs = RootSystem::build("A1");
  CHECK(rs.simple_root(0).coroot_levels == vec({2}));
  CHECK(rs.highest_root().coeffs == vec({1}));
}

TEST_CASE("highest roots") {
  CHECK(RootSystem::build("A2").highest_root().coeffs == vec({1, 1}));
  CHECK(RootSystem::build("B2").highest_root().coeffs == vec({1, 2}));
  CHECK(RootSystem::build("C2").highest_root().coeffs == vec({2, 1}));
  CHECK(RootSystem::build("G2").highest_root().coeffs == vec({3, 2}));
  CHECK(RootSystem::build("A3").highest_root().coeffs == vec({1, 1, 1}));
}

TEST_CASE("coroot table reproduces the Cartan integers") {
  for (const char* label : {"A1", "A2", "B2", "C2", "G2", "A3"}) {
    RootSystem rs = RootSystem::build(label);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        CHECK(raw_pairing(rs.simple_root(j).coroot_levels,
                          rs.simple_root(i).coeffs) == rs.cartan()(i, j));
    // <alpha^vee, alpha> = 2 for every root.
    for (const Root& r : rs.positive_roots())
      CHECK(raw_pairing(r.coroot_levels, r.coeffs) == Rat(2));
  }
}

TEST_CASE("pairing") {
  RootSystem a1 = RootSystem::build("A1");
  CHECK(a1.pairing(vec({3}), a1.simple_root(0).coeffs) == Rat(3));
  CHECK(a1.pairing(vec({0}), a1.simple_root(0).coeffs) == Rat(0));

  RootSystem a2 = RootSystem::build("A2");
  // <alpha_1^vee, alpha_2> = -1 is a defining constant of A2.
  CHECK(a2.pairing(a2.simple_root(0).coroot_levels,
                   a2.simple_root(1).coeffs) == Rat(-1));
  CHECK_THROWS_AS(a2.pairing(vec({0, 0}), vec({5, 5})), Error);
}

TEST_CASE("affine reflections") {
  RootSystem a1 = RootSystem::build("A1");
  const Vector alpha = a1.simple_root(0).coeffs;
  AffineMap s0 = affine_reflection(a1, alpha, 0);
  CHECK(s0(vec({3})) == vec({-3}));
  AffineMap sm1 = affine_reflection(a1, alpha, -1);
  CHECK(sm1(vec({-2})) == vec({0}));
  CHECK(compose(sm1, sm1).is_identity());

  // Involution and sign flip across every tested wall.
  for (const char* label : {"A2", "C2", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    for (int idx = 0; idx < static_cast<int>(rs.positive_roots().size()); ++idx) {
      for (long m = -2; m <= 2; ++m) {
        Hyperplane h{idx, m};
        AffineMap s = affine_reflection(rs, h);
        CHECK(compose(s, s).is_identity());
        Point x = vec({1, 2}).head(rs.rank());
        Point y = s(x);
        CHECK(rs.position_sign(y, h) == -rs.position_sign(x, h));
        // pairing(s(x), alpha) = 2m - pairing(x, alpha)
        CHECK(raw_pairing(y, rs.root(idx).coeffs) ==
              Rat(2 * m) - raw_pairing(x, rs.root(idx).coeffs));
      }
    }
  }
}

TEST_CASE("H_{-alpha,m} normalizes to H_{alpha,-m}") {
  RootSystem a1 = RootSystem::build("A1");
  Vector neg = -a1.simple_root(0).coeffs;
  Hyperplane h = a1.hyperplane(neg, 3);
  CHECK(h.root_index == 0);
  CHECK(h.level == -3);
}

TEST_CASE("translations") {
  RootSystem a1 = RootSystem::build("A1");
  AffineMap t = coroot_translation(a1, a1.simple_root(0));
  CHECK(t(vec({0})) == vec({2}));  // <alpha^vee,alpha> = 2
  CHECK(translation(a1, vec({0})).is_identity());
  CHECK_THROWS_AS(translation(a1, vec({1})), Error);  // not a coroot combo

  // s_{alpha,m+1} o s_{alpha,m} = t_{alpha^vee} for m in [-5,5].
  for (long m = -5; m <= 5; ++m) {
    AffineMap lhs = compose(affine_reflection(a1, Hyperplane{0, m + 1}),
                            affine_reflection(a1, Hyperplane{0, m}));
    CHECK(lhs == t);
  }
  // Translations commute.
  RootSystem a2 = RootSystem::build("A2");
  AffineMap t1 = coroot_translation(a2, a2.simple_root(0));
  AffineMap t2 = coroot_translation(a2, a2.simple_root(1));
  CHECK(compose(t1, t2) == compose(t2, t1));
}

TEST_CASE("position signs") {
  RootSystem a1 = RootSystem::build("A1");
  CHECK(a1.position_sign(vec({0}), Hyperplane{0, 0}) == 0);
  CHECK(a1.position_sign(vec({-2}), Hyperplane{0, -1}) == -1);
  CHECK(a1.position_sign(vec({3}), Hyperplane{0, 1}) == 1);
}

TEST_CASE("fundamental alcove") {
  RootSystem a1 = RootSystem::build("A1");
  CHECK(fundamental_alcove(a1) == Face({vec({0}), vec({1})}));

  RootSystem a2 = RootSystem::build("A2");
  Face f = fundamental_alcove(a2);
  CHECK(f.vertices().size() == 3);
  const Vector top = a2.highest_root().coeffs;
  int at_one = 0;
  for (const auto& v : f.vertices())
    if (raw_pairing(v, top) == Rat(1)) ++at_one;
  CHECK(at_one == 2);
  CHECK(f.has_subface(Face::vertex(a2.origin())));

  // Interior point sits strictly inside every 0/1 slab.
  for (const char* label : {"B2", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    Point b = fundamental_alcove(rs).barycenter();
    for (int idx = 0; idx < static_cast<int>(rs.positive_roots().size()); ++idx) {
      CHECK(rs.position_sign(b, Hyperplane{idx, 0}) == 1);
      CHECK(rs.position_sign(b, Hyperplane{idx, 1}) == -1);
    }
  }
}

TEST_CASE("B2 and C2 are transposes") {
  RootSystem b2 = RootSystem::build("B2");
  RootSystem c2 = RootSystem::build("C2");
  CHECK(b2.cartan() == c2.cartan().transpose().eval());
}

TEST_CASE("Weyl linear parts map alcoves to alcoves") {
  RootSystem rs = RootSystem::build("C2");
  CHECK(rs.weyl_linear_parts().size() == 8);
  Face fund = fundamental_alcove(rs);
  for (const auto& w : rs.weyl_linear_parts()) {
    AffineMap phi{w, Vector::Zero(rs.rank())};
    CHECK(is_complex_face(rs, apply(phi, fund)));
  }
  CHECK(RootSystem::build("A2").weyl_linear_parts().size() == 6);
  CHECK(RootSystem::build("G2").weyl_linear_parts().size() == 12);
  CHECK(RootSystem::build("A3").weyl_linear_parts().size() == 24);
}

TEST_CASE("exact inverse") {
  RootSystem a2 = RootSystem::build("A2");
  Matrix inv = exact_inverse(a2.cartan());
  CHECK((a2.cartan() * inv).eval() == Matrix::Identity(2, 2));
  AffineMap s = affine_reflection(a2, Hyperplane{2, 1});
  CHECK(compose(s.inverse(), s).is_identity());
}

TEST_CASE("support and canonical faces") {
  RootSystem a1 = RootSystem::build("A1");
  CHECK(support_face(a1, vec({0})) == Face::vertex(vec({0})));
  CHECK(support_face(a1, Vector::Constant(1, Rat(1, 2))) ==
        Face({vec({0}), vec({1})}));
  CHECK(support_face(a1, vec({7})) == Face::vertex(vec({7})));
  CHECK(canonical_face(a1, Face::vertex(vec({-3}))) == Face::vertex(vec({1})));

  RootSystem a2 = RootSystem::build("A2");
  CHECK(is_complex_face(a2, Face::vertex(vec({1, 1}))));
  CHECK_FALSE(is_complex_face(a2, Face({vec({0, 0}), vec({1, 1})})));
  Vector half(2);
  half << Rat(1, 2), Rat(1, 2);
  CHECK_FALSE(is_complex_face(a2, Face::vertex(half)));

  // B2 has a non-special vertex with a fractional coordinate.
  RootSystem b2 = RootSystem::build("B2");
  Vector v(2);
  v << Rat(0), Rat(1, 2);
  CHECK(is_complex_face(b2, Face::vertex(v)));
}
