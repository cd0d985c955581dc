#include <doctest.h>

#include <socle/characters.hpp>
#include <socle/groups.hpp>

#include <random>

using namespace socle;

TEST_CASE("chi_2^s times a/d equals det as evaluation maps") {
  for (u32 p : {5u, 7u}) {
    const CharacterSpec lhs = chi_s(p, 2).times(frak_a(p));
    const CharacterSpec rhs = det_char(p);
    CHECK(lhs.same_map(rhs));
    CHECK(lhs.torus_label() == std::pair<u32, u32>{1, 1});
    auto iw = make_group({GroupKind::K0, p, 2, 1});
    std::mt19937 rng(1234);
    for (int i = 0; i < 50; ++i) {
      const Mat2 g = iw->random_element(rng);
      CHECK(lhs.eval(g) == rhs.eval(g));
      CHECK(rhs.eval(g) == g.det() % p);
    }
  }
}

TEST_CASE("characters are multiplicative on the Iwahori") {
  auto iw = make_group({GroupKind::K0, 5, 2, 1});
  std::mt19937 rng(555);
  const CharacterSpec chi = chi_s(5, 3).times(frak_a(5).power(2));
  for (int i = 0; i < 100; ++i) {
    const Mat2 g = iw->random_element(rng);
    const Mat2 h = iw->random_element(rng);
    CHECK(chi.eval(g * h) == mod_mul(chi.eval(g), chi.eval(h), 5));
  }
  CHECK(chi.eval(Mat2::id(25)) == 1);
}

TEST_CASE("inverse relation: d-power characters on inverse matrices") {
  auto iw = make_group({GroupKind::K0, 7, 2, 1});
  std::mt19937 rng(808);
  for (i64 n : {1, 2, 5}) {
    const CharacterSpec plus = chi_s(7, n);
    const CharacterSpec minus = chi_s(7, -n);
    for (int i = 0; i < 30; ++i) {
      const Mat2 g = iw->random_element(rng);
      // d(g^{-1}) = a(g)/det(g), and a*d = det mod p on this domain.
      CHECK(plus.eval(g) == minus.eval(g.inv()));
    }
  }
}

TEST_CASE("exponent p-1 is trivial; exponent arithmetic is mod p-1") {
  CHECK(chi_s(5, 4).is_trivial());
  CHECK(chi_s(5, 4).same_map(chi_s(5, 0)));
  CHECK(frak_a(5).power(4).is_trivial());
  CHECK(det_char(7).power(6).is_trivial());
  CHECK(chi_s(5, 7).same_map(chi_s(5, 3)));
  CHECK(chi_s(5, -1).same_map(chi_s(5, 3)));
  auto iw = make_group({GroupKind::K0, 5, 2, 1});
  std::mt19937 rng(31);
  for (int i = 0; i < 40; ++i) CHECK(chi_s(5, 4).eval(iw->random_element(rng)) == 1);
}

TEST_CASE("torus labels determine and are determined by evaluations") {
  const u32 p = 5;
  for (u32 alpha = 0; alpha < p - 1; ++alpha)
    for (u32 delta = 0; delta < p - 1; ++delta) {
      const CharacterSpec c = torus_char(p, alpha, delta);
      CHECK(c.torus_label() == std::pair<u32, u32>{alpha, delta});
      for (u32 a = 1; a < p; ++a)
        for (u32 d = 1; d < p; ++d)
          CHECK(c.eval(Mat2::of(p, a, 0, 0, d)) ==
                mod_mul(mod_pow(a, alpha, p), mod_pow(d, delta, p), p));
    }
  // Distinct labels give distinct evaluation maps on the torus.
  const CharacterSpec x = torus_char(p, 1, 2), y = torus_char(p, 2, 1);
  bool differ = false;
  for (u32 a = 1; a < p && !differ; ++a)
    for (u32 d = 1; d < p && !differ; ++d)
      differ = x.eval(Mat2::of(p, a, 0, 0, d)) != y.eval(Mat2::of(p, a, 0, 0, d));
  CHECK(differ);
}

TEST_CASE("characters reject elements outside their domain") {
  const CharacterSpec c = chi_s(5, 1);
  CHECK_THROWS(c.eval(Mat2::of(5, 0, 1, 1, 0)));  // Weyl element: c-entry a unit
  CHECK_THROWS(c.eval(Mat2::of(5, 1, 0, 1, 1)));  // lower elementary
  CHECK_THROWS(c.eval(Mat2::of(25, 5, 1, 0, 1)));  // singular reduction
  CHECK(c.eval(Mat2::of(25, 1, 3, 5, 2)) == 2);   // in K0(p) at level 2
}
