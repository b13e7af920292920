#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "properties.hpp"

using namespace montes;
using helpers::ffp;

TEST_CASE("field construction") {
  FieldHandle F5 = Field::prime_field(Prime(5));
  FieldHandle F25 = Field::extend(F5, ffp(F5, {1, 1, 1}));
  CHECK(F25->cardinality() == 25);
  CHECK(F25->level() == 1);
  CHECK(F25->degree() == 2);

  FieldHandle F2 = Field::prime_field(Prime(2));
  FieldHandle D1 = Field::extend(F2, ffp(F2, {1, 1}));
  CHECK(D1->cardinality() == 2);
  CHECK(D1->gen() == D1->one());

  FieldHandle F4 = Field::extend(F2, ffp(F2, {1, 1, 1}));
  FieldHandle F16 = Field::extend(F4, FFPoly(F4, {F4->gen(), F4->one(), F4->one()}));
  CHECK(F16->cardinality() == 16);
  CHECK(F16->abs_degree() == 4);

  CHECK_THROWS_AS(Field::extend(F5, ffp(F5, {1, 0, 1})), Error);  // y^2+1 = (y-2)(y+2)
}

TEST_CASE("element arithmetic") {
  FieldHandle F5 = Field::prime_field(Prime(5));
  CHECK(F5->from_int(3) * F5->from_int(2) == F5->one());
  CHECK(F5->from_int(-1) == F5->from_int(4));
  CHECK(F5->from_int(3).inv() == F5->from_int(2));
  CHECK_THROWS_AS(F5->zero().inv(), Error);

  FieldHandle F2 = Field::prime_field(Prime(2));
  FieldHandle F4 = Field::extend(F2, ffp(F2, {1, 1, 1}));
  FFElem z = F4->gen();
  CHECK(z * z == z + F4->one());
  CHECK(z.pow(Integer(3)) == F4->one());

  FieldHandle F3 = Field::prime_field(Prime(3));
  CHECK_THROWS_AS(F3->one() + F5->one(), Error);

  std::mt19937_64 rng(21);
  for (const auto& K : props::sample_fields()) {
    Integer q1 = K->cardinality() - 1;
    for (int k = 0; k < 30; ++k) {
      FFElem a = K->random(rng), b = K->random(rng), c = K->random(rng);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) {
        CHECK(a.pow(q1).is_one());
        CHECK(a * a.inv() == K->one());
      }
    }
  }
}

TEST_CASE("element enumeration is a bijection") {
  FieldHandle F3 = Field::prime_field(Prime(3));
  FieldHandle F9 = Field::extend(F3, ffp(F3, {1, 0, 1}));
  std::vector<FFElem> all;
  for (long i = 0; i < 9; ++i) all.push_back(F9->element(Integer(i)));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
}

// Nested tower F_2 < F_4 < F_16 against a single degree-4 extension of F_2.
TEST_CASE("tower agrees with a flat extension") {
  FieldHandle F2 = Field::prime_field(Prime(2));
  FieldHandle F4 = Field::extend(F2, ffp(F2, {1, 1, 1}));
  FieldHandle T = Field::extend(F4, FFPoly(F4, {F4->gen(), F4->one(), F4->one()}));
  FieldHandle L = Field::extend(F2, ffp(F2, {1, 1, 0, 0, 1}));  // y^4+y+1
  auto root_of = [&](const std::function<FFElem(const FFElem&)>& f) {
    for (long i = 0; i < 16; ++i) {
      FFElem x = L->element(Integer(i));
      if (f(x).is_zero()) return x;
    }
    FAIL("no root");
    return L->zero();
  };
  FFElem a = root_of([&](const FFElem& x) { return x * x + x + L->one(); });
  FFElem b = root_of([&](const FFElem& x) { return x * x + x + a; });
  auto img4 = [&](const FFElem& u) { return (u.coord(0).is_zero() ? L->zero() : L->one()) + (u.coord(1).is_zero() ? L->zero() : a); };
  auto img = [&](const FFElem& u) { return img4(u.coord(0)) + img4(u.coord(1)) * b; };
  std::mt19937_64 rng(22);
  for (int k = 0; k < 200; ++k) {
    FFElem u = T->random(rng), v = T->random(rng);
    CHECK(img(u * v) == img(u) * img(v));
    CHECK(img(u + v) == img(u) + img(v));
  }
}

TEST_CASE("ff_factor examples") {
  FieldHandle F2 = Field::prime_field(Prime(2));
  auto f1 = ff_factor(ffp(F2, {1, 0, 1}), 0);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].factor == ffp(F2, {1, 1}));
  CHECK(f1[0].mult == 2);

  FieldHandle F5 = Field::prime_field(Prime(5));
  auto f2 = ff_factor(ffp(F5, {1, 1, 1}), 0);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].factor == ffp(F5, {1, 1, 1}));
  CHECK(f2[0].mult == 1);

  FieldHandle F3 = Field::prime_field(Prime(3));
  auto f3 = ff_factor(ffp(F3, {0, -1, 0, 1}), 0);
  REQUIRE(f3.size() == 3);
  CHECK(f3[0].factor == ffp(F3, {0, 1}));
  CHECK(f3[1].factor == ffp(F3, {1, 1}));
  CHECK(f3[2].factor == ffp(F3, {2, 1}));
}

TEST_CASE("ff_factor does not depend on the seed") {
  FieldHandle F7 = Field::prime_field(Prime(7));
  FFPoly f = ffp(F7, {3, 1, 4, 1, 5, 2, 6, 1});
  f = f * f * ffp(F7, {1, 1});
  auto a = ff_factor(f, 1), b = ff_factor(f, 987654321);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].factor == b[i].factor);
    CHECK(a[i].mult == b[i].mult);
  }
}

TEST_CASE("irreducibility") {
  FieldHandle F2 = Field::prime_field(Prime(2));
  FieldHandle F5 = Field::prime_field(Prime(5));
  CHECK(ff_is_irreducible(ffp(F5, {0, 1})));
  CHECK_FALSE(ff_is_irreducible(ffp(F5, {1, 0, 1})));
  CHECK(ff_is_irreducible(ffp(F2, {1, 1, 1})));
  CHECK(ff_is_irreducible(ffp(F2, {1, 1, 0, 1})));
  CHECK_FALSE(ff_is_irreducible(ffp(F2, {1, 0, 0, 0, 1})));
}

TEST_CASE("ff_factor recomposition and Frobenius certificates") {
  props::Tally T = props::ff_factor_recomposition(200, 23);
  CHECK(T.cases >= 200);
  CHECK_MESSAGE(T.failures == 0, T.first_failure);
}

TEST_CASE("polynomial gcd and division") {
  FieldHandle F3 = Field::prime_field(Prime(3));
  FFPoly a = ffp(F3, {1, 1}) * ffp(F3, {1, 0, 1});
  FFPoly b = ffp(F3, {1, 1}) * ffp(F3, {0, 1});
  CHECK(gcd(a, b) == ffp(F3, {1, 1}));
  FFDivRem qr = divrem(a, b);
  CHECK(qr.q * b + qr.r == a);
  CHECK(multiplicity(a * a * ffp(F3, {1, 1}), ffp(F3, {1, 1})) == 3);
}
