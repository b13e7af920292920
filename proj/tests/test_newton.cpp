#include <doctest.h>

#include <random>

#include "montes/newton.hpp"

using namespace montes;

namespace {

std::vector<Rational> slopes(const NewtonPolygon& N) {
  std::vector<Rational> v;
  for (const auto& s : N.sides()) v.push_back(s.slope());
  return v;
}

}  // namespace

TEST_CASE("lower hull examples") {
  NewtonPolygon a = lower_hull({{0, 2}, {1, 4}, {2, 0}});
  REQUIRE(a.sides().size() == 1);
  CHECK(a.sides()[0].slope() == Rational(-1));
  CHECK(a.sides()[0].length() == 2);

  NewtonPolygon b = lower_hull({{0, 5}, {1, 2}, {2, 0}});
  CHECK(slopes(b) == std::vector<Rational>{Rational(-3), Rational(-2)});

  NewtonPolygon c = lower_hull({{0, 0}});
  CHECK(c.sides().empty());
  CHECK(c.length() == 0);

  // collinear interior point is not a vertex
  NewtonPolygon d = lower_hull({{0, 4}, {1, 2}, {2, 0}, {3, 1}});
  CHECK(d.vertices().size() == 3);

  CHECK_THROWS_AS(lower_hull({{0, Valuation::infinity()}}), Error);
}

TEST_CASE("infinite leading ordinates give a -infinity side") {
  NewtonPolygon N = lower_hull({{0, Valuation::infinity()}, {1, Valuation::infinity()}, {2, 3}, {3, 1}});
  auto S = N.sides();
  REQUIRE(S.size() == 2);
  CHECK(S[0].neg_infinite);
  CHECK(S[0].length() == 2);
  CHECK(S[1].slope() == Rational(-2));
  CHECK(principal(N).size() == 2);
}

TEST_CASE("principal part") {
  NewtonPolygon N = lower_hull({{0, 3}, {1, 2}, {2, 2}, {3, 4}});
  auto P = principal(N);
  REQUIRE(P.size() == 1);
  CHECK(P[0].slope() == Rational(-1));
  CHECK(principal(lower_hull({{0, 0}})).empty());
  CHECK(principal_polygon(N).length() == 1);
}

TEST_CASE("lambda components") {
  NewtonPolygon N = lower_hull({{0, 2}, {2, 0}});
  Side s = lambda_component(N, 1, 1);
  CHECK(s.length() == 2);
  Side v = lambda_component(N, 3, 1);
  CHECK(v.length() == 0);
  CHECK(v.left == PolyPoint{0, 2});
  Side w = lambda_component(N, 1, 3);
  CHECK(w.length() == 0);
  CHECK(w.left == PolyPoint{2, 0});
  NewtonPolygon M = lower_hull({{0, 1}, {2, 0}});
  CHECK(lambda_component(M, 1, 2).length() == 2);
}

TEST_CASE("minkowski sums") {
  NewtonPolygon a = lower_hull({{0, 1}, {1, 0}});
  NewtonPolygon s = minkowski_sum(a, a);
  REQUIRE(s.sides().size() == 1);
  CHECK(s.sides()[0].length() == 2);
  CHECK(s.sides()[0].slope() == Rational(-1));

  NewtonPolygon m = minkowski_sum(lower_hull({{0, 3}, {1, 0}}), lower_hull({{0, 2}, {1, 0}}));
  CHECK(slopes(m) == std::vector<Rational>{Rational(-3), Rational(-2)});

  NewtonPolygon N = lower_hull({{0, 5}, {1, 2}, {2, 0}});
  NewtonPolygon up = minkowski_sum(N, lower_hull({{0, 4}}));
  CHECK(up == lower_hull({{0, 9}, {1, 6}, {2, 4}}));
}

TEST_CASE("hull is canonical") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    std::vector<PolyPoint> pts;
    const long n = 1 + static_cast<long>(rng() % 8);
    for (long x = 0; x <= n; ++x) pts.push_back({x, static_cast<long>(rng() % 12)});
    NewtonPolygon N = lower_hull(pts);
    CHECK(lower_hull(N.vertices()) == N);
    CHECK(N.length() == n);
    // no point strictly below a side
    for (const auto& s : N.sides())
      for (const auto& q : pts)
        if (q.x >= s.left.x && q.x <= s.right.x)
          CHECK(s.e * (q.y.value() - s.left.y.value()) + s.h * (q.x - s.left.x) >= 0);
    Rational prev(-1000000);
    for (const auto& s : N.sides()) {
      CHECK(s.slope() > prev);
      prev = s.slope();
    }
  }
}

TEST_CASE("ascii rendering") {
  NewtonPolygon N = lower_hull({{0, 2}, {2, 1}, {4, 0}});
  std::string art = render_ascii(N, {{0, 2}, {1, 3}, {2, 1}, {4, 0}});
  CHECK(art.find('o') != std::string::npos);
  CHECK(art.find('+') != std::string::npos);
}
