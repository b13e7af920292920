#include "montes/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace montes {

namespace {

using i128 = __int128;

// > 0 when o->a->b turns left (counter-clockwise).
i128 cross(const PolyPoint& o, const PolyPoint& a, const PolyPoint& b) {
  i128 ax = a.x - o.x, ay = a.y.value() - o.y.value();
  i128 bx = b.x - o.x, by = b.y.value() - o.y.value();
  return ax * by - ay * bx;
}

Side make_side(const PolyPoint& l, const PolyPoint& r) {
  Side s;
  s.left = l;
  s.right = r;
  if (l.y.is_infinite()) {
    s.neg_infinite = true;
    return s;
  }
  long dx = r.x - l.x, dy = r.y.value() - l.y.value();
  // slope dy/dx = -h/e; sides of non-negative slope get h <= 0
  long g = std::gcd(dx, dy < 0 ? -dy : dy);
  if (g == 0) g = 1;
  s.h = -dy / g;
  s.e = dx / g;
  return s;
}

}  // namespace

Rational Side::slope() const {
  if (neg_infinite) throw Error(ErrorKind::Internal, "slope of an infinite side");
  return Rational(-h, e);
}

NewtonPolygon::NewtonPolygon(std::vector<PolyPoint> vertices) : v_(std::move(vertices)) {}

std::vector<Side> NewtonPolygon::sides() const {
  std::vector<Side> s;
  for (std::size_t i = 0; i + 1 < v_.size(); ++i) s.push_back(make_side(v_[i], v_[i + 1]));
  return s;
}

long NewtonPolygon::length() const { return v_.empty() ? 0 : v_.back().x; }

NewtonPolygon lower_hull(std::vector<PolyPoint> points) {
  std::sort(points.begin(), points.end(), [](const PolyPoint& a, const PolyPoint& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].x == points[i - 1].x) throw Error(ErrorKind::Internal, "repeated abscissa in cloud");
  std::vector<PolyPoint> finite;
  for (const auto& p : points)
    if (!p.y.is_infinite()) finite.push_back(p);
  if (finite.empty()) throw Error(ErrorKind::EmptyCloud, "all ordinates are infinite");
  std::vector<PolyPoint> hull;
  if (points.front().y.is_infinite()) hull.push_back(points.front());
  std::size_t base = hull.size();
  for (const auto& p : finite) {
    while (hull.size() >= base + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return NewtonPolygon(std::move(hull));
}

std::vector<Side> principal(const NewtonPolygon& N) {
  std::vector<Side> r;
  for (const auto& s : N.sides())
    if (s.neg_infinite || s.h > 0) r.push_back(s);
  return r;
}

NewtonPolygon principal_polygon(const NewtonPolygon& N) {
  std::vector<PolyPoint> v;
  const auto& vs = N.vertices();
  if (vs.empty()) return N;
  v.push_back(vs[0]);
  for (const auto& s : principal(N)) v.push_back(s.right);
  return NewtonPolygon(std::move(v));
}

Side lambda_component(const NewtonPolygon& N, long h, long e) {
  const auto& vs = N.vertices();
  std::optional<std::size_t> best;
  i128 bestv = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].y.is_infinite()) continue;
    i128 val = static_cast<i128>(e) * vs[i].y.value() + static_cast<i128>(h) * vs[i].x;
    if (!best || val < bestv) {
      best = i;
      bestv = val;
    }
  }
  if (!best) throw Error(ErrorKind::EmptyCloud, "polygon without finite vertices");
  std::size_t i = *best;
  if (i + 1 < vs.size()) {
    i128 val = static_cast<i128>(e) * vs[i + 1].y.value() + static_cast<i128>(h) * vs[i + 1].x;
    if (val == bestv) return make_side(vs[i], vs[i + 1]);
  }
  Side s;
  s.h = h;
  s.e = e;
  s.left = s.right = vs[i];
  return s;
}

NewtonPolygon minkowski_sum(const NewtonPolygon& a, const NewtonPolygon& b) {
  if (a.vertices().empty() || b.vertices().empty()) throw Error(ErrorKind::EmptyCloud, "empty polygon");
  auto split = [](const NewtonPolygon& N, long& x0, long& inf_len, PolyPoint& first, std::vector<Side>& fin) {
    const auto& vs = N.vertices();
    x0 = vs[0].x;
    std::size_t k = 0;
    inf_len = 0;
    if (vs[0].y.is_infinite()) {
      inf_len = vs[1].x - vs[0].x;
      k = 1;
    }
    first = vs[k];
    for (const auto& s : N.sides())
      if (!s.neg_infinite) fin.push_back(s);
  };
  long ax0, ainf, bx0, binf;
  PolyPoint af, bf;
  std::vector<Side> as, bs;
  split(a, ax0, ainf, af, as);
  split(b, bx0, binf, bf, bs);
  std::vector<PolyPoint> v;
  if (ainf + binf > 0) v.push_back({ax0 + bx0, Valuation::infinity()});
  PolyPoint cur{af.x + bf.x, af.y + bf.y};
  v.push_back(cur);
  std::vector<Side> all = as;
  all.insert(all.end(), bs.begin(), bs.end());
  std::stable_sort(all.begin(), all.end(), [](const Side& s, const Side& t) {
    // slope -h/e ascending
    return static_cast<i128>(s.h) * t.e > static_cast<i128>(t.h) * s.e;
  });
  for (const auto& s : all) {
    PolyPoint nxt{cur.x + s.length(), Valuation(cur.y.value() + (s.right.y.value() - s.left.y.value()))};
    // merge collinear consecutive sides
    if (v.size() >= 2 && !v[v.size() - 2].y.is_infinite() && cross(v[v.size() - 2], v.back(), nxt) == 0) v.pop_back();
    v.push_back(nxt);
    cur = nxt;
  }
  return NewtonPolygon(std::move(v));
}

std::string render_ascii(const NewtonPolygon& N, const std::vector<PolyPoint>& cloud) {
  std::vector<PolyPoint> pts = cloud;
  for (const auto& v : N.vertices()) pts.push_back(v);
  long xmax = 0, ymax = 0;
  for (const auto& p : pts) {
    xmax = std::max(xmax, p.x);
    if (!p.y.is_infinite()) ymax = std::max(ymax, p.y.value());
  }
  const long W = xmax + 1, H = ymax + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(H), std::string(static_cast<std::size_t>(2 * W), ' '));
  auto put = [&](long x, long y, char c) {
    if (x < 0 || y < 0 || x >= W || y >= H) return;
    char& g = grid[static_cast<std::size_t>(y)][static_cast<std::size_t>(2 * x)];
    if (g == ' ' || c == 'o') g = c;
  };
  for (const auto& s : N.sides()) {
    if (s.neg_infinite) {
      for (long y = s.right.y.value() + 1; y < H; ++y) put(s.right.x, y, '|');
      continue;
    }
    for (long x = s.left.x; x <= s.right.x; ++x) {
      // ordinate on the side line, only when integral
      long num = s.left.y.value() * s.e - s.h * (x - s.left.x);
      if (num % s.e == 0) put(x, num / s.e, '.');
    }
  }
  for (const auto& p : cloud)
    if (!p.y.is_infinite()) put(p.x, p.y.value(), '*');
  for (const auto& v : N.vertices())
    if (!v.y.is_infinite()) put(v.x, v.y.value(), 'o');
  std::ostringstream os;
  for (long y = H - 1; y >= 0; --y) {
    std::string row = grid[static_cast<std::size_t>(y)];
    while (!row.empty() && row.back() == ' ') row.pop_back();
    os << (y < 10 ? " " : "") << y << " |" << row << "\n";
  }
  os << "   +" << std::string(static_cast<std::size_t>(2 * W), '-') << "\n    ";
  for (long x = 0; x < W; ++x) os << (x % 10) << ' ';
  os << "\n";
  return os.str();
}

}  // namespace montes
