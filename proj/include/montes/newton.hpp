#pragma once

#include <optional>
#include <string>
#include <vector>

#include "montes/arith.hpp"

namespace montes {

struct PolyPoint {
  long x = 0;
  Valuation y;
  friend bool operator==(const PolyPoint&, const PolyPoint&) = default;
};

// A side of slope -h/e (gcd(h, e) = 1), or of slope -infinity.
struct Side {
  bool neg_infinite = false;
  long h = 0;
  long e = 1;
  PolyPoint left;
  PolyPoint right;

  long length() const { return right.x - left.x; }
  long degree() const { return length() / e; }
  Rational slope() const;  // only for finite sides
  friend bool operator==(const Side&, const Side&) = default;
};

class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  // Vertices left to right; a leading vertex with infinite ordinate opens a -infinity side.
  explicit NewtonPolygon(std::vector<PolyPoint> vertices);

  const std::vector<PolyPoint>& vertices() const { return v_; }
  std::vector<Side> sides() const;
  long length() const;  // abscissa of the right end point
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<PolyPoint> v_;
};

NewtonPolygon lower_hull(std::vector<PolyPoint> points);
std::vector<Side> principal(const NewtonPolygon& N);
// Polygon made of the principal sides only (first vertex if there are none).
NewtonPolygon principal_polygon(const NewtonPolygon& N);

// The lambda-component for lambda = -h/e: the side of that slope, or the vertex
// minimizing e*y + h*x (returned as a side of length 0).
Side lambda_component(const NewtonPolygon& N, long h, long e);

NewtonPolygon minkowski_sum(const NewtonPolygon& a, const NewtonPolygon& b);

std::string render_ascii(const NewtonPolygon& N, const std::vector<PolyPoint>& cloud = {});

}  // namespace montes
