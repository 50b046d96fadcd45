#include "skcert/polygon.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace skcert {

namespace {

using i128 = __int128;

// Orientation of (a, b, c): > 0 for a counter-clockwise (strictly convex from
// below) turn, 0 for collinear.
i128 cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return static_cast<i128>(b.index - a.index) * (c.height - a.height) -
         static_cast<i128>(b.height - a.height) * (c.index - a.index);
}

i64 as_height(const Valuation& v) {
  if (v.value() > static_cast<u64>(std::numeric_limits<i64>::max())) {
    throw std::out_of_range("valuation does not fit a polygon coordinate");
  }
  return static_cast<i64>(v.value());
}

}  // namespace

NewtonPolygon NewtonPolygon::from_vertices(std::vector<LatticePoint> vertices) {
  if (vertices.size() < 2) throw std::invalid_argument("NewtonPolygon: need at least two vertices");
  if (vertices.front().index != 0) throw std::invalid_argument("NewtonPolygon: first vertex must have index 0");
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].index <= vertices[i - 1].index) {
      throw std::invalid_argument("NewtonPolygon: vertex indices must strictly increase");
    }
    if (i + 1 < vertices.size() && cross(vertices[i - 1], vertices[i], vertices[i + 1]) <= 0) {
      throw std::invalid_argument("NewtonPolygon: slopes must strictly increase at every vertex");
    }
  }
  return NewtonPolygon(std::move(vertices));
}

Rational NewtonPolygon::value_at(i64 x) const {
  if (x < 0 || x > degree()) throw std::out_of_range("NewtonPolygon::value_at: abscissa outside [0, k]");
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                             [](const LatticePoint& v, i64 key) { return v.index < key; });
  if (it->index == x) return Rational(it->height);
  const LatticePoint& b = *it;
  const LatticePoint& a = *(it - 1);
  // a.h + (b.h - a.h)(x - a.i)/(b.i - a.i)
  const i64 dx = b.index - a.index;
  return Rational(a.height * dx + (b.height - a.height) * (x - a.index), dx);
}

std::vector<Segment> NewtonPolygon::segments() const {
  std::vector<Segment> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const LatticePoint& a = vertices_[i];
    const LatticePoint& b = vertices_[i + 1];
    out.push_back({a, b.index - a.index, a.height - b.height});
  }
  return out;
}

std::vector<ValuedPoint> coefficient_valuations(const PolyInstance& instance, u64 p) {
  require_prime(p, "coefficient_valuations");
  const u64 k = instance.degree();
  const u64 top = vp_factorial(instance.m(), p);
  std::vector<ValuedPoint> points;
  points.reserve(k + 1);
  for (u64 i = 0; i <= k; ++i) {
    const Valuation ratio(top - vp_factorial(instance.n() + i, p));
    points.push_back({static_cast<i64>(i), ratio + unit_valuation(instance, i, p)});
  }
  return points;
}

NewtonPolygon lower_hull(std::span<const ValuedPoint> points) {
  if (points.empty()) throw std::invalid_argument("lower_hull: no points");

  std::vector<ValuedPoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ValuedPoint& a, const ValuedPoint& b) { return a.index < b.index; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].index == sorted[i - 1].index) throw std::invalid_argument("lower_hull: duplicate index");
  }
  if (sorted.front().index != 0 || sorted.front().valuation.is_infinite()) {
    throw std::invalid_argument("lower_hull: missing finite valuation at index 0");
  }
  if (sorted.back().valuation.is_infinite()) {
    throw std::invalid_argument("lower_hull: missing finite valuation at the top index");
  }

  std::vector<LatticePoint> hull;
  for (const ValuedPoint& pt : sorted) {
    if (pt.valuation.is_infinite()) continue;
    const LatticePoint q{pt.index, as_height(pt.valuation)};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), q) <= 0) hull.pop_back();
    hull.push_back(q);
  }
  if (hull.size() < 2) throw std::invalid_argument("lower_hull: fewer than two finite points");
  return NewtonPolygon::from_vertices(std::move(hull));
}

SlopeSequence slope_sequence(const NewtonPolygon& np) {
  SlopeSequence seq;
  seq.slopes.reserve(static_cast<std::size_t>(np.degree()));
  for (const Segment& s : np.segments()) {
    seq.slopes.insert(seq.slopes.end(), static_cast<std::size_t>(s.length), s.slope());
  }
  return seq;
}

std::vector<LatticePoint> lattice_points(const NewtonPolygon& np) {
  std::vector<LatticePoint> out;
  out.push_back(np.vertices().front());
  for (const Segment& s : np.segments()) {
    const i64 g = std::gcd(s.length, s.drop);
    const i64 dx = s.length / g;
    const i64 dy = s.drop / g;
    for (i64 u = 1; u <= g; ++u) {
      out.push_back({s.start.index + dx * u, s.start.height - dy * u});
    }
  }
  return out;
}

std::vector<CycleWitness> tame_cycle_witnesses(const NewtonPolygon& np, u64 p) {
  require_prime(p, "tame_cycle_witnesses");
  std::vector<CycleWitness> out;
  for (const Segment& s : np.segments()) {
    if (std::gcd(s.length, s.drop) != 1) continue;
    if (static_cast<u64>(s.length) % p == 0) continue;
    out.push_back({p, s.length, s, WitnessKind::Tame});
  }
  return out;
}

std::vector<CycleWitness> ramification_witnesses(const NewtonPolygon& np, u64 p) {
  require_prime(p, "ramification_witnesses");
  std::vector<CycleWitness> out;
  for (const Segment& s : np.segments()) {
    if (static_cast<u64>(s.length) == p && s.drop == 1) {
      out.push_back({p, s.length, s, WitnessKind::RamificationOrder});
    }
  }
  return out;
}

NewtonPolygon np_of_int_poly(std::span<const i64> coeffs, u64 p) {
  require_prime(p, "np_of_int_poly");
  if (coeffs.size() < 2) throw std::invalid_argument("np_of_int_poly: degree must be at least 1");
  if (coeffs.front() == 0) throw std::invalid_argument("np_of_int_poly: constant coefficient is zero");
  if (coeffs.back() == 0) throw std::invalid_argument("np_of_int_poly: leading coefficient is zero");
  std::vector<ValuedPoint> points;
  points.reserve(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const i64 c = coeffs[j];
    const u64 mag = c < 0 ? static_cast<u64>(0) - static_cast<u64>(c) : static_cast<u64>(c);
    points.push_back({static_cast<i64>(j), vp_int_or_inf(mag, p)});
  }
  return lower_hull(points);
}

bool np_pointwise_leq(const NewtonPolygon& a, const NewtonPolygon& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("np_pointwise_leq: degree mismatch");
  for (i64 j = 0; j <= a.degree(); ++j) {
    if (a.value_at(j) > b.value_at(j)) return false;
  }
  return true;
}

bool segment_on_polygon(const NewtonPolygon& np, const Segment& seg) {
  const LatticePoint end = seg.end();
  if (seg.length <= 0 || seg.start.index < 0 || end.index > np.degree()) return false;
  if (np.value_at(seg.start.index) != Rational(seg.start.height)) return false;
  if (np.value_at(end.index) != Rational(end.height)) return false;
  for (const LatticePoint& v : np.vertices()) {
    if (v.index > seg.start.index && v.index < end.index && cross(seg.start, v, end) != 0) return false;
  }
  return true;
}

bool family_segment_persists(const NewtonPolygon& np_f, const Segment& seg,
                             std::span<const Valuation> a_valuations) {
  if (!segment_on_polygon(np_f, seg)) {
    throw std::invalid_argument("family_segment_persists: segment is not on the polygon");
  }
  if (a_valuations.size() != static_cast<std::size_t>(np_f.degree()) + 1) {
    throw std::invalid_argument("family_segment_persists: need one multiplier valuation per coefficient");
  }
  const auto c = static_cast<std::size_t>(seg.start.index);
  const auto e = static_cast<std::size_t>(seg.end().index);
  return a_valuations[c] == Valuation(0) && a_valuations[e] == Valuation(0);
}

}  // namespace skcert
