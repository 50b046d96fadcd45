#pragma once

// Newton polygons of integer polynomials with respect to a prime p: the lower
// convex hull of the points (j, v_p(b_j)), its slope sequence and lattice
// points, plus the cycle-witness rules that read Galois-group elements off
// polygon segments.

#include <cstdint>
#include <span>
#include <vector>

#include "skcert/instance.hpp"
#include "skcert/rational.hpp"
#include "skcert/valuations.hpp"

namespace skcert {

struct ValuedPoint {
  i64 index = 0;
  Valuation valuation;
  bool operator==(const ValuedPoint&) const = default;
};

struct LatticePoint {
  i64 index = 0;
  i64 height = 0;
  bool operator==(const LatticePoint&) const = default;
};

/// Segment from (c, d) to (c + t, d - s); t > 0. The slope is -s/t.
struct Segment {
  LatticePoint start;
  i64 length = 0;  // t
  i64 drop = 0;    // s
  LatticePoint end() const { return {start.index + length, start.height - drop}; }
  Rational slope() const { return Rational(-drop, length); }
  bool operator==(const Segment&) const = default;
};

class NewtonPolygon {
 public:
  /// Validates: first index 0, strictly increasing indices, strictly
  /// increasing slopes, at least two vertices.
  static NewtonPolygon from_vertices(std::vector<LatticePoint> vertices);

  i64 degree() const { return vertices_.back().index; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  /// Height of the polygon above abscissa x, 0 <= x <= degree.
  Rational value_at(i64 x) const;

  /// Maximal segments between consecutive vertices.
  std::vector<Segment> segments() const;

  bool operator==(const NewtonPolygon&) const = default;

 private:
  explicit NewtonPolygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}
  std::vector<LatticePoint> vertices_;
};

struct SlopeSequence {
  std::vector<Rational> slopes;
  bool operator==(const SlopeSequence&) const = default;
};

enum class WitnessKind { Tame, RamificationOrder };

struct CycleWitness {
  u64 prime = 0;
  i64 cycle_length = 0;
  Segment segment;
  WitnessKind kind = WitnessKind::Tame;
  bool operator==(const CycleWitness&) const = default;
};

/// Points (i, v_p(u_i * m!/(n+i)!)) for i = 0..k.
std::vector<ValuedPoint> coefficient_valuations(const PolyInstance& instance, u64 p);

/// Lower convex hull by monotone chain. Infinity points are skipped; collinear
/// points are dropped from the vertex list.
NewtonPolygon lower_hull(std::span<const ValuedPoint> points);

SlopeSequence slope_sequence(const NewtonPolygon& np);

/// Every integer point on the polygon, vertices included, by increasing index.
std::vector<LatticePoint> lattice_points(const NewtonPolygon& np);

/// One witness per maximal segment with gcd(s, t) = 1 and p not dividing t.
std::vector<CycleWitness> tame_cycle_witnesses(const NewtonPolygon& np, u64 p);

/// Maximal segments of slope -1/p and width p: a root of valuation 1/p, so
/// the ramification index (hence |G_f|) is divisible by p.
std::vector<CycleWitness> ramification_witnesses(const NewtonPolygon& np, u64 p);

NewtonPolygon np_of_int_poly(std::span<const i64> coeffs, u64 p);

/// True iff a(j) <= b(j) for every j in [0, k].
bool np_pointwise_leq(const NewtonPolygon& a, const NewtonPolygon& b);

/// The hypothesis of the family-persistence lemma: the segment of np_f
/// survives in every member whose multipliers are p-adic units at both ends.
bool family_segment_persists(const NewtonPolygon& np_f, const Segment& seg,
                             std::span<const Valuation> a_valuations);

/// True iff seg lies on np (both ends and every integer abscissa in between).
bool segment_on_polygon(const NewtonPolygon& np, const Segment& seg);

}  // namespace skcert
