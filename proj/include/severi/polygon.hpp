#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "severi/arith.hpp"
#include "severi/orderings.hpp"

namespace severi {

struct LatticePoint {
  long x = 0, y = 0;
  bool operator==(const LatticePoint&) const = default;
};

struct DirectionRun {
  long direction = 0;
  unsigned length = 0;
  bool operator==(const DirectionRun&) const = default;
};

// Directions are the per-row x-increments of the boundary, read top to
// bottom: right is nonincreasing, left is nondecreasing.
class HTPolygon {
 public:
  static HTPolygon from_sequences(unsigned dt, std::vector<long> left, std::vector<long> right);
  static HTPolygon from_directions(unsigned dt, std::span<const DirectionRun> left,
                                   std::span<const DirectionRun> right);
  // Counterclockwise lattice points. Collinear points are allowed and dropped.
  static HTPolygon from_vertices(std::span<const LatticePoint> vertices);

  unsigned dt() const { return dt_; }
  unsigned db() const;
  unsigned height() const { return static_cast<unsigned>(right_.size()); }
  const std::vector<long>& left() const { return left_; }
  const std::vector<long>& right() const { return right_; }
  std::vector<DirectionRun> left_runs() const;
  std::vector<DirectionRun> right_runs() const;

  // Counterclockwise vertex list, top-left boundary point at (0, height).
  std::vector<LatticePoint> vertices() const;

  bool operator==(const HTPolygon&) const = default;

 private:
  HTPolygon(unsigned dt, std::vector<long> left, std::vector<long> right);
  unsigned dt_;
  std::vector<long> left_, right_;
};

BetaSeq beta_of(const HTPolygon& p);
std::vector<long> divergence_of(const HTPolygon& p);  // (dt, r_1 - l_1, ...)

enum class VertexPlace { top, bottom, left, right };

struct VertexInfo {
  LatticePoint position;
  VertexPlace place;
  unsigned det;
  bool internal() const { return place == VertexPlace::left || place == VertexPlace::right; }
};

struct EdgeInfo {
  LatticePoint from, to;
  unsigned lattice_length;
  bool touches_internal;  // internal or extremal edge
  bool internal;          // both ends internal
};

struct PolygonStats {
  long area = 0, LL = 0, height = 0, idet = 0;
  unsigned det = 0, tdet = 0, bdet = 0;
  std::map<unsigned, unsigned> v;           // det -> number of vertices
  std::map<unsigned, unsigned> v_internal;  // det -> number of internal vertices
  unsigned min_edge_length = 0;
  std::optional<unsigned> ell;  // empty means unbounded (no internal vertex)
  std::vector<VertexInfo> vertices;
  std::vector<EdgeInfo> edges;
};

PolygonStats polygon_stats(const HTPolygon& p);

struct ToricInvariants {
  long Lsq = 0, LK = 0;
  Rational Ksq;
  unsigned c2 = 0;
  long c2tilde = 0;
  std::map<unsigned, unsigned> S_i;  // i -> number of singularities of index i + 1
  unsigned S = 0;
  bool gorenstein = false;
};

ToricInvariants toric_invariants(const HTPolygon& p);

struct Reordering {
  std::vector<long> left, right;
  unsigned cogenus;
  BetaSeq beta;
};

unsigned reordering_cogenus(std::span<const long> left, std::span<const long> right);

// All reorderings with cogenus <= delta and nonnegative widths, default first.
void for_each_reordering(const HTPolygon& p, unsigned delta,
                         const std::function<void(const Reordering&)>& visit);
std::vector<Reordering> reorderings(const HTPolygon& p, unsigned delta);

struct LocalReordering {
  VertexPlace side;       // left or right
  unsigned level;         // row boundary of the internal vertex
  unsigned det;
  std::vector<long> left, right;  // full sequences differing only near the vertex
  unsigned cogenus;
};

// One piece per internal vertex. Throws std::invalid_argument("decomposition
// not guaranteed") if an internal edge is shorter than the reordering's
// cogenus or the pieces fail to recombine.
std::vector<LocalReordering> vlocal_decompose(const HTPolygon& p, const Reordering& r);
std::pair<std::vector<long>, std::vector<long>> recombine(const HTPolygon& p,
                                                          std::span<const LocalReordering> pieces);

nlohmann::json polygon_to_json(const HTPolygon& p);
HTPolygon polygon_from_json(const nlohmann::json& j);

}  // namespace severi
