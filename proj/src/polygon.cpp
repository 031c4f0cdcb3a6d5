#include "severi/polygon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace severi {

namespace {

std::string point_str(const LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::vector<DirectionRun> runs_of(const std::vector<long>& seq) {
  std::vector<DirectionRun> out;
  for (long v : seq) {
    if (!out.empty() && out.back().direction == v)
      ++out.back().length;
    else
      out.push_back({v, 1});
  }
  return out;
}

std::vector<long> expand(std::span<const DirectionRun> runs) {
  std::vector<long> out;
  for (const auto& r : runs) {
    if (r.length == 0) throw std::invalid_argument("direction runs must have positive length");
    out.insert(out.end(), r.length, r.direction);
  }
  return out;
}

long cross(long ax, long ay, long bx, long by) { return ax * by - ay * bx; }

struct Normal {
  long x, y;
};

Normal outward_normal(const LatticePoint& a, const LatticePoint& b) {
  long ex = b.x - a.x, ey = b.y - a.y;
  long g = std::gcd(std::labs(ex), std::labs(ey));
  return {ey / g, -ex / g};
}

}  // namespace

HTPolygon::HTPolygon(unsigned dt, std::vector<long> left, std::vector<long> right)
    : dt_(dt), left_(std::move(left)), right_(std::move(right)) {}

HTPolygon HTPolygon::from_sequences(unsigned dt, std::vector<long> left, std::vector<long> right) {
  if (left.size() != right.size())
    throw std::invalid_argument("left and right directions must have the same count");
  if (right.empty()) throw std::invalid_argument("polygon height must be at least 1");
  for (std::size_t i = 1; i < right.size(); ++i) {
    if (right[i] > right[i - 1])
      throw std::invalid_argument("right directions must be nonincreasing from top to bottom (not convex)");
    if (left[i] < left[i - 1])
      throw std::invalid_argument("left directions must be nondecreasing from top to bottom (not convex)");
  }
  HTPolygon p(dt, std::move(left), std::move(right));
  // Widths of a concave sequence are minimal at an end.
  long w = dt, widest = dt;
  for (std::size_t i = 0; i < p.right_.size(); ++i) {
    w += p.right_[i] - p.left_[i];
    widest = std::max(widest, w);
  }
  if (w < 0) throw std::invalid_argument("bottom width is negative; the boundary does not close up");
  if (widest == 0) throw std::invalid_argument("degenerate polygon (all widths zero)");
  return p;
}

HTPolygon HTPolygon::from_directions(unsigned dt, std::span<const DirectionRun> left,
                                     std::span<const DirectionRun> right) {
  return from_sequences(dt, expand(left), expand(right));
}

HTPolygon HTPolygon::from_vertices(std::span<const LatticePoint> input) {
  std::vector<LatticePoint> pts(input.begin(), input.end());
  if (pts.size() < 3) throw std::invalid_argument("a polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == pts[(i + 1) % pts.size()])
      throw std::invalid_argument("repeated vertex " + point_str(pts[i]));
  // drop collinear points
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& a = pts[(i + pts.size() - 1) % pts.size()];
      const auto& b = pts[i];
      const auto& c = pts[(i + 1) % pts.size()];
      long cr = cross(b.x - a.x, b.y - a.y, c.x - b.x, c.y - b.y);
      long dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
      if (cr == 0 && dot > 0) {
        pts.erase(pts.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  std::size_t n = pts.size();
  if (n < 3) throw std::invalid_argument("degenerate polygon");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % n];
    const auto& c = pts[(i + 2) % n];
    if (cross(b.x - a.x, b.y - a.y, c.x - b.x, c.y - b.y) <= 0)
      throw std::invalid_argument("vertices must form a convex polygon in counterclockwise order (fails at " +
                                  point_str(b) + ")");
  }
  long ymax = pts[0].y, ymin = pts[0].y;
  for (const auto& p : pts) {
    ymax = std::max(ymax, p.y);
    ymin = std::min(ymin, p.y);
  }
  long M = ymax - ymin;
  if (M < 1) throw std::invalid_argument("degenerate polygon (zero height)");
  std::vector<long> left(M), right(M);
  std::vector<bool> lset(M, false), rset(M, false);
  long dt = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % n];
    long ex = b.x - a.x, ey = b.y - a.y;
    if (ey == 0) {
      if (ex < 0) dt = -ex;
      continue;
    }
    if (ex % ey != 0)
      throw std::invalid_argument("edge " + point_str(a) + "->" + point_str(b) +
                                  " has a normal of non-integral slope; the polygon is not h-transverse");
    long dir = -ex / ey;
    long y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
    for (long y = y0; y < y1; ++y) {
      long row = ymax - y - 1;
      if (ey > 0) {
        right[row] = dir;
        rset[row] = true;
      } else {
        left[row] = dir;
        lset[row] = true;
      }
    }
  }
  for (long i = 0; i < M; ++i)
    if (!lset[i] || !rset[i]) throw std::invalid_argument("polygon boundary does not cover every row");
  HTPolygon p = from_sequences(static_cast<unsigned>(dt), std::move(left), std::move(right));

  // Compare against the input up to translation.
  auto canon = p.vertices();
  long tx = 0;
  for (const auto& q : pts)
    if (q.y == ymax) {
      tx = q.x;
      break;
    }
  for (const auto& q : pts)
    if (q.y == ymax) tx = std::min(tx, q.x);
  std::vector<LatticePoint> moved;
  for (const auto& q : pts) moved.push_back({q.x - tx, q.y - ymin});
  auto key = [](const LatticePoint& a, const LatticePoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; };
  std::sort(canon.begin(), canon.end(), key);
  std::sort(moved.begin(), moved.end(), key);
  if (canon != moved) throw std::invalid_argument("vertex list does not describe a closed h-transverse polygon");
  return p;
}

unsigned HTPolygon::db() const {
  long w = dt_;
  for (std::size_t i = 0; i < right_.size(); ++i) w += right_[i] - left_[i];
  return static_cast<unsigned>(w);
}

std::vector<DirectionRun> HTPolygon::left_runs() const { return runs_of(left_); }
std::vector<DirectionRun> HTPolygon::right_runs() const { return runs_of(right_); }

std::vector<LatticePoint> HTPolygon::vertices() const {
  long M = height();
  std::vector<long> xl(M + 1), xr(M + 1);
  xl[0] = 0;
  xr[0] = dt_;
  for (long i = 1; i <= M; ++i) {
    xl[i] = xl[i - 1] + left_[i - 1];
    xr[i] = xr[i - 1] + right_[i - 1];
  }
  std::vector<LatticePoint> out;
  out.push_back({xl[M], 0});
  if (db() > 0) out.push_back({xr[M], 0});
  for (long i = M - 1; i >= 1; --i)
    if (right_[i - 1] != right_[i]) out.push_back({xr[i], M - i});
  out.push_back({xr[0], M});
  if (dt_ > 0) out.push_back({xl[0], M});
  for (long i = 1; i <= M - 1; ++i)
    if (left_[i - 1] != left_[i]) out.push_back({xl[i], M - i});
  return out;
}

std::vector<long> divergence_of(const HTPolygon& p) {
  std::vector<long> d{static_cast<long>(p.dt())};
  for (std::size_t i = 0; i < p.height(); ++i) d.push_back(p.right()[i] - p.left()[i]);
  return d;
}

BetaSeq beta_of(const HTPolygon& p) {
  auto d = divergence_of(p);
  return beta_from_divergence(d);
}

PolygonStats polygon_stats(const HTPolygon& p) {
  PolygonStats s;
  auto verts = p.vertices();
  std::size_t n = verts.size();
  long M = p.height();
  s.height = M;
  std::vector<Normal> normals(n);  // normals[i] belongs to edge verts[i] -> verts[i+1]
  for (std::size_t i = 0; i < n; ++i) normals[i] = outward_normal(verts[i], verts[(i + 1) % n]);

  long twice_area = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = verts[i];
    const auto& b = verts[(i + 1) % n];
    twice_area += cross(a.x, a.y, b.x, b.y);
  }
  s.area = twice_area;

  for (std::size_t i = 0; i < n; ++i) {
    const Normal& in = normals[(i + n - 1) % n];
    const Normal& out = normals[i];
    unsigned det = static_cast<unsigned>(std::labs(cross(in.x, in.y, out.x, out.y)));
    VertexPlace place;
    if (verts[i].y == M)
      place = VertexPlace::top;
    else if (verts[i].y == 0)
      place = VertexPlace::bottom;
    else {
      // the right side is traversed upward, i.e. the incoming edge rises
      place = verts[i].y > verts[(i + n - 1) % n].y ? VertexPlace::right : VertexPlace::left;
    }
    VertexInfo vi{verts[i], place, det};
    s.vertices.push_back(vi);
    s.det += det;
    ++s.v[det];
    if (vi.internal()) {
      ++s.v_internal[det];
      s.idet += det;
    }
    if (place == VertexPlace::top && p.dt() == 0) s.tdet = det;
    if (place == VertexPlace::bottom && p.db() == 0) s.bdet = det;
  }

  s.min_edge_length = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = verts[i];
    const auto& b = verts[(i + 1) % n];
    unsigned len = static_cast<unsigned>(std::gcd(std::labs(b.x - a.x), std::labs(b.y - a.y)));
    bool ia = s.vertices[i].internal(), ib = s.vertices[(i + 1) % n].internal();
    s.edges.push_back({a, b, len, ia || ib, ia && ib});
    s.LL += len;
    if (i == 0 || len < s.min_edge_length) s.min_edge_length = len;
    if (ia || ib) s.ell = s.ell ? std::min(*s.ell, len) : len;
  }
  return s;
}

ToricInvariants toric_invariants(const HTPolygon& p) {
  PolygonStats s = polygon_stats(p);
  ToricInvariants t;
  t.Lsq = s.area;
  t.LK = -s.LL;
  t.c2 = static_cast<unsigned>(s.vertices.size());
  t.c2tilde = s.det;
  for (const auto& [det, count] : s.v)
    if (det > 1) {
      t.S_i[det - 1] += count;
      t.S += det * count;
    }
  t.gorenstein = s.tdet <= 2 && s.bdet <= 2;

  // K^2 from the normal fan, rays in counterclockwise order.
  auto verts = p.vertices();
  std::size_t n = verts.size();
  std::vector<Normal> rays(n);
  for (std::size_t i = 0; i < n; ++i) rays[i] = outward_normal(verts[i], verts[(i + 1) % n]);
  auto det2 = [](const Normal& a, const Normal& b) { return cross(a.x, a.y, b.x, b.y); };
  Rational k2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Normal& prev = rays[(i + n - 1) % n];
    const Normal& cur = rays[i];
    const Normal& next = rays[(i + 1) % n];
    Rational d_prev(det2(prev, cur)), d_next(det2(cur, next)), d_i(det2(prev, next));
    k2 += 1 / d_prev + 1 / d_next - d_i / (d_prev * d_next);
  }
  t.Ksq = k2;
  return t;
}

unsigned reordering_cogenus(std::span<const long> left, std::span<const long> right) {
  long total = 0;
  for (std::size_t i = 0; i < right.size(); ++i)
    for (std::size_t j = i + 1; j < right.size(); ++j)
      if (right[i] < right[j]) total += right[j] - right[i];
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = i + 1; j < left.size(); ++j)
      if (left[i] > left[j]) total += left[i] - left[j];
  return static_cast<unsigned>(total);
}

namespace {

struct SidePerm {
  std::vector<long> seq;
  unsigned cost;
};

// Distinct permutations of `values` whose reversal cost
// sum_{i<j, s_i<s_j} (s_j - s_i) is at most `budget`. `values` is
// nonincreasing, and the output starts with it.
std::vector<SidePerm> side_permutations(const std::vector<long>& values, unsigned budget) {
  std::vector<long> distinct;
  std::vector<unsigned> remaining, placed;
  for (long v : values) {
    if (distinct.empty() || distinct.back() != v) {
      distinct.push_back(v);
      remaining.push_back(0);
      placed.push_back(0);
    }
    ++remaining.back();
  }
  std::vector<SidePerm> out;
  std::vector<long> seq;
  std::function<void(unsigned)> rec = [&](unsigned cost) {
    if (seq.size() == values.size()) {
      out.push_back({seq, cost});
      return;
    }
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      if (remaining[k] == 0) continue;
      long add = 0;
      for (std::size_t u = k + 1; u < distinct.size(); ++u)  // smaller values already placed
        add += static_cast<long>(placed[u]) * (distinct[k] - distinct[u]);
      if (cost + add > budget) continue;
      --remaining[k];
      ++placed[k];
      seq.push_back(distinct[k]);
      rec(cost + static_cast<unsigned>(add));
      seq.pop_back();
      --placed[k];
      ++remaining[k];
    }
  };
  rec(0);
  return out;
}

std::vector<long> negated(std::vector<long> v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

void for_each_reordering(const HTPolygon& p, unsigned delta,
                         const std::function<void(const Reordering&)>& visit) {
  auto rights = side_permutations(p.right(), delta);
  auto lefts = side_permutations(negated(p.left()), delta);
  for (const auto& r : rights)
    for (const auto& l : lefts) {
      if (r.cost + l.cost > delta) continue;
      std::vector<long> left = negated(l.seq);
      std::vector<long> d{static_cast<long>(p.dt())};
      bool ok = true;
      long w = p.dt();
      for (std::size_t i = 0; i < left.size(); ++i) {
        d.push_back(r.seq[i] - left[i]);
        w += d.back();
        if (w < 0) ok = false;
      }
      if (!ok) continue;
      visit(Reordering{left, r.seq, r.cost + l.cost, beta_from_divergence(d)});
    }
}

std::vector<Reordering> reorderings(const HTPolygon& p, unsigned delta) {
  std::vector<Reordering> out;
  for_each_reordering(p, delta, [&](const Reordering& r) { out.push_back(r); });
  return out;
}

namespace {

struct SideVertex {
  unsigned level;  // rows 1..level lie above the vertex
  unsigned lo_bound, hi_bound;
  long upper, lower;  // direction values above and below (as nonincreasing s)
};

std::vector<SideVertex> side_vertices(const std::vector<long>& s) {
  auto runs = runs_of(s);
  std::vector<unsigned> cut{0};
  for (const auto& r : runs) cut.push_back(cut.back() + r.length);
  std::vector<SideVertex> out;
  for (std::size_t k = 0; k + 1 < runs.size(); ++k)
    out.push_back({cut[k + 1], cut[k], cut[k + 2], runs[k].direction, runs[k + 1].direction});
  return out;
}

std::vector<long> local_piece(const std::vector<long>& def, const std::vector<long>& actual,
                              const SideVertex& v) {
  std::vector<long> piece = def;
  for (unsigned i = v.lo_bound; i < v.hi_bound; ++i)
    if (actual[i] == v.upper || actual[i] == v.lower) piece[i] = actual[i];
  return piece;
}

[[noreturn]] void not_guaranteed() { throw std::invalid_argument("decomposition not guaranteed"); }

}  // namespace

std::vector<LocalReordering> vlocal_decompose(const HTPolygon& p, const Reordering& r) {
  PolygonStats st = polygon_stats(p);
  for (const auto& e : st.edges)
    if (e.internal && e.lattice_length < r.cogenus) not_guaranteed();
  std::vector<LocalReordering> out;
  const auto& def_r = p.right();
  for (const auto& v : side_vertices(def_r)) {
    auto piece = local_piece(def_r, r.right, v);
    auto sorted = piece;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != def_r) not_guaranteed();
    out.push_back({VertexPlace::right, v.level, static_cast<unsigned>(v.upper - v.lower), p.left(), piece,
                   reordering_cogenus(p.left(), piece)});
  }
  auto def_s = negated(p.left());
  auto act_s = negated(r.left);
  for (const auto& v : side_vertices(def_s)) {
    auto piece = local_piece(def_s, act_s, v);
    auto sorted = piece;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != def_s) not_guaranteed();
    auto left = negated(piece);
    out.push_back({VertexPlace::left, v.level, static_cast<unsigned>(v.upper - v.lower), left, p.right(),
                   reordering_cogenus(left, p.right())});
  }
  unsigned total = 0;
  for (const auto& piece : out) total += piece.cogenus;
  auto [l, rr] = recombine(p, out);
  if (total != r.cogenus || l != r.left || rr != r.right) not_guaranteed();
  return out;
}

std::pair<std::vector<long>, std::vector<long>> recombine(const HTPolygon& p,
                                                          std::span<const LocalReordering> pieces) {
  std::vector<long> left = p.left(), right = p.right();
  for (const auto& piece : pieces) {
    for (std::size_t i = 0; i < right.size(); ++i) {
      if (piece.right[i] != p.right()[i]) right[i] = piece.right[i];
      if (piece.left[i] != p.left()[i]) left[i] = piece.left[i];
    }
  }
  return {left, right};
}

nlohmann::json polygon_to_json(const HTPolygon& p) {
  auto runs = [](const std::vector<DirectionRun>& rs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs) a.push_back({r.direction, r.length});
    return a;
  };
  return {{"dt", p.dt()}, {"db", p.db()}, {"left", runs(p.left_runs())}, {"right", runs(p.right_runs())}};
}

HTPolygon polygon_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("polygon JSON must be an object");
  if (j.contains("vertices")) {
    std::vector<LatticePoint> pts;
    for (const auto& v : j.at("vertices")) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        throw std::invalid_argument("each vertex must be [x, y] with integer coordinates");
      pts.push_back({v[0].get<long>(), v[1].get<long>()});
    }
    return HTPolygon::from_vertices(pts);
  }
  for (const char* key : {"dt", "left", "right"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("polygon JSON is missing \"") + key + "\"");
  if (!j["dt"].is_number_unsigned()) throw std::invalid_argument("\"dt\" must be a nonnegative integer");
  auto parse_runs = [](const nlohmann::json& a, const char* side) {
    if (!a.is_array()) throw std::invalid_argument(std::string("\"") + side + "\" must be an array of [dir, len]");
    std::vector<DirectionRun> out;
    for (const auto& r : a) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_unsigned())
        throw std::invalid_argument(std::string("\"") + side + "\" entries must be [dir, len] with len >= 1");
      out.push_back({r[0].get<long>(), r[1].get<unsigned>()});
    }
    return out;
  };
  auto left = parse_runs(j["left"], "left");
  auto right = parse_runs(j["right"], "right");
  HTPolygon p = HTPolygon::from_directions(j["dt"].get<unsigned>(), left, right);
  if (j.contains("db") && (!j["db"].is_number_unsigned() || j["db"].get<unsigned>() != p.db()))
    throw std::invalid_argument("\"db\" does not match the bottom width implied by the directions");
  return p;
}

}  // namespace severi
