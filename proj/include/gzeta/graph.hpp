#ifndef GZETA_GRAPH_HPP
#define GZETA_GRAPH_HPP

// Locally finite graphs in half-edge (dart) form, the model wrapper used by
// every operation downstream, integer Laplacians, and exact spectral moments
// of the rooted measure. Infinite integer lattices are represented
// symbolically; all their exact quantities reduce to finite truncations.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gzeta/errors.hpp"
#include "gzeta/exact.hpp"

namespace gzeta {

// One directed dart; `partner` is the fixed-point-free pairing that glues two
// darts into an undirected edge. The terminus of e is origin(partner(e)).
struct HalfEdge {
  int origin;
  int partner;
};

class HalfEdgeGraph {
 public:
  HalfEdgeGraph(int vertex_count, std::vector<HalfEdge> half_edges)
      : vertex_count_(vertex_count), half_edges_(std::move(half_edges)) {
    validate();
    degrees_.assign(static_cast<size_t>(vertex_count_), 0);
    out_.assign(static_cast<size_t>(vertex_count_), {});
    for (size_t e = 0; e < half_edges_.size(); ++e) {
      ++degrees_[static_cast<size_t>(half_edges_[e].origin)];
      out_[static_cast<size_t>(half_edges_[e].origin)].push_back(
          static_cast<int>(e));
    }
    check_connected();
  }

  static HalfEdgeGraph from_edges(
      int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<HalfEdge> hes;
    hes.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
      int e = static_cast<int>(hes.size());
      hes.push_back({u, e + 1});
      hes.push_back({v, e});
    }
    return HalfEdgeGraph(vertex_count, std::move(hes));
  }

  int vertex_count() const { return vertex_count_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  int origin(int e) const { return half_edges_[static_cast<size_t>(e)].origin; }
  int partner(int e) const {
    return half_edges_[static_cast<size_t>(e)].partner;
  }
  int terminus(int e) const { return origin(partner(e)); }
  int degree(int v) const { return degrees_[static_cast<size_t>(v)]; }
  // Darts leaving v.
  const std::vector<int>& darts_at(int v) const {
    return out_[static_cast<size_t>(v)];
  }

  // Undirected edge list (one entry per dart pair; self-loops appear once).
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (size_t e = 0; e < half_edges_.size(); ++e) {
      if (static_cast<int>(e) < half_edges_[e].partner)
        edges.emplace_back(half_edges_[e].origin,
                           origin(half_edges_[e].partner));
    }
    return edges;
  }

 private:
  void validate() const {
    if (vertex_count_ < 1)
      throw std::invalid_argument("graph: need at least one vertex");
    const int m = static_cast<int>(half_edges_.size());
    if (m % 2 != 0)
      throw std::invalid_argument("graph: odd number of half-edges");
    for (int e = 0; e < m; ++e) {
      const HalfEdge& he = half_edges_[static_cast<size_t>(e)];
      if (he.origin < 0 || he.origin >= vertex_count_)
        throw std::invalid_argument("graph: half-edge origin out of range");
      if (he.partner < 0 || he.partner >= m)
        throw std::invalid_argument("graph: half-edge partner out of range");
      if (he.partner == e)
        throw std::invalid_argument("graph: pairing must be fixed-point-free");
      if (half_edges_[static_cast<size_t>(he.partner)].partner != e)
        throw std::invalid_argument("graph: pairing must be an involution");
    }
  }

  void check_connected() const {
    std::vector<char> seen(static_cast<size_t>(vertex_count_), 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int e : out_[static_cast<size_t>(u)]) {
        int w = terminus(e);
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          ++reached;
          queue.push(w);
        }
      }
    }
    if (reached != vertex_count_)
      throw std::invalid_argument("graph: must be connected");
  }

  int vertex_count_;
  std::vector<HalfEdge> half_edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> out_;
};

// Dense integer matrix (Laplacians, characteristic-polynomial work).
class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}
  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  int size() const { return n_; }
  BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const BigInt& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }
  IntMatrix mul(const IntMatrix& o) const {
    IntMatrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const BigInt& aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }
  BigInt trace() const {
    BigInt t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }
  std::vector<std::vector<double>> to_double() const {
    std::vector<std::vector<double>> m(
        static_cast<size_t>(n_), std::vector<double>(static_cast<size_t>(n_)));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j).get_d();
    return m;
  }

 private:
  int n_;
  std::vector<BigInt> a_;
};

enum class ModelKind { Finite, Cycle, Lattice };

// A rooted, vertex-countable model: a materialized finite graph, a cycle
// (finite, vertex-transitive), or the integer lattice Z^d (infinite,
// vertex-transitive, kept symbolic).
class GraphModel {
 public:
  static GraphModel cycle(int n);
  static GraphModel lattice(int d) {
    if (d < 1)
      throw std::invalid_argument("lattice: dimension must be positive");
    GraphModel m;
    m.kind_ = ModelKind::Lattice;
    m.param_ = d;
    m.transitive_ = true;
    return m;
  }
  static GraphModel finite(HalfEdgeGraph g, int root = 0,
                           bool known_transitive = false) {
    if (root < 0 || root >= g.vertex_count())
      throw std::invalid_argument("model: root out of range");
    GraphModel m;
    m.kind_ = ModelKind::Finite;
    m.graph_ = std::make_shared<HalfEdgeGraph>(std::move(g));
    m.root_ = root;
    m.transitive_ = known_transitive;
    return m;
  }

  ModelKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != ModelKind::Lattice; }
  int lattice_dim() const {
    if (kind_ != ModelKind::Lattice)
      throw std::logic_error("model: not a lattice");
    return param_;
  }
  int cycle_length() const {
    if (kind_ != ModelKind::Cycle) throw std::logic_error("model: not a cycle");
    return param_;
  }
  const HalfEdgeGraph& graph() const {
    if (!graph_) throw unsupported_error("model: infinite lattice has no materialized graph");
    return *graph_;
  }
  int root() const {
    if (!is_finite()) return 0;  // lattice root is the origin
    return root_;
  }
  bool known_transitive() const { return transitive_; }

  // Degree of the root (2d on Z^d, 2 on cycles).
  int root_degree() const {
    if (kind_ == ModelKind::Lattice) return 2 * param_;
    return graph_->degree(root_);
  }

  std::string describe() const {
    switch (kind_) {
      case ModelKind::Cycle:
        return "cycle:" + std::to_string(param_);
      case ModelKind::Lattice:
        return "zd:" + std::to_string(param_);
      default:
        return "finite:" + std::to_string(graph_->vertex_count()) + "v";
    }
  }

 private:
  ModelKind kind_ = ModelKind::Finite;
  int param_ = 0;  // n for Cycle, d for Lattice
  std::shared_ptr<const HalfEdgeGraph> graph_;
  int root_ = 0;
  bool transitive_ = false;
};

inline GraphModel build_cycle(int n) { return GraphModel::cycle(n); }
inline GraphModel build_lattice(int d) { return GraphModel::lattice(d); }

inline GraphModel GraphModel::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  GraphModel m;
  m.kind_ = ModelKind::Cycle;
  m.param_ = n;
  m.graph_ = std::make_shared<HalfEdgeGraph>(
      HalfEdgeGraph::from_edges(n, edges));
  m.root_ = 0;
  m.transitive_ = true;
  return m;
}

// Cartesian (box) product of two finite graphs: vertex set V_f x V_g, a dart
// per (dart of f) x (vertex of g) and per (vertex of f) x (dart of g).
inline HalfEdgeGraph product_graph(const HalfEdgeGraph& f,
                                   const HalfEdgeGraph& g) {
  const int nf = f.vertex_count(), ng = g.vertex_count();
  const int mf = static_cast<int>(f.half_edges().size());
  std::vector<HalfEdge> hes;
  hes.reserve(static_cast<size_t>(mf) * ng +
              static_cast<size_t>(nf) * g.half_edges().size());
  // Block 1: f-darts, indexed e * ng + y.
  for (int e = 0; e < mf; ++e)
    for (int y = 0; y < ng; ++y)
      hes.push_back({f.origin(e) * ng + y, f.partner(e) * ng + y});
  const int base = mf * ng;
  // Block 2: g-darts, indexed base + x * mg + e.
  const int mg = static_cast<int>(g.half_edges().size());
  for (int x = 0; x < nf; ++x)
    for (int e = 0; e < mg; ++e)
      hes.push_back({x * ng + g.origin(e), base + x * mg + g.partner(e)});
  return HalfEdgeGraph(nf * ng, std::move(hes));
}

// Box product of models. Finite factors materialize; lattice factors merge
// symbolically into a higher-dimensional lattice. Mixing finite and lattice
// factors is not supported.
inline GraphModel build_product(const std::vector<GraphModel>& factors) {
  if (factors.empty())
    throw std::invalid_argument("product: need at least one factor");
  bool any_lattice = false, any_finite = false;
  for (const auto& m : factors)
    (m.kind() == ModelKind::Lattice ? any_lattice : any_finite) = true;
  if (any_lattice && any_finite)
    throw unsupported_error(
        "product: mixing finite and lattice factors is not supported");
  if (any_lattice) {
    int d = 0;
    for (const auto& m : factors) d += m.lattice_dim();
    return GraphModel::lattice(d);
  }
  HalfEdgeGraph acc = factors[0].graph();
  int root = factors[0].root();
  bool transitive = factors[0].known_transitive();
  for (size_t i = 1; i < factors.size(); ++i) {
    const HalfEdgeGraph& next = factors[i].graph();
    root = root * next.vertex_count() + factors[i].root();
    transitive = transitive && factors[i].known_transitive();
    acc = product_graph(acc, next);
  }
  return GraphModel::finite(std::move(acc), root, transitive);
}

// Combinatorial Laplacian: (Delta)_uu = deg(u), (Delta)_uv = -#edges(u,v).
// Self-loops cancel between the two terms.
inline IntMatrix laplacian(const GraphModel& m) {
  if (!m.is_finite())
    throw unsupported_error("laplacian: infinite lattice has no dense matrix");
  const HalfEdgeGraph& g = m.graph();
  IntMatrix L(g.vertex_count());
  for (size_t e = 0; e < g.half_edges().size(); ++e) {
    int u = g.origin(static_cast<int>(e));
    int v = g.terminus(static_cast<int>(e));
    L.at(u, u) += 1;
    L.at(u, v) -= 1;
  }
  return L;
}

namespace detail {

// Points of the closed L1 ball of the given radius in Z^d, with neighbor
// indices (-1 where the neighbor leaves the ball). Coordinates are encoded
// in base (2*radius + 1) for the lookup map.
struct LatticeBall {
  std::vector<std::vector<int>> points;
  std::vector<std::vector<int>> neighbors;  // 2d entries per point
  int origin_index = -1;
};

inline LatticeBall lattice_ball(int d, int radius) {
  LatticeBall ball;
  std::map<std::vector<int>, int> index;
  std::vector<int> coord(static_cast<size_t>(d), 0);
  // Enumerate coordinates with |c_1| + ... + |c_d| <= radius.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == d) {
      index.emplace(coord, static_cast<int>(ball.points.size()));
      ball.points.push_back(coord);
      return;
    }
    for (int v = -remaining; v <= remaining; ++v) {
      coord[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, remaining - std::abs(v));
    }
  };
  rec(rec, 0, radius);
  ball.origin_index = index.at(std::vector<int>(static_cast<size_t>(d), 0));
  ball.neighbors.assign(ball.points.size(), {});
  for (size_t p = 0; p < ball.points.size(); ++p) {
    auto& nbrs = ball.neighbors[p];
    nbrs.reserve(static_cast<size_t>(2 * d));
    for (int axis = 0; axis < d; ++axis) {
      for (int step : {-1, +1}) {
        std::vector<int> q = ball.points[p];
        q[static_cast<size_t>(axis)] += step;
        auto it = index.find(q);
        nbrs.push_back(it == index.end() ? -1 : it->second);
      }
    }
  }
  return ball;
}

}  // namespace detail

// <delta_root, Delta^k delta_root> on the L1 ball of the given radius, with
// the diagonal held at 2d everywhere. For radius >= k this equals the true
// lattice moment: a k-step walk from the origin never leaves the ball.
inline BigInt lattice_moment_ball(int d, int k, int radius) {
  if (d < 1 || k < 0 || radius < 0)
    throw std::invalid_argument("lattice_moment_ball: bad arguments");
  detail::LatticeBall ball = detail::lattice_ball(d, radius);
  std::vector<BigInt> v(ball.points.size(), 0);
  v[static_cast<size_t>(ball.origin_index)] = 1;
  const BigInt diag = 2 * d;
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> w(v.size(), 0);
    for (size_t p = 0; p < v.size(); ++p) {
      if (v[p] == 0) continue;
      w[p] += diag * v[p];
      for (int nb : ball.neighbors[p])
        if (nb >= 0) w[static_cast<size_t>(nb)] -= v[p];
    }
    v.swap(w);
  }
  return v[static_cast<size_t>(ball.origin_index)];
}

// k-th moment of the rooted spectral measure, <delta_root, Delta^k delta_root>,
// computed exactly.
inline BigInt spectral_moment(const GraphModel& m, int k) {
  if (k < 0) throw std::invalid_argument("spectral_moment: k must be >= 0");
  if (!m.is_finite()) return lattice_moment_ball(m.lattice_dim(), k, k);
  const HalfEdgeGraph& g = m.graph();
  const int n = g.vertex_count();
  std::vector<BigInt> v(static_cast<size_t>(n), 0);
  v[static_cast<size_t>(m.root())] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> w(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      const BigInt& vu = v[static_cast<size_t>(u)];
      if (vu == 0) continue;
      w[static_cast<size_t>(u)] += BigInt(g.degree(u)) * vu;
      for (int e : g.darts_at(u)) w[static_cast<size_t>(g.terminus(e))] -= vu;
    }
    v.swap(w);
  }
  return v[static_cast<size_t>(m.root())];
}

// Whether a and b have identical rooted moments of order 0..n (equivalently,
// identical balls of radius about n/2 around the roots, as seen by the
// Laplacian).
inline bool n_similar(const GraphModel& a, const GraphModel& b, int n) {
  if (n < 0) throw std::invalid_argument("n_similar: n must be >= 0");
  for (int k = 0; k <= n; ++k)
    if (spectral_moment(a, k) != spectral_moment(b, k)) return false;
  return true;
}

// BFS distance between two vertices of a finite model. Agrees with the least
// n such that <delta_v, Delta^n delta_u> != 0.
inline int graph_distance(const GraphModel& m, int u, int v) {
  if (!m.is_finite())
    throw unsupported_error("graph_distance: finite models only");
  const HalfEdgeGraph& g = m.graph();
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("graph_distance: vertex out of range");
  if (u == v) return 0;
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  std::queue<int> queue;
  dist[static_cast<size_t>(u)] = 0;
  queue.push(u);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    for (int e : g.darts_at(x)) {
      int y = g.terminus(e);
      if (dist[static_cast<size_t>(y)] < 0) {
        dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
        if (y == v) return dist[static_cast<size_t>(y)];
        queue.push(y);
      }
    }
  }
  return -1;  // unreachable: graphs are connected by construction
}

}  // namespace gzeta

#endif  // GZETA_GRAPH_HPP
