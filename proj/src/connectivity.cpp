#include "tutte/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace tutte {
namespace {

using Adj = std::vector<std::vector<VertexId>>;

std::vector<VertexId> support_of(const Adj& adj) {
  std::vector<VertexId> s;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (!adj[v].empty()) s.push_back(static_cast<VertexId>(v));
  return s;
}

// Connectivity of the subgraph induced by in[]; empty subgraphs count as
// connected.
bool connected_subset(const Adj& adj, const std::vector<char>& in) {
  VertexId start = kNone;
  std::int32_t want = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!in[v]) continue;
    ++want;
    if (start == kNone) start = static_cast<VertexId>(v);
  }
  if (want == 0) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<VertexId> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  std::int32_t got = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : adj[static_cast<std::size_t>(v)]) {
      if (!in[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)])
        continue;
      seen[static_cast<std::size_t>(u)] = 1;
      ++got;
      stack.push_back(u);
    }
  }
  return got == want;
}

// Articulation vertices of the subgraph induced by in[], iteratively
// (recursion depth would not survive large instances).  Disconnected
// input is handled per component.
std::vector<VertexId> articulation_points(const Adj& adj,
                                          const std::vector<char>& in) {
  std::size_t n = adj.size();
  std::vector<std::int32_t> disc(n, -1), low(n, 0), it(n, 0);
  std::vector<VertexId> par(n, kNone);
  std::vector<char> artic(n, 0);
  std::int32_t timer = 0;
  std::vector<VertexId> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (!in[s] || disc[s] >= 0) continue;
    VertexId root = static_cast<VertexId>(s);
    std::int32_t root_children = 0;
    disc[s] = low[s] = timer++;
    stack.assign(1, root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      auto vi = static_cast<std::size_t>(v);
      if (it[vi] < static_cast<std::int32_t>(adj[vi].size())) {
        VertexId u = adj[vi][static_cast<std::size_t>(it[vi]++)];
        auto ui = static_cast<std::size_t>(u);
        if (!in[ui] || u == par[vi]) continue;
        if (disc[ui] < 0) {
          par[ui] = v;
          disc[ui] = low[ui] = timer++;
          if (v == root) ++root_children;
          stack.push_back(u);
        } else {
          low[vi] = std::min(low[vi], disc[ui]);
        }
      } else {
        stack.pop_back();
        VertexId p = par[vi];
        if (p != kNone) {
          auto pi = static_cast<std::size_t>(p);
          low[pi] = std::min(low[pi], low[vi]);
          if (p != root && low[vi] >= disc[pi]) artic[pi] = 1;
        }
      }
    }
    if (root_children >= 2) artic[s] = 1;
  }
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < n; ++v)
    if (artic[v]) out.push_back(static_cast<VertexId>(v));
  return out;
}

std::vector<char> membership(const Adj& adj) {
  std::vector<char> in(adj.size(), 0);
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (!adj[v].empty()) in[v] = 1;
  return in;
}

// Interior face containing both v and w, if any.
FaceId common_interior_face(const PlanarGraph& g, VertexId v, VertexId w) {
  NodeId start = g.any_node_of(v);
  NodeId c = start;
  do {
    if (!g.is_gap_node(c)) {
      DartId d = g.dart_at(c);
      if (!g.is_outer_dart(d)) {
        for (VertexId x : g.face_vertices(d)) {
          if (x == w) return g.face_left(d);
        }
      }
    }
    c = g.ring_next(c);
  } while (c != start);
  return kNone;
}

}  // namespace

std::vector<std::vector<VertexId>> piece_adjacency(const PlanarGraph& g,
                                                   VertexId boundary_start) {
  Adj adj(static_cast<std::size_t>(g.vertex_count()));
  TUTTE_CHECK(g.is_exterior(boundary_start), Errc::NotExterior,
              "piece start must be exterior");
  std::vector<char> seen(adj.size(), 0);
  std::vector<VertexId> queue{boundary_start};
  seen[static_cast<std::size_t>(boundary_start)] = 1;
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    NodeId start = g.any_node_of(v);
    NodeId c = start;
    do {
      if (!g.is_gap_node(c)) {
        VertexId u = g.target(g.dart_at(c));
        adj[static_cast<std::size_t>(v)].push_back(u);
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          queue.push_back(u);
        }
      }
      c = g.ring_next(c);
    } while (c != start);
  }
  return adj;
}

bool adjacency_3connected(const Adj& adj) {
  std::vector<VertexId> sup = support_of(adj);
  if (sup.size() < 4) return false;
  std::vector<char> in = membership(adj);
  if (!connected_subset(adj, in)) return false;
  for (VertexId v : sup) {
    auto vi = static_cast<std::size_t>(v);
    in[vi] = 0;
    bool ok = connected_subset(adj, in) && articulation_points(adj, in).empty();
    in[vi] = 1;
    if (!ok) return false;
  }
  return true;
}

bool is_2connected(const PlanarGraph& g, VertexId boundary_start) {
  Adj adj = piece_adjacency(g, boundary_start);
  std::vector<char> in = membership(adj);
  if (support_of(adj).size() < 3) return false;
  return connected_subset(adj, in) && articulation_points(adj, in).empty();
}

bool is_internally_3connected(const PlanarGraph& g, VertexId boundary_start) {
  Adj adj = piece_adjacency(g, boundary_start);
  auto apex = static_cast<std::size_t>(g.vertex_count());
  adj.resize(apex + 1);
  for (VertexId v : g.outer_walk(boundary_start)) {
    adj[apex].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(static_cast<VertexId>(apex));
  }
  return adjacency_3connected(adj);
}

void check_corner_set(const PlanarGraph& g, const CornerSet& c) {
  TUTTE_CHECK(c.corners.size() >= 3, Errc::PreconditionViolated,
              "need at least three corners");
  TUTTE_CHECK(g.is_exterior(c.corners.front()), Errc::PreconditionViolated,
              "corner not exterior");
  std::vector<VertexId> walk = g.outer_walk(c.corners.front());
  std::vector<std::int32_t> pos(static_cast<std::size_t>(g.vertex_count()),
                                kNone);
  for (std::size_t i = 0; i < walk.size(); ++i)
    pos[static_cast<std::size_t>(walk[i])] = static_cast<std::int32_t>(i);
  std::int32_t prev = -1;
  for (VertexId v : c.corners) {
    std::int32_t p = pos[static_cast<std::size_t>(v)];
    TUTTE_CHECK(p != kNone, Errc::PreconditionViolated,
                "corner not on this boundary");
    TUTTE_CHECK(p > prev, Errc::PreconditionViolated,
                "corners must be distinct and in ccw order");
    prev = p;
  }
}

bool is_corner_3connected(const PlanarGraph& g, const CornerSet& c) {
  check_corner_set(g, c);
  Adj adj = piece_adjacency(g, c.corners.front());
  auto apex = static_cast<std::size_t>(g.vertex_count());
  adj.resize(apex + 1);
  for (VertexId v : c.corners) {
    adj[apex].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(static_cast<VertexId>(apex));
  }
  return adjacency_3connected(adj);
}

CuttingSetReport cutting_pairs(const PlanarGraph& g, VertexId boundary_start) {
  Adj adj = piece_adjacency(g, boundary_start);
  std::vector<char> in = membership(adj);
  CuttingSetReport report;
  std::vector<std::pair<VertexId, VertexId>> raw;
  for (VertexId v : support_of(adj)) {
    auto vi = static_cast<std::size_t>(v);
    in[vi] = 0;
    for (VertexId w : articulation_points(adj, in)) {
      raw.emplace_back(std::min(v, w), std::max(v, w));
    }
    in[vi] = 1;
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (auto [v, w] : raw) {
    FaceId f = common_interior_face(g, v, w);
    TUTTE_IASSERT(f != kNone, "cutting pair without interior witness face");
    report.pairs.push_back({v, w, f});
  }
  return report;
}

std::vector<CuttingTriplet> cutting_triplets(const PlanarGraph& g,
                                             VertexId boundary_start,
                                             std::int32_t max_n) {
  Adj adj = piece_adjacency(g, boundary_start);
  std::vector<VertexId> sup = support_of(adj);
  TUTTE_CHECK(static_cast<std::int32_t>(sup.size()) <= max_n, Errc::TooLarge,
              "triplet enumeration limited to small pieces");

  // Candidate triples are pairwise cofacial (any separating noose walks
  // through a common face between consecutive triple vertices).
  std::unordered_map<std::int64_t, FaceId> pair_face;
  auto key = [&](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::int64_t>(a) * (g.vertex_count() + 1) + b;
  };
  std::vector<char> exterior(adj.size(), 0);
  for (VertexId v : g.outer_walk(boundary_start))
    exterior[static_cast<std::size_t>(v)] = 1;
  std::vector<char> face_seen;
  for (VertexId v : sup) {
    NodeId start = g.any_node_of(v);
    NodeId c = start;
    do {
      if (!g.is_gap_node(c)) {
        DartId d = g.dart_at(c);
        if (!g.is_outer_dart(d)) {
          FaceId f = g.face_left(d);
          if (static_cast<std::size_t>(f) >= face_seen.size())
            face_seen.resize(static_cast<std::size_t>(f) + 1, 0);
          if (!face_seen[static_cast<std::size_t>(f)]) {
            face_seen[static_cast<std::size_t>(f)] = 1;
            std::vector<VertexId> fv = g.face_vertices(d);
            for (std::size_t i = 0; i < fv.size(); ++i)
              for (std::size_t j = i + 1; j < fv.size(); ++j)
                pair_face.emplace(key(fv[i], fv[j]), f);
          }
        }
      }
      c = g.ring_next(c);
    } while (c != start);
  }
  auto cofacial = [&](VertexId a, VertexId b, FaceId* f) {
    auto it = pair_face.find(key(a, b));
    if (it != pair_face.end()) {
      *f = it->second;
      return true;
    }
    if (exterior[static_cast<std::size_t>(a)] &&
        exterior[static_cast<std::size_t>(b)]) {
      *f = kNone;
      return true;
    }
    return false;
  };

  std::vector<char> in = membership(adj);
  std::vector<CuttingTriplet> out;
  for (std::size_t i = 0; i < sup.size(); ++i) {
    for (std::size_t j = i + 1; j < sup.size(); ++j) {
      CuttingTriplet t;
      t.a = sup[i];
      t.b = sup[j];
      if (!cofacial(t.a, t.b, &t.face_ab)) continue;
      for (std::size_t l = j + 1; l < sup.size(); ++l) {
        t.c = sup[l];
        if (!cofacial(t.b, t.c, &t.face_bc)) continue;
        if (!cofacial(t.c, t.a, &t.face_ca)) continue;
        auto ai = static_cast<std::size_t>(t.a);
        auto bi = static_cast<std::size_t>(t.b);
        auto ci = static_cast<std::size_t>(t.c);
        in[ai] = in[bi] = in[ci] = 0;
        bool rest = false;
        for (VertexId v : sup)
          if (in[static_cast<std::size_t>(v)]) {
            rest = true;
            break;
          }
        bool cuts = rest && !connected_subset(adj, in);
        in[ai] = in[bi] = in[ci] = 1;
        if (cuts) out.push_back(t);
      }
    }
  }
  return out;
}

void classify_pair_sides(const PlanarGraph& g, const CornerSet& c,
                         CuttingSetReport& report) {
  check_corner_set(g, c);
  std::vector<VertexId> walk = g.outer_walk(c.corners.front());
  std::vector<std::int32_t> pos(static_cast<std::size_t>(g.vertex_count()),
                                kNone);
  for (std::size_t i = 0; i < walk.size(); ++i)
    pos[static_cast<std::size_t>(walk[i])] = static_cast<std::int32_t>(i);
  auto len = static_cast<std::int32_t>(walk.size());
  auto k = static_cast<std::int32_t>(c.corners.size());

  report.side_of.assign(report.pairs.size(), kNone);
  for (std::size_t p = 0; p < report.pairs.size(); ++p) {
    std::int32_t pv = pos[static_cast<std::size_t>(report.pairs[p].v)];
    std::int32_t pw = pos[static_cast<std::size_t>(report.pairs[p].w)];
    if (pv == kNone || pw == kNone) continue;
    for (std::int32_t i = 0; i < k; ++i) {
      std::int32_t from =
          pos[static_cast<std::size_t>(c.corners[static_cast<std::size_t>(i)])];
      std::int32_t to = pos[static_cast<std::size_t>(
          c.corners[static_cast<std::size_t>((i + 1) % k)])];
      std::int32_t span = (to - from + len) % len;
      std::int32_t dv = (pv - from + len) % len;
      std::int32_t dw = (pw - from + len) % len;
      if (dv <= span && dw <= span) {
        report.side_of[p] = i;
        break;
      }
    }
  }
}

bool check_skip_corner(const PlanarGraph& g, const CornerSet& c,
                       VertexId dropped) {
  check_corner_set(g, c);
  TUTTE_CHECK(c.corners.size() >= 4, Errc::PreconditionViolated,
              "need at least four corners to drop one");
  auto k = static_cast<std::int32_t>(c.corners.size());
  std::int32_t j = kNone;
  for (std::int32_t i = 1; i < k; ++i)
    if (c.corners[static_cast<std::size_t>(i)] == dropped) j = i;
  TUTTE_CHECK(j != kNone, Errc::PreconditionViolated,
              "dropped vertex must be a non-start corner");

  std::vector<VertexId> walk = g.outer_walk(c.corners.front());
  std::vector<std::int32_t> pos(static_cast<std::size_t>(g.vertex_count()),
                                kNone);
  for (std::size_t i = 0; i < walk.size(); ++i)
    pos[static_cast<std::size_t>(walk[i])] = static_cast<std::int32_t>(i);
  auto len = static_cast<std::int32_t>(walk.size());
  std::int32_t from = pos[static_cast<std::size_t>(
      c.corners[static_cast<std::size_t>(j - 1)])];
  std::int32_t to = pos[static_cast<std::size_t>(
      c.corners[static_cast<std::size_t>((j + 1) % k)])];
  std::int32_t span = (to - from + len) % len;

  for (const CuttingPair& p : cutting_pairs(g, c.corners.front()).pairs) {
    std::int32_t pv = pos[static_cast<std::size_t>(p.v)];
    std::int32_t pw = pos[static_cast<std::size_t>(p.w)];
    if (pv == kNone || pw == kNone) continue;
    std::int32_t dv = (pv - from + len) % len;
    std::int32_t dw = (pw - from + len) % len;
    if (dv <= span && dw <= span) return false;
  }
  return true;
}

}  // namespace tutte
