#include "tutte/planar_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>

namespace tutte {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

PlanarGraph::PlanarGraph(std::int32_t n,
                         const std::vector<std::vector<VertexId>>& ccw_neighbors,
                         VertexId outer_from, VertexId outer_to) {
  TUTTE_CHECK(n >= 3, Errc::BadInput, "need at least 3 vertices");
  TUTTE_CHECK(static_cast<std::int32_t>(ccw_neighbors.size()) == n,
              Errc::BadInput, "rotation table size != n");
  n_ = n;
  gap_node_.assign(n, kNone);
  vert_node_.assign(n, kNone);

  // Edge ids in order of first appearance; dart 2e points from the vertex
  // that listed the edge first.
  std::unordered_map<std::uint64_t, EdgeId> edge_ids;
  std::vector<int> seen_count;
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : ccw_neighbors[v]) {
      TUTTE_CHECK(w >= 0 && w < n && w != v, Errc::BadInput,
                  "bad neighbor entry");
      std::uint64_t key = pair_key(v, w);
      auto it = edge_ids.find(key);
      if (it == edge_ids.end()) {
        EdgeId e = static_cast<EdgeId>(edge_alive_.size());
        edge_ids.emplace(key, e);
        edge_alive_.push_back(1);
        edge_virtual_.push_back(0);
        dart_target_.push_back(w);  // dart 2e: v -> w
        dart_target_.push_back(v);  // dart 2e+1: w -> v
        dart_node_.push_back(kNone);
        dart_node_.push_back(kNone);
        dart_face_.push_back(kNone);
        dart_face_.push_back(kNone);
        seen_count.push_back(1);
      } else {
        seen_count[it->second] += 1;
      }
    }
  }
  std::int32_t m = edge_limit();
  for (EdgeId e = 0; e < m; ++e) {
    TUTTE_CHECK(seen_count[e] == 2, Errc::BadInput,
                "edge must appear in exactly two rotation lists");
  }

  // Rotation rings in list order.
  for (VertexId v = 0; v < n; ++v) {
    TUTTE_CHECK(!ccw_neighbors[v].empty(), Errc::Disconnected,
                "isolated vertex");
    NodeId prev = kNone, first = kNone;
    for (VertexId w : ccw_neighbors[v]) {
      EdgeId e = edge_ids.at(pair_key(v, w));
      DartId d = (dart_target_[2 * e] == w && dart_node_[2 * e] == kNone)
                     ? 2 * e
                     : 2 * e + 1;
      TUTTE_CHECK(dart_target_[d] == w && dart_node_[d] == kNone,
                  Errc::BadInput, "duplicate edge in rotation lists");
      NodeId nd = new_node(v, d);
      dart_node_[d] = nd;
      if (prev == kNone) {
        first = nd;
      } else {
        rot_next_[prev] = nd;
        rot_prev_[nd] = prev;
      }
      prev = nd;
    }
    rot_next_[prev] = first;
    rot_prev_[first] = prev;
    vert_node_[v] = first;
  }

  // Connectivity.
  {
    std::vector<char> reach(n, 0);
    std::vector<VertexId> stack{0};
    reach[0] = 1;
    std::int32_t cnt = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++cnt;
      NodeId nd = vert_node_[v];
      do {
        VertexId w = target(rot_dart_[nd]);
        if (!reach[w]) {
          reach[w] = 1;
          stack.push_back(w);
        }
        nd = rot_next_[nd];
      } while (nd != vert_node_[v]);
    }
    TUTTE_CHECK(cnt == n, Errc::Disconnected, "graph is not connected");
  }

  // Face orbits and the Euler check.
  for (DartId d = 0; d < 2 * m; ++d) {
    if (dart_face_[d] != kNone) continue;
    FaceId f = new_face(d);
    DartId cur = d;
    do {
      dart_face_[cur] = f;
      cur = face_next(cur);
    } while (cur != d);
  }
  TUTTE_CHECK(n - m + face_limit() == 2, Errc::NotPlanar,
              "rotation system is not a sphere embedding");

  // Outer face: orbit on the left of dart outer_from -> outer_to.
  auto outer_it = edge_ids.find(pair_key(outer_from, outer_to));
  TUTTE_CHECK(outer_it != edge_ids.end(), Errc::BadOuterFace,
              "outer edge not in graph");
  EdgeId oe = outer_it->second;
  DartId od = (target(2 * oe) == outer_to) ? 2 * oe : 2 * oe + 1;
  std::vector<DartId> orbit;
  {
    DartId cur = od;
    do {
      orbit.push_back(cur);
      cur = face_next(cur);
    } while (cur != od);
  }
  for (DartId d : orbit) {
    VertexId v = origin(d);
    TUTTE_CHECK(gap_node_[v] == kNone, Errc::BadOuterFace,
                "outer walk revisits a vertex");
    NodeId g = new_node(v, kNone);
    NodeId pos = dart_node_[d];
    NodeId nxt = rot_next_[pos];
    rot_next_[pos] = g;
    rot_prev_[g] = pos;
    rot_next_[g] = nxt;
    rot_prev_[nxt] = g;
    gap_node_[v] = g;
  }
}

std::int32_t PlanarGraph::alive_edge_count() const {
  std::int32_t c = 0;
  for (std::int32_t a : edge_alive_) c += a;
  return c;
}

std::int32_t PlanarGraph::degree(VertexId v) const {
  NodeId start = any_node_of(v);
  std::int32_t c = 0;
  NodeId nd = start;
  do {
    if (rot_dart_[nd] != kNone) ++c;
    nd = rot_next_[nd];
  } while (nd != start);
  return c;
}

void PlanarGraph::mark_edge_real(EdgeId e) {
  journal_.set(edge_virtual_, e, 0);
}

DartId PlanarGraph::dart_between(VertexId u, VertexId w) const {
  NodeId start = any_node_of(u);
  NodeId nd = start;
  do {
    DartId d = rot_dart_[nd];
    if (d != kNone && target(d) == w) return d;
    nd = rot_next_[nd];
  } while (nd != start);
  return kNone;
}

DartId PlanarGraph::rho_next(DartId d) const {
  NodeId nd = rot_next_[dart_node_[d]];
  while (rot_dart_[nd] == kNone) nd = rot_next_[nd];
  return rot_dart_[nd];
}

DartId PlanarGraph::rho_prev(DartId d) const {
  NodeId nd = rot_prev_[dart_node_[d]];
  while (rot_dart_[nd] == kNone) nd = rot_prev_[nd];
  return rot_dart_[nd];
}

DartId PlanarGraph::outer_dart_at(VertexId v) const {
  NodeId g = gap_node_[v];
  TUTTE_CHECK(g != kNone, Errc::NotExterior, "vertex is interior");
  NodeId nd = rot_prev_[g];
  TUTTE_IASSERT(rot_dart_[nd] != kNone, "adjacent gap nodes");
  return rot_dart_[nd];
}

DartId PlanarGraph::after_gap_dart(VertexId v) const {
  NodeId g = gap_node_[v];
  TUTTE_CHECK(g != kNone, Errc::NotExterior, "vertex is interior");
  NodeId nd = rot_next_[g];
  TUTTE_IASSERT(rot_dart_[nd] != kNone, "adjacent gap nodes");
  return rot_dart_[nd];
}

std::vector<VertexId> PlanarGraph::outer_walk(VertexId start) const {
  TUTTE_CHECK(is_exterior(start), Errc::NotExterior, "start is interior");
  std::vector<VertexId> out;
  VertexId v = start;
  do {
    out.push_back(v);
    v = ccw_boundary_next(v);
    TUTTE_IASSERT(static_cast<std::int32_t>(out.size()) <= n_,
                  "outer walk does not close");
  } while (v != start);
  return out;
}

DartId PlanarGraph::dart_at_face(VertexId v, FaceId f) const {
  NodeId start = any_node_of(v);
  NodeId nd = start;
  do {
    DartId d = rot_dart_[nd];
    if (d != kNone && !is_outer_dart(d) && dart_face_[d] == f) return d;
    nd = rot_next_[nd];
  } while (nd != start);
  return kNone;
}

std::vector<DartId> PlanarGraph::face_darts(DartId d) const {
  std::vector<DartId> out;
  DartId cur = d;
  do {
    out.push_back(cur);
    cur = face_next(cur);
    TUTTE_IASSERT(out.size() <= dart_target_.size(), "face walk runaway");
  } while (cur != d);
  return out;
}

std::vector<VertexId> PlanarGraph::face_vertices(DartId d) const {
  std::vector<VertexId> out;
  for (DartId x : face_darts(d)) out.push_back(origin(x));
  return out;
}

NodeId PlanarGraph::new_node(VertexId v, DartId d) {
  NodeId nd = static_cast<NodeId>(rot_next_.size());
  rot_next_.push_back(kNone);
  rot_prev_.push_back(kNone);
  rot_dart_.push_back(d);
  rot_vert_.push_back(v);
  return nd;
}

void PlanarGraph::link_after(NodeId pos, NodeId nd) {
  NodeId nxt = rot_next_[pos];
  journal_.set(rot_next_, pos, nd);
  journal_.set(rot_prev_, nd, pos);
  journal_.set(rot_next_, nd, nxt);
  journal_.set(rot_prev_, nxt, nd);
}

void PlanarGraph::unlink_node(NodeId nd) {
  NodeId p = rot_prev_[nd], nx = rot_next_[nd];
  TUTTE_IASSERT(p != nd, "unlinking the last ring node");
  journal_.set(rot_next_, p, nx);
  journal_.set(rot_prev_, nx, p);
}

FaceId PlanarGraph::new_face(DartId rep) {
  FaceId f = static_cast<FaceId>(face_rep_dart_.size());
  face_rep_dart_.push_back(rep);
  return f;
}

EdgeId PlanarGraph::new_edge(VertexId u, VertexId w, bool is_virtual) {
  EdgeId e = static_cast<EdgeId>(edge_alive_.size());
  edge_alive_.push_back(0);
  edge_virtual_.push_back(is_virtual ? 1 : 0);
  dart_target_.push_back(w);
  dart_target_.push_back(u);
  dart_node_.push_back(kNone);
  dart_node_.push_back(kNone);
  dart_face_.push_back(kNone);
  dart_face_.push_back(kNone);
  journal_.set(edge_alive_, e, 1);
  return e;
}

void PlanarGraph::relabel_face_walk(DartId start, FaceId f) {
  DartId cur = start;
  do {
    journal_.set(dart_face_, cur, f);
    cur = face_next(cur);
  } while (cur != start);
}

AddedEdge PlanarGraph::add_edge_in_face(DartId du, DartId dw,
                                        bool is_virtual) {
  VertexId u = origin(du), w = origin(dw);
  TUTTE_IASSERT(u != w, "edge endpoints coincide");
  TUTTE_CHECK(!is_outer_dart(du) && !is_outer_dart(dw), Errc::NotOnFace,
              "corner dart is exterior");
  FaceId f = dart_face_[du];
  TUTTE_CHECK(dart_face_[dw] == f, Errc::NotOnFace,
              "darts bound different faces");
  TUTTE_CHECK(target(du) != w && target(dw) != u,
              Errc::AlreadyAdjacentOnFace,
              "endpoints consecutive along the face");

  EdgeId e = new_edge(u, w, is_virtual);
  DartId a = dart_of(e, 0), b = dart_of(e, 1);
  NodeId na = new_node(u, a);
  dart_node_[a] = na;
  link_after(node_of(du), na);
  NodeId nb = new_node(w, b);
  dart_node_[b] = nb;
  link_after(node_of(dw), nb);

  // Piece through du closes with b and keeps f; piece through dw closes
  // with a and is relabeled.
  journal_.set(dart_face_, b, f);
  journal_.set(face_rep_dart_, f, b);
  FaceId f2 = new_face(a);
  relabel_face_walk(a, f2);

  AddedEdge out;
  out.edge = e;
  out.forward = a;
  out.backward = b;
  out.kept_face = f;
  out.fresh_face = f2;
  return out;
}

AddedEdge PlanarGraph::add_virtual_edge(VertexId u, VertexId v, FaceId f) {
  DartId du = dart_at_face(u, f);
  DartId dv = dart_at_face(v, f);
  TUTTE_CHECK(du != kNone && dv != kNone, Errc::NotOnFace,
              "vertex not on face");
  return add_edge_in_face(du, dv, true);
}

AddedEdge PlanarGraph::add_edge_across_outer(VertexId v1, VertexId v2,
                                             bool is_virtual) {
  TUTTE_CHECK(is_exterior(v1) && is_exterior(v2), Errc::NotExterior,
              "endpoint is interior");
  TUTTE_CHECK(v1 != v2, Errc::BadInput, "edge endpoints coincide");
  TUTTE_CHECK(ccw_boundary_next(v1) != v2 && cw_boundary_next(v1) != v2 &&
                  dart_between(v1, v2) == kNone,
              Errc::AlreadyAdjacentOnFace, "endpoints already adjacent");

  EdgeId e = new_edge(v1, v2, is_virtual);
  DartId a = dart_of(e, 0), b = dart_of(e, 1);
  NodeId na = new_node(v1, a);
  dart_node_[a] = na;
  link_after(gap_node_[v1], na);
  NodeId nb = new_node(v2, b);
  dart_node_[b] = nb;
  link_after(rot_prev_[gap_node_[v2]], nb);

  // The region on the left of v1 -> v2 becomes a fresh interior face.  A
  // walk vertex whose gap sits in the swallowed corner (right after its
  // walk dart) loses contact with the outer region and turns interior.
  FaceId f2 = new_face(a);
  std::vector<DartId> walk = face_darts(a);
  for (DartId d : walk) {
    journal_.set(dart_face_, d, f2);
    VertexId v = origin(d);
    if (v == v1 || v == v2) continue;
    NodeId g = gap_node_[v];
    if (g != kNone && rot_next_[node_of(d)] == g) {
      unlink_node(g);
      journal_.set(gap_node_, v, kNone);
      journal_.set(vert_node_, v, node_of(d));
    }
  }

  AddedEdge out;
  out.edge = e;
  out.forward = a;
  out.backward = b;
  out.kept_face = kNone;
  out.fresh_face = f2;
  return out;
}

void PlanarGraph::delete_outer_edge(EdgeId e) {
  TUTTE_CHECK(edge_alive(e), Errc::BadInput, "edge already deleted");
  DartId d = dart_of(e, 0);
  if (!is_outer_dart(d)) d = dart_of(e, 1);
  TUTTE_CHECK(is_outer_dart(d), Errc::PreconditionViolated,
              "edge is not on the outer walk");
  DartId t = twin(d);
  TUTTE_IASSERT(!is_outer_dart(t), "deleting a two-sided outer edge");
  VertexId u = origin(d);

  std::vector<DartId> walk = face_darts(t);
  for (std::size_t i = 1; i < walk.size(); ++i) {
    VertexId v = origin(walk[i]);
    if (v == u) continue;
    TUTTE_IASSERT(!is_exterior(v), "merged face touches the boundary");
    NodeId g = new_node(v, kNone);
    link_after(node_of(walk[i]), g);
    journal_.set(gap_node_, v, g);
  }
  unlink_node(node_of(d));
  unlink_node(node_of(t));
  journal_.set(edge_alive_, e, 0);
}

std::vector<NodeId> PlanarGraph::split_ring(
    VertexId v, const std::vector<NodeId>& cuts_ccw) {
  std::size_t k = cuts_ccw.size();
  TUTTE_IASSERT(k >= 2, "split needs at least two cuts");
  for (NodeId c : cuts_ccw)
    TUTTE_IASSERT(rot_vert_[c] == v, "cut node of another vertex");

  NodeId old_gap = gap_node_[v];
  if (old_gap != kNone) {
    bool at_gap = false;
    for (NodeId c : cuts_ccw)
      at_gap = at_gap || c == old_gap || rot_next_[c] == old_gap;
    TUTTE_IASSERT(at_gap, "exterior vertex split away from its gap");
  }

  std::vector<NodeId> starts(k);
  for (std::size_t i = 0; i < k; ++i) starts[i] = rot_next_[cuts_ccw[i]];

  std::vector<NodeId> gaps(k);
  for (std::size_t i = 0; i < k; ++i) {
    NodeId first = starts[i];
    NodeId last = cuts_ccw[(i + 1) % k];
    TUTTE_IASSERT(first != last || rot_dart_[first] != kNone,
                  "arc holds only a gap node");
    if (rot_dart_[last] == kNone) {
      gaps[i] = last;
      journal_.set(rot_next_, last, first);
      journal_.set(rot_prev_, first, last);
    } else if (rot_dart_[first] == kNone) {
      gaps[i] = first;
      journal_.set(rot_next_, last, first);
      journal_.set(rot_prev_, first, last);
    } else {
      NodeId g = new_node(v, kNone);
      gaps[i] = g;
      journal_.set(rot_next_, last, g);
      journal_.set(rot_prev_, g, last);
      journal_.set(rot_next_, g, first);
      journal_.set(rot_prev_, first, g);
    }
  }
  return gaps;
}

void PlanarGraph::set_active_gap(VertexId v, NodeId gap) {
  journal_.set(gap_node_, v, gap);
  if (gap == kNone) {
    NodeId nd = vert_node_[v];
    TUTTE_IASSERT(nd != kNone, "interior vertex without ring handle");
  }
}

void PlanarGraph::validate_active(VertexId boundary_start) const {
  TUTTE_IASSERT(gap_node_[boundary_start] != kNone, "start not exterior");
  std::vector<VertexId> boundary = outer_walk(boundary_start);
  for (VertexId v : boundary) {
    NodeId g = gap_node_[v];
    TUTTE_IASSERT(rot_vert_[g] == v && rot_dart_[g] == kNone, "bad gap node");
    NodeId nd = g;
    std::int32_t gaps = 0, steps = 0;
    do {
      TUTTE_IASSERT(rot_next_[rot_prev_[nd]] == nd &&
                        rot_prev_[rot_next_[nd]] == nd,
                    "ring links broken");
      TUTTE_IASSERT(rot_vert_[nd] == v, "foreign node in ring");
      DartId d = rot_dart_[nd];
      if (d == kNone) {
        ++gaps;
      } else {
        TUTTE_IASSERT(dart_node_[d] == nd, "dart/node cross-link broken");
        TUTTE_IASSERT(edge_alive_[edge_of(d)] != 0, "dead dart in ring");
      }
      ++steps;
      TUTTE_IASSERT(steps <= static_cast<std::int32_t>(rot_next_.size()),
                    "ring does not close");
      nd = rot_next_[nd];
    } while (nd != g);
    TUTTE_IASSERT(gaps == 1, "boundary vertex without exactly one gap");
  }

  // Interior faces reachable from the boundary must carry uniform labels.
  for (VertexId v : boundary) {
    NodeId g = gap_node_[v];
    for (NodeId nd = rot_next_[g]; nd != g; nd = rot_next_[nd]) {
      DartId d = rot_dart_[nd];
      if (d == kNone || is_outer_dart(d)) continue;
      FaceId f = dart_face_[d];
      for (DartId x : face_darts(d))
        TUTTE_IASSERT(dart_face_[x] == f, "inconsistent face labels");
    }
  }
}

}  // namespace tutte
