#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tutte/base.hpp"

namespace tutte {

// LIFO undo log over int32 cells living in registered std::vector arrays.
// The graph and the scan structures layered on top of it share one journal,
// so a single restore_to() rewinds both in step.  Arrays only grow; rewind
// restores cell values but never shrinks storage, so ids handed out before
// a rewind stay valid (and inert) afterwards.
class Journal {
 public:
  using Mark = std::size_t;

  Mark mark() const { return log_.size(); }

  void set(std::vector<std::int32_t>& arr, std::int32_t idx,
           std::int32_t value) {
    std::int32_t& cell = arr[static_cast<std::size_t>(idx)];
    if (cell == value) return;
    log_.push_back(Entry{&arr, idx, cell});
    cell = value;
  }

  void restore_to(Mark m) {
    while (log_.size() > m) {
      const Entry& e = log_.back();
      (*e.arr)[static_cast<std::size_t>(e.idx)] = e.old;
      log_.pop_back();
    }
  }

  std::size_t size() const { return log_.size(); }

 private:
  struct Entry {
    std::vector<std::int32_t>* arr;
    std::int32_t idx;
    std::int32_t old;
  };
  std::vector<Entry> log_;
};

struct AddedEdge {
  EdgeId edge = kNone;
  DartId forward = kNone;   // origin(du) -> origin(dw)
  DartId backward = kNone;  // origin(dw) -> origin(du)
  FaceId kept_face = kNone;
  FaceId fresh_face = kNone;  // kNone when the edge was added across the
                              // outer face (only one bounded piece appears)
};

// Rotation-system plane graph with journaled mutation.
//
// Representation: every edge e owns darts 2e (origin -> target as first
// listed) and 2e+1 (its twin).  Each vertex has a circular doubly-linked
// ring of rotation nodes in ccw order; a node either carries a dart or is
// a "gap" node marking the outer-face corner of an exterior vertex.
// Face tracing follows face_next(d) = rho_prev(twin(d)) which walks
// interior faces ccw and the outer face cw, keeping the traced face on the
// left of every dart.  Interior darts carry a face label; labels of darts
// that become exterior go stale and must not be read (is_outer_dart guards
// this).  Splitting a graph along a noose only cuts rotation rings; each
// side of a divided face ends up in a different piece, so stale labels are
// never observed by navigation within one piece.
class PlanarGraph {
 public:
  // ccw_neighbors[v] lists v's neighbors in ccw rotation order.  The outer
  // face is the face on the left of dart outer_from -> outer_to, i.e. the
  // orbit traced from it; its walk must visit each exterior vertex once.
  PlanarGraph(std::int32_t n,
              const std::vector<std::vector<VertexId>>& ccw_neighbors,
              VertexId outer_from, VertexId outer_to);

  PlanarGraph(const PlanarGraph&) = delete;
  PlanarGraph& operator=(const PlanarGraph&) = delete;

  // ── counts and handles ────────────────────────────────────────────────

  std::int32_t vertex_count() const { return n_; }
  // Upper bounds on ids ever allocated, dead ones included.
  std::int32_t edge_limit() const {
    return static_cast<std::int32_t>(edge_alive_.size());
  }
  std::int32_t face_limit() const {
    return static_cast<std::int32_t>(face_rep_dart_.size());
  }
  std::int32_t alive_edge_count() const;
  std::int32_t degree(VertexId v) const;

  bool edge_alive(EdgeId e) const { return edge_alive_[e] != 0; }
  bool edge_virtual(EdgeId e) const { return edge_virtual_[e] != 0; }
  void mark_edge_real(EdgeId e);

  static DartId twin(DartId d) { return d ^ 1; }
  static EdgeId edge_of(DartId d) { return d >> 1; }
  static DartId dart_of(EdgeId e, int i) { return 2 * e + i; }

  VertexId target(DartId d) const { return dart_target_[d]; }
  VertexId origin(DartId d) const { return dart_target_[twin(d)]; }
  VertexId edge_u(EdgeId e) const { return target(dart_of(e, 1)); }
  VertexId edge_v(EdgeId e) const { return target(dart_of(e, 0)); }

  // Dart of the alive edge between u and w, or kNone.  O(deg u).
  DartId dart_between(VertexId u, VertexId w) const;

  // ── rotation navigation ───────────────────────────────────────────────

  NodeId node_of(DartId d) const { return dart_node_[d]; }
  DartId dart_at(NodeId nd) const { return rot_dart_[nd]; }
  VertexId vertex_of(NodeId nd) const { return rot_vert_[nd]; }
  bool is_gap_node(NodeId nd) const { return rot_dart_[nd] == kNone; }
  NodeId ring_next(NodeId nd) const { return rot_next_[nd]; }
  NodeId ring_prev(NodeId nd) const { return rot_prev_[nd]; }

  // Some node of v's active ring: the gap for exterior vertices, a tracked
  // dart node otherwise.
  NodeId any_node_of(VertexId v) const {
    return gap_node_[v] != kNone ? gap_node_[v] : vert_node_[v];
  }

  // ccw / cw neighbor darts at the origin, skipping gap nodes.
  DartId rho_next(DartId d) const;
  DartId rho_prev(DartId d) const;

  DartId face_next(DartId d) const { return rho_prev(twin(d)); }
  DartId face_prev(DartId d) const { return twin(rho_next(d)); }

  // ── outer boundary (active piece only) ────────────────────────────────

  bool is_exterior(VertexId v) const { return gap_node_[v] != kNone; }
  NodeId gap_node(VertexId v) const { return gap_node_[v]; }

  // True iff the outer region lies on the left of d, i.e. the next ring
  // node after d at its origin is a gap.  Works in any piece, active or
  // not, since it only inspects d's own ring.
  bool is_outer_dart(DartId d) const {
    return rot_dart_[rot_next_[dart_node_[d]]] == kNone;
  }

  FaceId face_left(DartId d) const {
    TUTTE_IASSERT(!is_outer_dart(d), "face_left of outer dart");
    return dart_face_[d];
  }
  FaceId face_label_raw(DartId d) const { return dart_face_[d]; }

  // Outgoing boundary dart with the outer region on its left (walks the
  // boundary cw); the after-gap dart is the twin of the cw-incoming one.
  DartId outer_dart_at(VertexId v) const;
  DartId after_gap_dart(VertexId v) const;
  VertexId cw_boundary_next(VertexId v) const {
    return target(outer_dart_at(v));
  }
  VertexId ccw_boundary_next(VertexId v) const {
    return target(after_gap_dart(v));
  }

  // Full ccw outer cycle beginning at start.  Errc::NotExterior otherwise.
  std::vector<VertexId> outer_walk(VertexId start) const;

  // Dart at v whose left face is f, or kNone.  O(deg v).
  DartId dart_at_face(VertexId v, FaceId f) const;

  // Darts of the face walk starting at d (interior ccw, outer cw).
  std::vector<DartId> face_darts(DartId d) const;
  std::vector<VertexId> face_vertices(DartId d) const;

  // ── journaled mutation ────────────────────────────────────────────────

  Journal& journal() { return journal_; }
  Journal::Mark mark() const { return journal_.mark(); }
  void restore_to(Journal::Mark m) { journal_.restore_to(m); }

  // Inserts edge (origin(du), origin(dw)) across their shared interior
  // face f, dividing it.  The piece containing du keeps the label f; the
  // piece containing dw is relabeled with a fresh face id (cost: its
  // walk).  Preconditions: same interior face on the left of both darts;
  // endpoints not already consecutive along f.
  AddedEdge add_edge_in_face(DartId du, DartId dw, bool is_virtual);

  // Convenience wrapper locating the corner darts of u and v on f.  The
  // piece swept ccw from u's corner to the new edge keeps the label f.
  AddedEdge add_virtual_edge(VertexId u, VertexId v, FaceId f);

  // Inserts edge (v1, v2) through the outer region: the dart at v1 goes
  // right after v1's gap, the dart at v2 right before v2's gap, and the
  // region to the left of v1 -> v2 becomes a fresh interior face.  On an
  // intact boundary that region is the ccw arc v1 .. v2; an arc vertex
  // whose outer corner is swallowed by the new face turns interior.  On
  // a piece whose boundary was opened by split_ring the call closes the
  // mouth instead.  kept_face reports kNone.  Precondition: v1, v2
  // exterior and not adjacent along the current boundary.
  AddedEdge add_edge_across_outer(VertexId v1, VertexId v2, bool is_virtual);

  // Deletes a boundary edge; the interior face on its other side merges
  // into the outer region, and that face's other vertices (which must all
  // be interior) become exterior.
  void delete_outer_edge(EdgeId e);

  // Divides v's rotation ring at the given cut positions (sever after
  // each named node; nodes must be listed in ccw ring order) and closes
  // every resulting arc into its own ring.  An arc keeps v's current gap
  // node if that node sits at one of its ends; every other arc gets a
  // fresh gap appended at its cut corner.  If v is exterior, one cut must
  // sit at the gap (the node itself, or the node just before it).
  // Returns the gap node of the arc starting after cuts_ccw[i].
  // gap_node(v) is left untouched; use set_active_gap to pick the piece
  // navigation should follow.
  std::vector<NodeId> split_ring(VertexId v,
                                 const std::vector<NodeId>& cuts_ccw);

  // Points active-piece navigation for v at the given gap (kNone makes v
  // interior).  Journaled.
  void set_active_gap(VertexId v, NodeId gap);

  // ── debug ─────────────────────────────────────────────────────────────

  // Structural self-check of the piece whose boundary passes through the
  // given exterior vertex: rings, cross-links and interior face labels
  // reachable from that boundary.  Throws Errc::Internal on damage.
  void validate_active(VertexId boundary_start) const;

 private:
  NodeId new_node(VertexId v, DartId d);
  void link_after(NodeId pos, NodeId nd);
  void unlink_node(NodeId nd);
  FaceId new_face(DartId rep);
  EdgeId new_edge(VertexId u, VertexId w, bool is_virtual);
  void relabel_face_walk(DartId start, FaceId f);

  std::int32_t n_ = 0;

  // Rotation arena; cell kNone in rot_dart_ marks a gap node.
  std::vector<std::int32_t> rot_next_, rot_prev_, rot_dart_, rot_vert_;
  std::vector<std::int32_t> gap_node_;   // per vertex; kNone if interior
  std::vector<std::int32_t> vert_node_;  // ring handle for interior vertices
  std::vector<std::int32_t> dart_target_, dart_node_, dart_face_;
  std::vector<std::int32_t> edge_alive_, edge_virtual_;
  std::vector<std::int32_t> face_rep_dart_;  // creation-time sample dart

  Journal journal_;
};

}  // namespace tutte
