#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tutte/planar_graph.hpp"

namespace tutte {

// Unordered side-slot pair {i,j} -> 0..5.
int pair_index(int i, int j);

// Work tallies for the incremental side scans.  Plain counters: they are
// never rewound, so they survive the journal restores between siblings and
// accumulate over the whole recursion.
struct ScanCounters {
  long long vertex_events = 0;  // (+) blocks executed
  long long face_walks = 0;     // scan_face invocations
  long long walk_steps = 0;     // face-orbit steps inside scan_face
  long long fixup_steps = 0;    // division fix-up and scrub work
};

// The four-corner boundary frame of one lemma instance, layered over a
// PlanarGraph and journaled through the same log, so restore_to() rewinds
// graph and frame in one step.
//
// Physical storage only: slot k holds corner c_k, side k runs ccw from c_k
// to c_{k+1}.  Logical (rotated / reflected) views are the solver's concern.
//
// State per instance:
//   corners     four vertices plus the designated-u slot
//   on_side     4 bits per vertex
//   F(f,i)      at most two side-i vertices per interior face, in side order
//   V(w,i)      for interior w: faces at w meeting side i, in side order
//   P{i,j}      cutting-pair witness faces, one canonical list per slot
//               pair, ordered along the smaller slot; entries are faces
//               only, the pair vertices are re-read from F when needed
class CornerFrame {
 public:
  using NodeRef = std::int32_t;

  // journaled=false gives a scratch frame (rebuild oracle) whose writes
  // bypass the shared journal.
  CornerFrame(PlanarGraph& g, bool journaled);
  CornerFrame(const CornerFrame&) = delete;
  CornerFrame& operator=(const CornerFrame&) = delete;

  PlanarGraph& graph() { return g_; }
  const PlanarGraph& graph() const { return g_; }

  // ---- corners ----
  void set_corner(int slot, VertexId v);
  VertexId corner(int slot) const { return corner_[static_cast<size_t>(slot)]; }
  void set_u_slot(int slot);
  int u_slot() const { return uslot_[0]; }

  // ---- side membership ----
  bool on_side(VertexId v, int slot) const {
    return (side_bits_[static_cast<size_t>(v)] >> slot) & 1;
  }
  int side_bits(VertexId v) const { return side_bits_[static_cast<size_t>(v)]; }

  // ---- F ----
  int f_count(FaceId f, int slot) const;
  VertexId f_entry(FaceId f, int slot, int k) const;
  VertexId f_first(FaceId f, int slot) const { return f_entry(f, slot, 0); }
  VertexId f_last(FaceId f, int slot) const;
  bool f_has(FaceId f, int slot, VertexId v) const;
  void f_clear(FaceId f, int slot);
  void f_remove(FaceId f, int slot, VertexId v);

  // ---- V ----
  bool v_empty(VertexId w, int slot) const {
    return v_node_head(w, slot) == kNone;
  }
  FaceId v_first_face(VertexId w, int slot) const;
  FaceId v_last_face(VertexId w, int slot) const;
  NodeRef v_node_head(VertexId w, int slot) const;
  NodeRef v_node_tail(VertexId w, int slot) const;
  NodeRef v_node_next(NodeRef n) const { return vn_next_[static_cast<size_t>(n)]; }
  NodeRef v_node_prev(NodeRef n) const { return vn_prev_[static_cast<size_t>(n)]; }
  FaceId v_node_face(NodeRef n) const { return vn_face_[static_cast<size_t>(n)]; }
  void v_unlink(NodeRef n);

  // ---- P ----
  // Directional reads: first/last along side i ascending.  P(i,j) read along
  // i is the reverse of P(j,i) read along j.
  bool p_empty(int i, int j) const;
  FaceId p_first(int i, int j) const;
  FaceId p_last(int i, int j) const;
  NodeRef p_node_head(int i, int j) const;  // canonical (along min(i,j)) head
  NodeRef p_node_tail(int i, int j) const;
  NodeRef p_node_next(NodeRef n) const { return pn_next_[static_cast<size_t>(n)]; }
  NodeRef p_node_prev(NodeRef n) const { return pn_prev_[static_cast<size_t>(n)]; }
  FaceId p_node_face(NodeRef n) const { return pn_face_[static_cast<size_t>(n)]; }
  bool p_node_valid(NodeRef n) const;
  // Node of face f in list {i,j}, or kNone.
  NodeRef p_find(int i, int j, FaceId f) const;
  void p_unlink(NodeRef n);
  // O(1) drop of a whole list (generation bump).
  void p_bulk_clear(int i, int j);
  void p_clear_all();
  // Keep only the canonical-order prefix ending at n / suffix starting at n.
  void p_keep_prefix(int i, int j, NodeRef n);
  void p_keep_suffix(int i, int j, NodeRef n);
  // Manual record (same dedup and position discipline as the scans): insert
  // face f into {i,j} as if discovered while scanning side s in direction
  // `ascending`.
  void p_record(int s, int other, FaceId f, bool ascending);

  // ---- scans ----
  // Walk side `slot` from vertex `from` to vertex `to` (inclusive; boundary
  // ccw when ascending, cw otherwise) and run the join block on vertices not
  // yet on that side.  `force` visits every vertex regardless of membership
  // (fresh initialization).
  void scan_side(int slot, VertexId from, VertexId to, bool ascending,
                 bool force = false);

  // Fresh build: record corners, pre-mark all four sides, then scan them.
  void initialize(const std::array<VertexId, 4>& corners, int u_slot);

  // ---- incremental update primitives ----
  // Remove v from side `slot`: F entries, dependent V nodes and P records
  // are re-qualified; the membership bit is cleared.
  void scrub_membership(VertexId v, int slot);
  // v left the boundary entirely: scrub every slot, then rebuild its V lists
  // by a clockwise ring walk anchored at `anchor` (the face sealing the
  // region that swallowed v).
  void interiorize(VertexId v, FaceId anchor);
  // v joined the outer face (an incident interior face was deleted): drop
  // its V lists; scans re-create its side state.
  void exteriorize(VertexId v);
  // A closing edge just sealed a fresh face out of the remains of split
  // face `old_f`: re-point old_f's F/V/P state onto this piece's copy.
  // `seal` is a dart of the closing edge with the fresh face on its left.
  // Vertices of the fresh cycle identify the piece; state owned by the
  // other arc of old_f is left untouched for the sibling.  Ex-boundary
  // vertices swallowed by the seal are interiorized.
  void fixup_division(DartId seal, FaceId old_f);
  // The face left of d is about to merge into the outer region (its outer
  // edge gets deleted): drop its state and the V ownership of its interior
  // vertices.  Call before the graph mutation.
  void dissolve_face(DartId d);

  ScanCounters& counters() { return counters_; }
  const ScanCounters& counters() const { return counters_; }

  // ---- debug oracle ----
  // Compare against a frame freshly initialized on the current piece.
  // Returns an empty string when equivalent, else a mismatch description.
  // P lists {0,1} and {1,2} are compared as sets, the rest in order.
  std::string compare_with_rebuild() const;

 private:
  void put(std::vector<std::int32_t>& a, std::int32_t i, std::int32_t v);
  void ensure_face_capacity(FaceId f);
  void plus_block(VertexId v, int slot, bool ascending);
  void scan_face(FaceId f, DartId at, VertexId v, int slot, bool ascending);
  void replicate_pairs(FaceId f, VertexId v, int slot, bool ascending);
  void v_insert(VertexId w, int slot, FaceId f, bool ascending);
  NodeRef v_alloc(VertexId w, int slot, FaceId f);
  NodeRef p_alloc(FaceId f, int list);
  void f_append(FaceId f, int slot, VertexId v, bool ascending);
  void requalify_face_records(FaceId f);
  bool record_qualifies(FaceId f, int i, int j) const;
  bool boundary_adjacent(VertexId v, VertexId w) const;

  PlanarGraph& g_;
  Journal& j_;
  bool journaled_ = true;

  std::vector<std::int32_t> corner_;     // 4
  std::vector<std::int32_t> uslot_;      // 1
  std::vector<std::int32_t> side_bits_;  // n

  std::vector<std::int32_t> fe_;  // (f*4+slot)*2+k -> vertex / kNone

  std::vector<std::int32_t> v_head_, v_tail_;  // (w*4+slot)
  std::vector<std::int32_t> vn_face_, vn_owner_, vn_prev_, vn_next_;
  std::vector<std::int32_t> vn_fprev_, vn_fnext_;  // per-face chain
  std::vector<std::int32_t> vf_head_;              // face -> chain head

  std::vector<std::int32_t> p_head_, p_tail_, p_gen_;  // 6 lists
  std::vector<std::int32_t> pn_face_, pn_list_, pn_gen_, pn_prev_, pn_next_;
  std::vector<std::int32_t> pn_fprev_, pn_fnext_;
  std::vector<std::int32_t> pf_head_;

  ScanCounters counters_;

  // unjournaled scratch for fix-ups
  std::vector<std::int32_t> stamp_;
  std::int32_t epoch_ = 0;
};

}  // namespace tutte
