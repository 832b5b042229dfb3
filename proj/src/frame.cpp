#include "tutte/frame.hpp"

#include <algorithm>
#include <sstream>

namespace tutte {

namespace {

constexpr int kPairIndex[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

constexpr int kPairLo[6] = {0, 0, 0, 1, 1, 2};
constexpr int kPairHi[6] = {1, 2, 3, 2, 3, 3};

}  // namespace

int pair_index(int i, int j) {
  TUTTE_IASSERT(i >= 0 && i < 4 && j >= 0 && j < 4 && i != j,
                "pair_index: bad slots");
  return kPairIndex[i][j];
}

CornerFrame::CornerFrame(PlanarGraph& g, bool journaled)
    : g_(g), j_(g.journal()), journaled_(journaled) {
  const auto n = static_cast<size_t>(g.vertex_count());
  corner_.assign(4, kNone);
  uslot_.assign(1, 0);
  side_bits_.assign(n, 0);
  fe_.assign(static_cast<size_t>(g.face_limit()) * 8, kNone);
  v_head_.assign(n * 4, kNone);
  v_tail_.assign(n * 4, kNone);
  vf_head_.assign(static_cast<size_t>(g.face_limit()), kNone);
  p_head_.assign(6, kNone);
  p_tail_.assign(6, kNone);
  p_gen_.assign(6, 0);
  pf_head_.assign(static_cast<size_t>(g.face_limit()), kNone);
  stamp_.assign(n, 0);
}

void CornerFrame::put(std::vector<std::int32_t>& a, std::int32_t i,
                      std::int32_t v) {
  if (journaled_) {
    j_.set(a, i, v);
  } else {
    a[static_cast<size_t>(i)] = v;
  }
}

void CornerFrame::ensure_face_capacity(FaceId f) {
  const auto need = static_cast<size_t>(f) + 1;
  if (fe_.size() < need * 8) fe_.resize(need * 8, kNone);
  if (vf_head_.size() < need) vf_head_.resize(need, kNone);
  if (pf_head_.size() < need) pf_head_.resize(need, kNone);
}

void CornerFrame::set_corner(int slot, VertexId v) { put(corner_, slot, v); }

void CornerFrame::set_u_slot(int slot) { put(uslot_, 0, slot); }

// ---------------- F ----------------

int CornerFrame::f_count(FaceId f, int slot) const {
  const auto base = (static_cast<size_t>(f) * 4 + static_cast<size_t>(slot)) * 2;
  if (base + 1 >= fe_.size()) return 0;
  if (fe_[base] == kNone) return 0;
  return fe_[base + 1] == kNone ? 1 : 2;
}

VertexId CornerFrame::f_entry(FaceId f, int slot, int k) const {
  const auto base = (static_cast<size_t>(f) * 4 + static_cast<size_t>(slot)) * 2;
  if (base + 1 >= fe_.size()) return kNone;
  return fe_[base + static_cast<size_t>(k)];
}

VertexId CornerFrame::f_last(FaceId f, int slot) const {
  const int c = f_count(f, slot);
  return c == 0 ? kNone : f_entry(f, slot, c - 1);
}

bool CornerFrame::f_has(FaceId f, int slot, VertexId v) const {
  return f_entry(f, slot, 0) == v || f_entry(f, slot, 1) == v;
}

void CornerFrame::f_clear(FaceId f, int slot) {
  ensure_face_capacity(f);
  const auto base =
      static_cast<std::int32_t>((static_cast<size_t>(f) * 4 + slot) * 2);
  put(fe_, base, kNone);
  put(fe_, base + 1, kNone);
}

void CornerFrame::f_append(FaceId f, int slot, VertexId v, bool ascending) {
  ensure_face_capacity(f);
  const auto base =
      static_cast<std::int32_t>((static_cast<size_t>(f) * 4 + slot) * 2);
  const std::int32_t a = fe_[static_cast<size_t>(base)];
  const std::int32_t b = fe_[static_cast<size_t>(base) + 1];
  TUTTE_IASSERT(a != v && b != v, "F entry already present");
  if (a == kNone) {
    put(fe_, base, v);
    return;
  }
  TUTTE_IASSERT(b == kNone, "F entry overflow: three contacts on one side");
  if (ascending) {
    put(fe_, base + 1, v);
  } else {
    put(fe_, base + 1, a);
    put(fe_, base, v);
  }
}

void CornerFrame::f_remove(FaceId f, int slot, VertexId v) {
  const auto base =
      static_cast<std::int32_t>((static_cast<size_t>(f) * 4 + slot) * 2);
  if (static_cast<size_t>(base) + 1 >= fe_.size()) return;
  const std::int32_t a = fe_[static_cast<size_t>(base)];
  const std::int32_t b = fe_[static_cast<size_t>(base) + 1];
  if (a == v) {
    put(fe_, base, b);
    put(fe_, base + 1, kNone);
  } else if (b == v) {
    put(fe_, base + 1, kNone);
  }
}

// ---------------- V ----------------

CornerFrame::NodeRef CornerFrame::v_node_head(VertexId w, int slot) const {
  return v_head_[static_cast<size_t>(w) * 4 + static_cast<size_t>(slot)];
}

CornerFrame::NodeRef CornerFrame::v_node_tail(VertexId w, int slot) const {
  return v_tail_[static_cast<size_t>(w) * 4 + static_cast<size_t>(slot)];
}

FaceId CornerFrame::v_first_face(VertexId w, int slot) const {
  const NodeRef n = v_node_head(w, slot);
  return n == kNone ? kNone : vn_face_[static_cast<size_t>(n)];
}

FaceId CornerFrame::v_last_face(VertexId w, int slot) const {
  const NodeRef n = v_node_tail(w, slot);
  return n == kNone ? kNone : vn_face_[static_cast<size_t>(n)];
}

CornerFrame::NodeRef CornerFrame::v_alloc(VertexId w, int slot, FaceId f) {
  const auto n = static_cast<NodeRef>(vn_face_.size());
  vn_face_.push_back(f);
  vn_owner_.push_back(w * 4 + slot);
  vn_prev_.push_back(kNone);
  vn_next_.push_back(kNone);
  vn_fprev_.push_back(kNone);
  vn_fnext_.push_back(kNone);
  return n;
}

void CornerFrame::v_insert(VertexId w, int slot, FaceId f, bool ascending) {
  ensure_face_capacity(f);
  if (debug_checks()) {
    for (NodeRef n = vf_head_[static_cast<size_t>(f)]; n != kNone;
         n = vn_fnext_[static_cast<size_t>(n)]) {
      TUTTE_IASSERT(vn_owner_[static_cast<size_t>(n)] != w * 4 + slot,
                    "duplicate V node");
    }
  }
  const NodeRef n = v_alloc(w, slot, f);
  const std::int32_t key = w * 4 + slot;
  if (ascending) {
    const NodeRef t = v_tail_[static_cast<size_t>(key)];
    put(vn_prev_, n, t);
    if (t != kNone) {
      put(vn_next_, t, n);
    } else {
      put(v_head_, key, n);
    }
    put(v_tail_, key, n);
  } else {
    const NodeRef h = v_head_[static_cast<size_t>(key)];
    put(vn_next_, n, h);
    if (h != kNone) {
      put(vn_prev_, h, n);
    } else {
      put(v_tail_, key, n);
    }
    put(v_head_, key, n);
  }
  const NodeRef fh = vf_head_[static_cast<size_t>(f)];
  put(vn_fnext_, n, fh);
  if (fh != kNone) put(vn_fprev_, fh, n);
  put(vf_head_, static_cast<std::int32_t>(f), n);
}

void CornerFrame::v_unlink(NodeRef n) {
  const std::int32_t owner = vn_owner_[static_cast<size_t>(n)];
  if (owner == kNone) return;
  const NodeRef p = vn_prev_[static_cast<size_t>(n)];
  const NodeRef x = vn_next_[static_cast<size_t>(n)];
  if (p != kNone) {
    put(vn_next_, p, x);
  } else if (v_head_[static_cast<size_t>(owner)] == n) {
    put(v_head_, owner, x);
  }
  if (x != kNone) {
    put(vn_prev_, x, p);
  } else if (v_tail_[static_cast<size_t>(owner)] == n) {
    put(v_tail_, owner, p);
  }
  put(vn_owner_, n, kNone);
}

// ---------------- P ----------------

bool CornerFrame::p_node_valid(NodeRef n) const {
  const std::int32_t l = pn_list_[static_cast<size_t>(n)];
  if (l == kNone) return false;
  return pn_gen_[static_cast<size_t>(n)] == p_gen_[static_cast<size_t>(l)];
}

bool CornerFrame::p_empty(int i, int j) const {
  return p_head_[static_cast<size_t>(pair_index(i, j))] == kNone;
}

CornerFrame::NodeRef CornerFrame::p_node_head(int i, int j) const {
  return p_head_[static_cast<size_t>(pair_index(i, j))];
}

CornerFrame::NodeRef CornerFrame::p_node_tail(int i, int j) const {
  return p_tail_[static_cast<size_t>(pair_index(i, j))];
}

FaceId CornerFrame::p_first(int i, int j) const {
  const int idx = pair_index(i, j);
  const NodeRef n = (i == kPairLo[idx]) ? p_head_[static_cast<size_t>(idx)]
                                        : p_tail_[static_cast<size_t>(idx)];
  return n == kNone ? kNone : pn_face_[static_cast<size_t>(n)];
}

FaceId CornerFrame::p_last(int i, int j) const {
  const int idx = pair_index(i, j);
  const NodeRef n = (i == kPairLo[idx]) ? p_tail_[static_cast<size_t>(idx)]
                                        : p_head_[static_cast<size_t>(idx)];
  return n == kNone ? kNone : pn_face_[static_cast<size_t>(n)];
}

CornerFrame::NodeRef CornerFrame::p_find(int i, int j, FaceId f) const {
  if (static_cast<size_t>(f) >= pf_head_.size()) return kNone;
  const int idx = pair_index(i, j);
  for (NodeRef n = pf_head_[static_cast<size_t>(f)]; n != kNone;
       n = pn_fnext_[static_cast<size_t>(n)]) {
    if (pn_list_[static_cast<size_t>(n)] == idx && p_node_valid(n)) return n;
  }
  return kNone;
}

CornerFrame::NodeRef CornerFrame::p_alloc(FaceId f, int list) {
  const auto n = static_cast<NodeRef>(pn_face_.size());
  pn_face_.push_back(f);
  pn_list_.push_back(list);
  pn_gen_.push_back(p_gen_[static_cast<size_t>(list)]);
  pn_prev_.push_back(kNone);
  pn_next_.push_back(kNone);
  pn_fprev_.push_back(kNone);
  pn_fnext_.push_back(kNone);
  return n;
}

void CornerFrame::p_record(int s, int other, FaceId f, bool ascending) {
  ensure_face_capacity(f);
  if (p_find(s, other, f) != kNone) return;
  const int idx = pair_index(s, other);
  const bool front = (s == kPairLo[idx]) != ascending;
  const NodeRef n = p_alloc(f, idx);
  if (front) {
    const NodeRef h = p_head_[static_cast<size_t>(idx)];
    put(pn_next_, n, h);
    if (h != kNone) {
      put(pn_prev_, h, n);
    } else {
      put(p_tail_, idx, n);
    }
    put(p_head_, idx, n);
  } else {
    const NodeRef t = p_tail_[static_cast<size_t>(idx)];
    put(pn_prev_, n, t);
    if (t != kNone) {
      put(pn_next_, t, n);
    } else {
      put(p_head_, idx, n);
    }
    put(p_tail_, idx, n);
  }
  const NodeRef fh = pf_head_[static_cast<size_t>(f)];
  put(pn_fnext_, n, fh);
  if (fh != kNone) put(pn_fprev_, fh, n);
  put(pf_head_, static_cast<std::int32_t>(f), n);
}

void CornerFrame::p_unlink(NodeRef n) {
  const std::int32_t idx = pn_list_[static_cast<size_t>(n)];
  if (idx == kNone) return;
  if (!p_node_valid(n)) {
    put(pn_list_, n, kNone);
    return;
  }
  const NodeRef p = pn_prev_[static_cast<size_t>(n)];
  const NodeRef x = pn_next_[static_cast<size_t>(n)];
  if (p != kNone) {
    put(pn_next_, p, x);
  } else if (p_head_[static_cast<size_t>(idx)] == n) {
    put(p_head_, idx, x);
  }
  if (x != kNone) {
    put(pn_prev_, x, p);
  } else if (p_tail_[static_cast<size_t>(idx)] == n) {
    put(p_tail_, idx, p);
  }
  put(pn_list_, n, kNone);
}

void CornerFrame::p_bulk_clear(int i, int j) {
  const int idx = pair_index(i, j);
  put(p_head_, idx, kNone);
  put(p_tail_, idx, kNone);
  put(p_gen_, idx, p_gen_[static_cast<size_t>(idx)] + 1);
}

void CornerFrame::p_clear_all() {
  for (int idx = 0; idx < 6; ++idx) {
    put(p_head_, idx, kNone);
    put(p_tail_, idx, kNone);
    put(p_gen_, idx, p_gen_[static_cast<size_t>(idx)] + 1);
  }
}

void CornerFrame::p_keep_prefix(int i, int j, NodeRef n) {
  const int idx = pair_index(i, j);
  if (n == kNone) {
    p_bulk_clear(i, j);
    return;
  }
  TUTTE_IASSERT(pn_list_[static_cast<size_t>(n)] == idx && p_node_valid(n),
                "p_keep_prefix: node not in list");
  const NodeRef x = pn_next_[static_cast<size_t>(n)];
  put(pn_next_, n, kNone);
  if (x != kNone) put(pn_prev_, x, kNone);
  put(p_tail_, idx, n);
}

void CornerFrame::p_keep_suffix(int i, int j, NodeRef n) {
  const int idx = pair_index(i, j);
  if (n == kNone) {
    p_bulk_clear(i, j);
    return;
  }
  TUTTE_IASSERT(pn_list_[static_cast<size_t>(n)] == idx && p_node_valid(n),
                "p_keep_suffix: node not in list");
  const NodeRef p = pn_prev_[static_cast<size_t>(n)];
  put(pn_prev_, n, kNone);
  if (p != kNone) put(pn_next_, p, kNone);
  put(p_head_, idx, n);
}

// ---------------- scans ----------------

bool CornerFrame::boundary_adjacent(VertexId v, VertexId w) const {
  return g_.ccw_boundary_next(v) == w || g_.cw_boundary_next(v) == w;
}

void CornerFrame::scan_side(int slot, VertexId from, VertexId to,
                            bool ascending, bool force) {
  VertexId v = from;
  int guard = g_.vertex_count() + 1;
  for (;;) {
    TUTTE_IASSERT(guard-- > 0, "scan_side: stretch walk did not terminate");
    if (force || !on_side(v, slot)) plus_block(v, slot, ascending);
    if (v == to) break;
    v = ascending ? g_.ccw_boundary_next(v) : g_.cw_boundary_next(v);
  }
}

void CornerFrame::plus_block(VertexId v, int slot, bool ascending) {
  counters_.vertex_events++;
  put(side_bits_, v, side_bits_[static_cast<size_t>(v)] | (1 << slot));
  const DartId dout = g_.outer_dart_at(v);
  const DartId ag = g_.after_gap_dart(v);
  auto visit = [&](DartId d) {
    const FaceId f = g_.face_left(d);
    ensure_face_capacity(f);
    const bool fresh = f_count(f, slot) == 0;
    if (fresh) scan_face(f, d, v, slot, ascending);
    f_append(f, slot, v, ascending);
    replicate_pairs(f, v, slot, ascending);
  };
  if (ascending) {
    for (DartId d = g_.rho_prev(dout);; d = g_.rho_prev(d)) {
      visit(d);
      if (d == ag) break;
    }
  } else {
    for (DartId d = ag; d != dout; d = g_.rho_next(d)) visit(d);
  }
}

void CornerFrame::scan_face(FaceId f, DartId at, VertexId v, int slot,
                            bool ascending) {
  counters_.face_walks++;
  for (DartId e = g_.face_next(at); e != at; e = g_.face_next(e)) {
    counters_.walk_steps++;
    const VertexId w = g_.origin(e);
    if (w == v) continue;
    if (!g_.is_exterior(w)) {
      v_insert(w, slot, f, ascending);
      continue;
    }
    if (boundary_adjacent(v, w)) continue;
    for (int j2 = 0; j2 < 4; ++j2) {
      if (j2 != slot && on_side(w, j2)) p_record(slot, j2, f, ascending);
    }
  }
}

// A vertex joining side `slot` can complete a pair on a face whose other
// sides were catalogued long ago and will not be rescanned.  The partner the
// old side's catalogue pass would have paired it with is that side's first
// contact.
void CornerFrame::replicate_pairs(FaceId f, VertexId v, int slot,
                                  bool ascending) {
  for (int j2 = 0; j2 < 4; ++j2) {
    if (j2 == slot) continue;
    const VertexId a = f_entry(f, j2, 0);
    if (a == kNone || a == v) continue;
    if (boundary_adjacent(a, v)) continue;
    p_record(slot, j2, f, ascending);
  }
}

void CornerFrame::initialize(const std::array<VertexId, 4>& corners,
                             int u_slot) {
  for (int k = 0; k < 4; ++k) set_corner(k, corners[static_cast<size_t>(k)]);
  set_u_slot(u_slot);
  for (int k = 0; k < 4; ++k) {
    VertexId v = corners[static_cast<size_t>(k)];
    const VertexId stop = corners[static_cast<size_t>((k + 1) & 3)];
    int guard = g_.vertex_count() + 1;
    for (;;) {
      TUTTE_IASSERT(guard-- > 0, "initialize: boundary walk did not terminate");
      put(side_bits_, v, side_bits_[static_cast<size_t>(v)] | (1 << k));
      if (v == stop) break;
      v = g_.ccw_boundary_next(v);
    }
  }
  for (int k = 0; k < 4; ++k) {
    scan_side(k, corners[static_cast<size_t>(k)],
              corners[static_cast<size_t>((k + 1) & 3)], true, true);
  }
}

// ---------------- incremental update primitives ----------------

bool CornerFrame::record_qualifies(FaceId f, int i, int j) const {
  for (int a = 0; a < f_count(f, i); ++a) {
    const VertexId x = f_entry(f, i, a);
    for (int b = 0; b < f_count(f, j); ++b) {
      const VertexId y = f_entry(f, j, b);
      if (x == y) continue;
      if (boundary_adjacent(x, y)) continue;
      return true;
    }
  }
  return false;
}

void CornerFrame::requalify_face_records(FaceId f) {
  if (static_cast<size_t>(f) >= pf_head_.size()) return;
  std::vector<NodeRef> nodes;
  for (NodeRef n = pf_head_[static_cast<size_t>(f)]; n != kNone;
       n = pn_fnext_[static_cast<size_t>(n)]) {
    if (p_node_valid(n)) nodes.push_back(n);
  }
  for (const NodeRef n : nodes) {
    const std::int32_t idx = pn_list_[static_cast<size_t>(n)];
    if (!record_qualifies(f, kPairLo[idx], kPairHi[idx])) p_unlink(n);
  }
}

void CornerFrame::scrub_membership(VertexId v, int slot) {
  if (!on_side(v, slot)) return;
  std::vector<std::pair<FaceId, DartId>> faces;
  if (g_.is_exterior(v)) {
    const DartId dout = g_.outer_dart_at(v);
    const DartId ag = g_.after_gap_dart(v);
    for (DartId d = ag; d != dout; d = g_.rho_next(d)) {
      faces.emplace_back(g_.face_left(d), d);
    }
  } else {
    const DartId d0 = g_.dart_at(g_.any_node_of(v));
    DartId d = d0;
    do {
      faces.emplace_back(g_.face_left(d), d);
      d = g_.rho_next(d);
    } while (d != d0);
  }
  for (const auto& [f, d] : faces) {
    counters_.fixup_steps++;
    if (!f_has(f, slot, v)) continue;
    f_remove(f, slot, v);
    if (f_count(f, slot) == 0) {
      std::vector<NodeRef> drop;
      for (NodeRef n = vf_head_[static_cast<size_t>(f)]; n != kNone;
           n = vn_fnext_[static_cast<size_t>(n)]) {
        const std::int32_t owner = vn_owner_[static_cast<size_t>(n)];
        if (owner != kNone && (owner & 3) == slot) drop.push_back(n);
      }
      for (const NodeRef n : drop) v_unlink(n);
      std::vector<NodeRef> records;
      for (NodeRef n = pf_head_[static_cast<size_t>(f)]; n != kNone;
           n = pn_fnext_[static_cast<size_t>(n)]) {
        if (!p_node_valid(n)) continue;
        const std::int32_t idx = pn_list_[static_cast<size_t>(n)];
        if (kPairLo[idx] == slot || kPairHi[idx] == slot) records.push_back(n);
      }
      for (const NodeRef n : records) p_unlink(n);
    } else {
      requalify_face_records(f);
    }
  }
  put(side_bits_, v,
      side_bits_[static_cast<size_t>(v)] & ~(1 << slot));
}

void CornerFrame::interiorize(VertexId v, FaceId anchor) {
  for (int slot = 0; slot < 4; ++slot) scrub_membership(v, slot);
  TUTTE_IASSERT(!g_.is_exterior(v), "interiorize: vertex still exterior");
  for (int slot = 0; slot < 4; ++slot) {
    TUTTE_IASSERT(v_node_head(v, slot) == kNone,
                  "interiorize: vertex already owns V entries");
  }
  // Clockwise ring sweep from the sealing face lists the incident faces in
  // the order their side contacts appear along each side.
  const DartId d0 = g_.dart_at_face(v, anchor);
  TUTTE_IASSERT(d0 != kNone, "interiorize: anchor face not incident");
  DartId d = d0;
  do {
    const FaceId f = g_.face_left(d);
    counters_.fixup_steps++;
    for (int slot = 0; slot < 4; ++slot) {
      if (f_count(f, slot) > 0) v_insert(v, slot, f, true);
    }
    d = g_.rho_prev(d);
  } while (d != d0);
}

void CornerFrame::exteriorize(VertexId v) {
  for (int slot = 0; slot < 4; ++slot) {
    std::vector<NodeRef> drop;
    for (NodeRef n = v_node_head(v, slot); n != kNone;
         n = vn_next_[static_cast<size_t>(n)]) {
      drop.push_back(n);
    }
    for (const NodeRef n : drop) v_unlink(n);
  }
}

void CornerFrame::fixup_division(DartId seal, FaceId old_f) {
  const FaceId fresh = g_.face_left(seal);
  ensure_face_capacity(fresh);
  ensure_face_capacity(old_f);
  epoch_++;
  std::vector<VertexId> boundary;
  for (const VertexId v : g_.face_vertices(seal)) {
    stamp_[static_cast<size_t>(v)] = epoch_;
    boundary.push_back(v);
    counters_.fixup_steps++;
  }
  for (int slot = 0; slot < 4; ++slot) {
    TUTTE_IASSERT(f_count(fresh, slot) == 0, "fixup: fresh face has entries");
    for (int k = 0; k < f_count(old_f, slot); ++k) {
      const VertexId v = f_entry(old_f, slot, k);
      if (stamp_[static_cast<size_t>(v)] == epoch_ && on_side(v, slot)) {
        f_append(fresh, slot, v, true);
      }
    }
  }
  std::vector<NodeRef> vnodes;
  for (NodeRef n = vf_head_[static_cast<size_t>(old_f)]; n != kNone;
       n = vn_fnext_[static_cast<size_t>(n)]) {
    if (vn_owner_[static_cast<size_t>(n)] != kNone) vnodes.push_back(n);
  }
  for (const NodeRef n : vnodes) {
    counters_.fixup_steps++;
    const std::int32_t owner = vn_owner_[static_cast<size_t>(n)];
    const VertexId w = owner >> 2;
    const int slot = owner & 3;
    // Owners on the other arc of old_f are not on the fresh cycle; their
    // nodes stay behind for the sibling to claim after the rewind.
    if (stamp_[static_cast<size_t>(w)] != epoch_) continue;
    const NodeRef fp = vn_fprev_[static_cast<size_t>(n)];
    const NodeRef fx = vn_fnext_[static_cast<size_t>(n)];
    if (fp != kNone) {
      put(vn_fnext_, fp, fx);
    } else {
      put(vf_head_, static_cast<std::int32_t>(old_f), fx);
    }
    if (fx != kNone) put(vn_fprev_, fx, fp);
    put(vn_face_, n, fresh);
    const NodeRef fh = vf_head_[static_cast<size_t>(fresh)];
    put(vn_fprev_, n, kNone);
    put(vn_fnext_, n, fh);
    if (fh != kNone) put(vn_fprev_, fh, n);
    put(vf_head_, static_cast<std::int32_t>(fresh), n);
    if (f_count(fresh, slot) == 0) v_unlink(n);
  }
  std::vector<NodeRef> records;
  for (NodeRef n = pf_head_[static_cast<size_t>(old_f)]; n != kNone;
       n = pn_fnext_[static_cast<size_t>(n)]) {
    if (p_node_valid(n)) records.push_back(n);
  }
  for (const NodeRef n : records) {
    counters_.fixup_steps++;
    const std::int32_t idx = pn_list_[static_cast<size_t>(n)];
    if (record_qualifies(fresh, kPairLo[idx], kPairHi[idx])) {
      const NodeRef fp = pn_fprev_[static_cast<size_t>(n)];
      const NodeRef fx = pn_fnext_[static_cast<size_t>(n)];
      if (fp != kNone) {
        put(pn_fnext_, fp, fx);
      } else {
        put(pf_head_, static_cast<std::int32_t>(old_f), fx);
      }
      if (fx != kNone) put(pn_fprev_, fx, fp);
      put(pn_face_, n, fresh);
      const NodeRef fh = pf_head_[static_cast<size_t>(fresh)];
      put(pn_fprev_, n, kNone);
      put(pn_fnext_, n, fh);
      if (fh != kNone) put(pn_fprev_, fh, n);
      put(pf_head_, static_cast<std::int32_t>(fresh), n);
    } else {
      p_unlink(n);
    }
  }
  for (const VertexId v : boundary) {
    if (!g_.is_exterior(v) && side_bits_[static_cast<size_t>(v)] != 0) {
      interiorize(v, fresh);
    }
  }
}

void CornerFrame::dissolve_face(DartId d) {
  const FaceId f = g_.face_left(d);
  if (static_cast<size_t>(f) < vf_head_.size()) {
    std::vector<NodeRef> vnodes;
    for (NodeRef n = vf_head_[static_cast<size_t>(f)]; n != kNone;
         n = vn_fnext_[static_cast<size_t>(n)]) {
      if (vn_owner_[static_cast<size_t>(n)] != kNone) vnodes.push_back(n);
    }
    for (const NodeRef n : vnodes) v_unlink(n);
    std::vector<NodeRef> records;
    for (NodeRef n = pf_head_[static_cast<size_t>(f)]; n != kNone;
         n = pn_fnext_[static_cast<size_t>(n)]) {
      if (p_node_valid(n)) records.push_back(n);
    }
    for (const NodeRef n : records) p_unlink(n);
  }
  for (const VertexId v : g_.face_vertices(d)) {
    if (!g_.is_exterior(v)) exteriorize(v);
  }
  for (int slot = 0; slot < 4; ++slot) f_clear(f, slot);
}

// ---------------- debug oracle ----------------

std::string CornerFrame::compare_with_rebuild() const {
  // flood the current piece
  std::vector<VertexId> verts;
  std::vector<FaceId> faces;
  {
    std::vector<char> vseen(static_cast<size_t>(g_.vertex_count()), 0);
    std::vector<char> fseen;
    std::vector<char> dseen(static_cast<size_t>(g_.edge_limit()) * 2, 0);
    std::vector<DartId> stack;
    const VertexId start = corner(0);
    // seed with the boundary ring
    VertexId v = start;
    int guard = g_.vertex_count() + 1;
    for (;;) {
      TUTTE_IASSERT(guard-- > 0, "compare: boundary walk did not terminate");
      const DartId d = g_.after_gap_dart(v);
      if (!dseen[static_cast<size_t>(d)]) {
        dseen[static_cast<size_t>(d)] = 1;
        stack.push_back(d);
      }
      v = g_.ccw_boundary_next(v);
      if (v == start) break;
    }
    while (!stack.empty()) {
      const DartId d = stack.back();
      stack.pop_back();
      const VertexId o = g_.origin(d);
      if (!vseen[static_cast<size_t>(o)]) {
        vseen[static_cast<size_t>(o)] = 1;
        verts.push_back(o);
      }
      if (!g_.is_outer_dart(d)) {
        const FaceId f = g_.face_left(d);
        if (static_cast<size_t>(f) >= fseen.size()) {
          fseen.resize(static_cast<size_t>(f) + 1, 0);
        }
        if (!fseen[static_cast<size_t>(f)]) {
          fseen[static_cast<size_t>(f)] = 1;
          faces.push_back(f);
        }
      }
      for (const DartId e : {PlanarGraph::twin(d), g_.rho_next(d)}) {
        if (!dseen[static_cast<size_t>(e)]) {
          dseen[static_cast<size_t>(e)] = 1;
          stack.push_back(e);
        }
      }
    }
  }

  CornerFrame fresh(g_, false);
  fresh.initialize({corner(0), corner(1), corner(2), corner(3)}, u_slot());

  std::ostringstream out;
  auto fail = [&](const std::string& what) { out << what << "\n"; };

  for (const VertexId v : verts) {
    if (side_bits(v) != fresh.side_bits(v)) {
      fail("side_bits mismatch at vertex " + std::to_string(v) + ": live=" +
           std::to_string(side_bits(v)) + " rebuilt=" +
           std::to_string(fresh.side_bits(v)));
    }
  }
  for (const FaceId f : faces) {
    for (int slot = 0; slot < 4; ++slot) {
      const int ca = f_count(f, slot);
      const int cb = fresh.f_count(f, slot);
      bool bad = ca != cb;
      for (int k = 0; !bad && k < ca; ++k) {
        bad = f_entry(f, slot, k) != fresh.f_entry(f, slot, k);
      }
      if (bad) {
        fail("F mismatch at face " + std::to_string(f) + " slot " +
             std::to_string(slot));
      }
    }
  }
  for (const VertexId v : verts) {
    if (g_.is_exterior(v)) continue;
    for (int slot = 0; slot < 4; ++slot) {
      std::vector<FaceId> a, b;
      for (NodeRef n = v_node_head(v, slot); n != kNone; n = v_node_next(n)) {
        a.push_back(v_node_face(n));
      }
      for (NodeRef n = fresh.v_node_head(v, slot); n != kNone;
           n = fresh.v_node_next(n)) {
        b.push_back(fresh.v_node_face(n));
      }
      if (a != b) {
        fail("V mismatch at vertex " + std::to_string(v) + " slot " +
             std::to_string(slot));
      }
    }
  }
  for (int idx = 0; idx < 6; ++idx) {
    std::vector<FaceId> a, b;
    for (NodeRef n = p_head_[static_cast<size_t>(idx)]; n != kNone;
         n = pn_next_[static_cast<size_t>(n)]) {
      a.push_back(pn_face_[static_cast<size_t>(n)]);
    }
    for (NodeRef n = fresh.p_head_[static_cast<size_t>(idx)]; n != kNone;
         n = fresh.pn_next_[static_cast<size_t>(n)]) {
      b.push_back(fresh.pn_face_[static_cast<size_t>(n)]);
    }
    // Lists touching the required-edge side are kept only as sets: their
    // entries are never read positionally.
    const bool ordered = !(kPairLo[idx] == 1 && kPairHi[idx] == 2) &&
                         !(kPairLo[idx] == 0 && kPairHi[idx] == 1);
    if (!ordered) {
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
    }
    if (a != b) {
      std::string la = "[", lb = "[";
      for (const FaceId f : a) la += std::to_string(f) + " ";
      for (const FaceId f : b) lb += std::to_string(f) + " ";
      fail("P{" + std::to_string(kPairLo[idx]) + "," +
           std::to_string(kPairHi[idx]) + "} mismatch: live=" + la +
           "] rebuilt=" + lb + "]");
    }
  }
  return out.str();
}

}  // namespace tutte
