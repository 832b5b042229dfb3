#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "tutte/frame.hpp"
#include "tutte/planar_graph.hpp"

using namespace tutte;

namespace {

using Rot = std::vector<std::vector<VertexId>>;

PlanarGraph make_square() {
  return PlanarGraph(4, Rot{{1, 3}, {2, 0}, {3, 1}, {0, 2}}, 0, 3);
}

// Two squares side by side: outer hexagon 0,1,4,5,2,3 (ccw) with the
// shared edge (1,2) as an interior chord.
PlanarGraph make_two_squares() {
  return PlanarGraph(
      6, Rot{{1, 3}, {4, 2, 0}, {3, 1, 5}, {0, 2}, {5, 1}, {2, 4}}, 0, 3);
}

PlanarGraph make_wheel6() {
  return PlanarGraph(7,
                     Rot{{1, 6, 5},
                         {2, 6, 0},
                         {3, 6, 1},
                         {4, 6, 2},
                         {5, 6, 3},
                         {0, 6, 4},
                         {0, 1, 2, 3, 4, 5}},
                     0, 5);
}

PlanarGraph make_octahedron() {
  return PlanarGraph(6,
                     Rot{{1, 5, 4, 2},
                         {2, 3, 5, 0},
                         {0, 4, 3, 1},
                         {2, 4, 5, 1},
                         {3, 2, 0, 5},
                         {3, 4, 0, 1}},
                     0, 2);
}

FaceId face_between(const PlanarGraph& g, VertexId u, VertexId w) {
  const DartId d = g.dart_between(u, w);
  REQUIRE(d != kNone);
  return g.face_left(d);
}

std::vector<FaceId> v_list(const CornerFrame& fr, VertexId w, int slot) {
  std::vector<FaceId> out;
  for (CornerFrame::NodeRef n = fr.v_node_head(w, slot); n != kNone;
       n = fr.v_node_next(n)) {
    out.push_back(fr.v_node_face(n));
  }
  return out;
}

// Canonical-order walk (ascending along min(i,j)).
std::vector<FaceId> p_list(const CornerFrame& fr, int i, int j) {
  std::vector<FaceId> out;
  for (CornerFrame::NodeRef n = fr.p_node_head(i, j); n != kNone;
       n = fr.p_node_next(n)) {
    out.push_back(fr.p_node_face(n));
  }
  return out;
}

std::vector<std::pair<FaceId, std::vector<VertexId>>> interior_face_cycles(
    const PlanarGraph& g) {
  std::vector<std::pair<FaceId, std::vector<VertexId>>> out;
  std::set<FaceId> seen;
  for (EdgeId e = 0; e < g.edge_limit(); ++e) {
    if (!g.edge_alive(e)) continue;
    for (int k = 0; k < 2; ++k) {
      const DartId d = PlanarGraph::dart_of(e, k);
      if (g.is_outer_dart(d)) continue;
      const FaceId f = g.face_left(d);
      if (!seen.insert(f).second) continue;
      out.emplace_back(f, g.face_vertices(d));
    }
  }
  return out;
}

// Reference semantics, recomputed from the embedding alone:
//   F(f,i) = exterior vertices of f on side i
//   V(w,i) = faces containing interior w and some side-i vertex
//   P{i,j} = faces with v on side i, w on side j, (v,w) not an outer edge
void validate_frame(const PlanarGraph& g, const CornerFrame& fr) {
  const auto cycles = interior_face_cycles(g);
  std::array<std::set<FaceId>, 6> p_expected;
  for (const auto& [f, cyc] : cycles) {
    for (int i = 0; i < 4; ++i) {
      std::vector<VertexId> side_members;
      for (const VertexId a : cyc) {
        if (g.is_exterior(a) && fr.on_side(a, i)) side_members.push_back(a);
      }
      REQUIRE(side_members.size() <= 2);
      CHECK(fr.f_count(f, i) == static_cast<int>(side_members.size()));
      for (const VertexId a : side_members) CHECK(fr.f_has(f, i, a));
      for (int j = i + 1; j < 4; ++j) {
        for (const VertexId a : cyc) {
          if (!g.is_exterior(a) || !fr.on_side(a, i)) continue;
          for (const VertexId b : cyc) {
            if (b == a || !g.is_exterior(b) || !fr.on_side(b, j)) continue;
            if (g.ccw_boundary_next(a) == b || g.cw_boundary_next(a) == b)
              continue;
            p_expected[static_cast<size_t>(pair_index(i, j))].insert(f);
          }
        }
      }
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const std::vector<FaceId> got = p_list(fr, i, j);
      const std::set<FaceId> got_set(got.begin(), got.end());
      CHECK(got_set.size() == got.size());
      CHECK(got_set == p_expected[static_cast<size_t>(pair_index(i, j))]);
    }
  }
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (g.is_exterior(w)) continue;
    for (int i = 0; i < 4; ++i) {
      std::set<FaceId> expect;
      for (const auto& [f, cyc] : cycles) {
        if (std::find(cyc.begin(), cyc.end(), w) == cyc.end()) continue;
        for (const VertexId a : cyc) {
          if (g.is_exterior(a) && fr.on_side(a, i)) expect.insert(f);
        }
      }
      const std::vector<FaceId> got = v_list(fr, w, i);
      const std::set<FaceId> got_set(got.begin(), got.end());
      CHECK(got_set.size() == got.size());
      CHECK(got_set == expect);
    }
  }
}

}  // namespace

TEST_CASE("pair_index is a symmetric bijection") {
  std::set<int> seen;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      CHECK(pair_index(i, j) == pair_index(j, i));
      if (i < j) seen.insert(pair_index(i, j));
    }
  }
  CHECK(seen == std::set<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("square: all corners, single face carries every list") {
  PlanarGraph g = make_square();
  CornerFrame fr(g, true);
  fr.initialize({0, 1, 2, 3}, 0);

  const FaceId q = face_between(g, 0, 1);

  for (VertexId v = 0; v < 4; ++v) {
    // every vertex is a corner: member of its own side and the previous one
    CHECK(fr.side_bits(v) == ((1 << v) | (1 << ((v + 3) & 3))));
  }
  for (int i = 0; i < 4; ++i) {
    REQUIRE(fr.f_count(q, i) == 2);
    CHECK(fr.f_entry(q, i, 0) == i);
    CHECK(fr.f_entry(q, i, 1) == ((i + 1) & 3));
  }
  // no interior vertices
  for (VertexId v = 0; v < 4; ++v) {
    for (int i = 0; i < 4; ++i) CHECK(fr.v_empty(v, i));
  }
  // the two corner diagonals are cutting pairs, q witnesses them for every
  // side combination
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      CHECK(p_list(fr, i, j) == std::vector<FaceId>{q});
    }
  }
  validate_frame(g, fr);
  CHECK(fr.compare_with_rebuild().empty());
}

TEST_CASE("two squares: both faces witness the left-right pairs") {
  PlanarGraph g = make_two_squares();
  CornerFrame fr(g, true);
  fr.initialize({0, 4, 5, 3}, 0);
  // sides: S0 = {0,1,4}, S1 = {4,5}, S2 = {5,2,3}, S3 = {3,0}

  const FaceId qa = face_between(g, 0, 1);
  const FaceId qb = face_between(g, 1, 4);
  REQUIRE(qa != qb);

  CHECK(fr.f_count(qa, 0) == 2);
  CHECK(fr.f_first(qa, 0) == 0);
  CHECK(fr.f_last(qa, 0) == 1);
  CHECK(fr.f_count(qa, 1) == 0);
  CHECK(fr.f_count(qa, 2) == 2);
  CHECK(fr.f_first(qa, 2) == 2);
  CHECK(fr.f_count(qb, 0) == 2);
  CHECK(fr.f_first(qb, 0) == 1);
  CHECK(fr.f_last(qb, 0) == 4);
  CHECK(fr.f_count(qb, 2) == 2);
  CHECK(fr.f_first(qb, 2) == 5);
  CHECK(fr.f_last(qb, 2) == 2);

  // left-right witnesses in side-0 order: qa discovered at 0, qb at 1
  CHECK(p_list(fr, 0, 2) == std::vector<FaceId>{qa, qb});
  CHECK(fr.p_first(0, 2) == qa);
  CHECK(fr.p_last(0, 2) == qb);
  // the reversed read runs along side 2
  CHECK(fr.p_first(2, 0) == qb);
  CHECK(fr.p_last(2, 0) == qa);
  CHECK(p_list(fr, 0, 1) == std::vector<FaceId>{qb});
  CHECK(p_list(fr, 0, 3) == std::vector<FaceId>{qa});
  CHECK(p_list(fr, 1, 2) == std::vector<FaceId>{qb});
  CHECK(fr.p_empty(1, 3));
  CHECK(p_list(fr, 2, 3) == std::vector<FaceId>{qa});

  validate_frame(g, fr);
  CHECK(fr.compare_with_rebuild().empty());
}

TEST_CASE("wheel: hub face lists ordered along each side") {
  PlanarGraph g = make_wheel6();
  CornerFrame fr(g, true);
  fr.initialize({0, 1, 3, 4}, 0);
  // sides: S0 = {0,1}, S1 = {1,2,3}, S2 = {3,4}, S3 = {4,5,0}

  std::array<FaceId, 6> t{};
  for (int k = 0; k < 6; ++k) t[static_cast<size_t>(k)] = face_between(g, 6, k);

  CHECK(v_list(fr, 6, 0) == std::vector<FaceId>{t[5], t[0], t[1]});
  CHECK(v_list(fr, 6, 1) == std::vector<FaceId>{t[0], t[1], t[2], t[3]});
  CHECK(v_list(fr, 6, 2) == std::vector<FaceId>{t[2], t[3], t[4]});
  CHECK(v_list(fr, 6, 3) == std::vector<FaceId>{t[3], t[4], t[5], t[0]});
  CHECK(fr.v_first_face(6, 0) == t[5]);
  CHECK(fr.v_last_face(6, 0) == t[1]);

  // rim vertices sharing a triangle are consecutive on the boundary, so no
  // cutting-pair witnesses exist
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) CHECK(fr.p_empty(i, j));
  }
  validate_frame(g, fr);
  CHECK(fr.compare_with_rebuild().empty());
}

TEST_CASE("octahedron: degenerate side and interior vertices") {
  PlanarGraph g = make_octahedron();
  CornerFrame fr(g, true);
  fr.initialize({0, 0, 1, 2}, 0);
  // S0 = {0}, S1 = {0,1}, S2 = {1,2}, S3 = {2,0}

  CHECK(fr.side_bits(0) == 0b1011);
  CHECK(fr.side_bits(1) == 0b0110);
  CHECK(fr.side_bits(2) == 0b1100);
  for (VertexId w : {3, 4, 5}) {
    CHECK(!g.is_exterior(w));
    int nonempty = 0;
    for (int i = 0; i < 4; ++i) nonempty += fr.v_empty(w, i) ? 0 : 1;
    CHECK(nonempty > 0);
  }
  validate_frame(g, fr);
  CHECK(fr.compare_with_rebuild().empty());
}

TEST_CASE("re-scanning settled sides changes nothing") {
  PlanarGraph g = make_two_squares();
  CornerFrame fr(g, true);
  fr.initialize({0, 4, 5, 3}, 0);

  const long long events = fr.counters().vertex_events;
  const std::vector<FaceId> p02 = p_list(fr, 0, 2);
  const std::vector<FaceId> p12 = p_list(fr, 1, 2);

  for (int i = 0; i < 4; ++i) {
    fr.scan_side(i, fr.corner(i), fr.corner((i + 1) & 3), true, false);
  }
  CHECK(fr.counters().vertex_events == events);
  CHECK(p_list(fr, 0, 2) == p02);
  CHECK(p_list(fr, 1, 2) == p12);
  CHECK(fr.compare_with_rebuild().empty());
}

TEST_CASE("list surgery journals and rewinds") {
  PlanarGraph g = make_two_squares();
  CornerFrame fr(g, true);
  fr.initialize({0, 4, 5, 3}, 0);

  const FaceId qa = face_between(g, 0, 1);
  const FaceId qb = face_between(g, 1, 4);
  REQUIRE(p_list(fr, 0, 2) == std::vector<FaceId>{qa, qb});

  SUBCASE("bulk clear invalidates stale nodes") {
    const Journal::Mark m = g.mark();
    const CornerFrame::NodeRef stale = fr.p_find(0, 2, qa);
    REQUIRE(stale != kNone);
    fr.p_bulk_clear(0, 2);
    CHECK(fr.p_empty(0, 2));
    CHECK(fr.p_find(0, 2, qa) == kNone);
    CHECK(!fr.p_node_valid(stale));
    // re-recording after a clear starts a fresh generation
    fr.p_record(0, 2, qb, true);
    CHECK(p_list(fr, 0, 2) == std::vector<FaceId>{qb});
    g.restore_to(m);
    CHECK(p_list(fr, 0, 2) == std::vector<FaceId>{qa, qb});
    CHECK(fr.p_node_valid(stale));
  }

  SUBCASE("prefix and suffix cuts") {
    const Journal::Mark m = g.mark();
    fr.p_keep_prefix(0, 2, fr.p_find(0, 2, qa));
    CHECK(p_list(fr, 0, 2) == std::vector<FaceId>{qa});
    g.restore_to(m);
    fr.p_keep_suffix(0, 2, fr.p_find(0, 2, qb));
    CHECK(p_list(fr, 0, 2) == std::vector<FaceId>{qb});
    g.restore_to(m);
    CHECK(p_list(fr, 0, 2) == std::vector<FaceId>{qa, qb});
  }

  SUBCASE("unlink middle node keeps neighbours linked") {
    const Journal::Mark m = g.mark();
    fr.p_unlink(fr.p_find(0, 2, qa));
    CHECK(p_list(fr, 0, 2) == std::vector<FaceId>{qb});
    CHECK(fr.p_find(0, 2, qa) == kNone);
    g.restore_to(m);
    CHECK(p_list(fr, 0, 2) == std::vector<FaceId>{qa, qb});
  }
}

TEST_CASE("oracle frame leaves no journal residue") {
  PlanarGraph g = make_wheel6();
  CornerFrame fr(g, true);
  fr.initialize({0, 1, 3, 4}, 0);
  const Journal::Mark m = g.mark();
  CHECK(fr.compare_with_rebuild().empty());
  CHECK(g.mark() == m);
}
