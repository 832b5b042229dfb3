#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "tutte/planar_graph.hpp"

using namespace tutte;

namespace {

using Rot = std::vector<std::vector<VertexId>>;

PlanarGraph make_triangle() {
  return PlanarGraph(3, Rot{{1, 2}, {2, 0}, {0, 1}}, 0, 2);
}

PlanarGraph make_square() {
  return PlanarGraph(4, Rot{{1, 3}, {2, 0}, {3, 1}, {0, 2}}, 0, 3);
}

PlanarGraph make_square_chord() {
  return PlanarGraph(4, Rot{{1, 2, 3}, {2, 0}, {3, 0, 1}, {0, 2}}, 0, 3);
}

PlanarGraph make_wheel4() {
  return PlanarGraph(
      5, Rot{{1, 4, 3}, {2, 4, 0}, {3, 4, 1}, {0, 4, 2}, {2, 3, 0, 1}}, 0, 3);
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

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;  // sentinel: nothing thrown
}

// Structural snapshot for journal round-trip checks.  Arena sizes are
// allowed to differ after a restore (arenas only grow), so the snapshot
// records only what restore must bring back exactly: active rotation
// rings, boundary walk, face labels of alive interior darts, liveness.
struct Snap {
  std::vector<std::vector<VertexId>> rings;
  std::vector<int> gap_pos;
  std::vector<VertexId> outer;
  std::vector<FaceId> dart_face;
  int alive = 0;

  static Snap of(const PlanarGraph& g, VertexId outer_start) {
    Snap s;
    s.alive = g.alive_edge_count();
    s.outer = g.outer_walk(outer_start);
    s.rings.resize(static_cast<std::size_t>(g.vertex_count()));
    s.gap_pos.resize(static_cast<std::size_t>(g.vertex_count()), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      NodeId start = g.any_node_of(v);
      NodeId c = start;
      int pos = 0;
      do {
        if (g.is_gap_node(c)) {
          s.gap_pos[static_cast<std::size_t>(v)] = pos;
        } else {
          s.rings[static_cast<std::size_t>(v)].push_back(
              g.target(g.dart_at(c)));
        }
        ++pos;
        c = g.ring_next(c);
      } while (c != start);
    }
    for (EdgeId e = 0; e < g.edge_limit(); ++e) {
      if (!g.edge_alive(e)) continue;
      for (int k = 0; k < 2; ++k) {
        DartId d = PlanarGraph::dart_of(e, k);
        s.dart_face.push_back(g.is_outer_dart(d) ? kNone : g.face_left(d));
      }
    }
    return s;
  }

  friend bool operator==(const Snap& a, const Snap& b) {
    return a.rings == b.rings && a.gap_pos == b.gap_pos && a.outer == b.outer &&
           a.dart_face == b.dart_face && a.alive == b.alive;
  }
};

}  // namespace

TEST_CASE("triangle embedding") {
  PlanarGraph g = make_triangle();
  CHECK(g.vertex_count() == 3);
  CHECK(g.alive_edge_count() == 3);
  CHECK(g.face_limit() == 2);
  CHECK(g.outer_walk(0) == std::vector<VertexId>{0, 1, 2});
  CHECK(g.outer_walk(1) == std::vector<VertexId>{1, 2, 0});

  for (VertexId v = 0; v < 3; ++v) {
    CHECK(g.is_exterior(v));
    CHECK(g.degree(v) == 2);
  }

  DartId d01 = g.dart_between(0, 1);
  DartId d02 = g.dart_between(0, 2);
  REQUIRE(d01 != kNone);
  REQUIRE(d02 != kNone);
  CHECK(g.origin(d01) == 0);
  CHECK(g.target(d01) == 1);
  CHECK(g.target(PlanarGraph::twin(d01)) == 0);

  CHECK(!g.is_outer_dart(d01));
  CHECK(g.is_outer_dart(d02));
  CHECK(g.face_vertices(d01) == std::vector<VertexId>{0, 1, 2});
  CHECK(g.face_left(d01) == g.face_left(g.dart_between(1, 2)));
  CHECK(g.face_left(d01) == g.face_left(g.dart_between(2, 0)));

  CHECK(g.ccw_boundary_next(0) == 1);
  CHECK(g.cw_boundary_next(0) == 2);
  CHECK(g.origin(g.outer_dart_at(0)) == 0);
  CHECK(g.target(g.outer_dart_at(0)) == 2);
  CHECK(g.target(g.after_gap_dart(0)) == 1);

  g.validate_active(0);
}

TEST_CASE("construction rejects bad input") {
  // K5 admits no rotation system satisfying Euler's relation.
  Rot k5;
  for (VertexId v = 0; v < 5; ++v) {
    std::vector<VertexId> nb;
    for (VertexId u = 0; u < 5; ++u) {
      if (u != v) nb.push_back(u);
    }
    k5.push_back(nb);
  }
  CHECK(code_of([&] { PlanarGraph g(5, k5, 0, 1); }) == Errc::NotPlanar);

  // Outer spec names a missing edge.
  CHECK(code_of([&] {
          PlanarGraph g(4, Rot{{1, 3}, {2, 0}, {3, 1}, {0, 2}}, 0, 2);
        }) == Errc::BadOuterFace);

  // Bowtie: the face through the shared vertex revisits it.
  CHECK(code_of([&] {
          PlanarGraph g(5, Rot{{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}},
                        2, 1);
        }) == Errc::BadOuterFace);

  // Isolated vertex.
  CHECK(code_of([&] {
          PlanarGraph g(4, Rot{{1, 2}, {2, 0}, {0, 1}, {}}, 0, 2);
        }) == Errc::Disconnected);

  // Parallel edge listed twice on one side.
  CHECK(code_of([&] {
          PlanarGraph g(3, Rot{{1, 1, 2}, {2, 0}, {0, 1}}, 0, 2);
        }) == Errc::BadInput);
}

TEST_CASE("square with chord faces") {
  PlanarGraph g = make_square_chord();
  CHECK(g.face_limit() == 3);
  CHECK(g.outer_walk(0) == std::vector<VertexId>{0, 1, 2, 3});

  DartId d01 = g.dart_between(0, 1);
  DartId d02 = g.dart_between(0, 2);
  FaceId left = g.face_left(d01);
  FaceId right = g.face_left(d02);
  CHECK(left != right);
  CHECK(g.face_vertices(d01) == std::vector<VertexId>{0, 1, 2});
  CHECK(g.face_vertices(d02) == std::vector<VertexId>{0, 2, 3});
  CHECK(g.face_left(g.dart_between(1, 2)) == left);
  CHECK(g.face_left(PlanarGraph::twin(d02)) == left);
  CHECK(g.face_left(g.dart_between(2, 3)) == right);
  CHECK(g.face_left(g.dart_between(3, 0)) == right);
  CHECK(g.dart_at_face(2, right) == g.dart_between(2, 3));
  CHECK(g.dart_between(1, 3) == kNone);

  for (DartId d : {g.dart_between(0, 3), g.dart_between(3, 2),
                   g.dart_between(2, 1), g.dart_between(1, 0)}) {
    CHECK(g.is_outer_dart(d));
  }
  g.validate_active(0);
}

TEST_CASE("octahedron embedding") {
  PlanarGraph g = make_octahedron();
  CHECK(g.face_limit() == 8);
  CHECK(g.alive_edge_count() == 12);
  CHECK(g.outer_walk(0) == std::vector<VertexId>{0, 1, 2});
  for (VertexId v = 0; v < 6; ++v) {
    CHECK(g.degree(v) == 4);
    CHECK(g.is_exterior(v) == (v <= 2));
  }
  // Every face is a triangle.
  for (EdgeId e = 0; e < g.edge_limit(); ++e) {
    for (int k = 0; k < 2; ++k) {
      DartId d = PlanarGraph::dart_of(e, k);
      if (g.is_outer_dart(d)) continue;
      CHECK(g.face_darts(d).size() == 3);
    }
  }
  g.validate_active(0);
}

TEST_CASE("add edge inside a face") {
  PlanarGraph g = make_square();
  FaceId f = g.face_left(g.dart_between(0, 1));
  Snap before = Snap::of(g, 0);
  Journal::Mark m = g.mark();

  AddedEdge ae = g.add_virtual_edge(0, 2, f);
  CHECK(g.origin(ae.forward) == 0);
  CHECK(g.target(ae.forward) == 2);
  CHECK(ae.backward == PlanarGraph::twin(ae.forward));
  CHECK(ae.kept_face == f);
  CHECK(ae.fresh_face != f);
  CHECK(g.edge_virtual(ae.edge));
  CHECK(g.alive_edge_count() == 5);

  // Piece swept ccw from 0's corner keeps f; the other side is fresh.
  CHECK(g.face_left(g.dart_between(0, 1)) == f);
  CHECK(g.face_left(g.dart_between(1, 2)) == f);
  CHECK(g.face_left(ae.backward) == f);
  CHECK(g.face_left(ae.forward) == ae.fresh_face);
  CHECK(g.face_left(g.dart_between(2, 3)) == ae.fresh_face);
  CHECK(g.face_left(g.dart_between(3, 0)) == ae.fresh_face);
  CHECK(g.face_vertices(ae.forward) == std::vector<VertexId>{0, 2, 3});
  CHECK(g.outer_walk(0) == std::vector<VertexId>{0, 1, 2, 3});
  g.validate_active(0);

  g.restore_to(m);
  CHECK(!g.edge_alive(ae.edge));
  CHECK(g.dart_between(0, 2) == kNone);
  CHECK(Snap::of(g, 0) == before);
  g.validate_active(0);
}

TEST_CASE("add edge in face rejections") {
  PlanarGraph g = make_square_chord();
  FaceId left = g.face_left(g.dart_between(0, 1));
  FaceId right = g.face_left(g.dart_between(0, 2));
  CHECK(code_of([&] { g.add_virtual_edge(0, 1, left); }) ==
        Errc::AlreadyAdjacentOnFace);
  CHECK(code_of([&] { g.add_virtual_edge(1, 3, right); }) == Errc::NotOnFace);
  CHECK(code_of([&] {
          g.add_edge_in_face(g.dart_between(0, 1), g.dart_between(2, 3),
                             true);
        }) == Errc::NotOnFace);
}

TEST_CASE("add edge across the outer region") {
  PlanarGraph g = make_square();
  FaceId f = g.face_left(g.dart_between(0, 1));
  Snap before = Snap::of(g, 0);
  Journal::Mark m = g.mark();

  AddedEdge ae = g.add_edge_across_outer(0, 2, true);
  CHECK(ae.kept_face == kNone);
  CHECK(g.origin(ae.forward) == 0);
  CHECK(g.target(ae.forward) == 2);

  // The ccw arc 0 -> 1 -> 2 is enclosed; vertex 1 turns interior.
  CHECK(g.outer_walk(0) == std::vector<VertexId>{0, 2, 3});
  CHECK(!g.is_exterior(1));
  CHECK(g.is_exterior(0));
  CHECK(g.is_exterior(2));
  CHECK(g.face_vertices(ae.forward) == std::vector<VertexId>{0, 2, 1});
  CHECK(g.face_left(ae.forward) == ae.fresh_face);
  CHECK(g.face_left(g.dart_between(0, 1)) == f);
  CHECK(g.face_left(g.dart_between(1, 2)) == f);
  CHECK(g.degree(1) == 2);
  g.validate_active(0);

  CHECK(code_of([&] { g.add_edge_across_outer(0, 2, true); }) ==
        Errc::AlreadyAdjacentOnFace);
  CHECK(code_of([&] { g.add_edge_across_outer(0, 3, true); }) ==
        Errc::AlreadyAdjacentOnFace);
  CHECK(code_of([&] { g.add_edge_across_outer(1, 3, true); }) ==
        Errc::NotExterior);

  g.restore_to(m);
  CHECK(g.is_exterior(1));
  CHECK(Snap::of(g, 0) == before);
  g.validate_active(0);
}

TEST_CASE("delete boundary edge exposes inner vertex") {
  PlanarGraph g = make_wheel4();
  CHECK(g.face_limit() == 5);
  CHECK(g.outer_walk(0) == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(!g.is_exterior(4));
  Snap before = Snap::of(g, 0);
  Journal::Mark m = g.mark();

  DartId d01 = g.dart_between(0, 1);
  EdgeId e01 = PlanarGraph::edge_of(d01);
  g.delete_outer_edge(e01);
  CHECK(!g.edge_alive(e01));
  CHECK(g.alive_edge_count() == 7);
  CHECK(g.outer_walk(0) == std::vector<VertexId>{0, 4, 1, 2, 3});
  CHECK(g.is_exterior(4));
  CHECK(g.degree(0) == 2);
  CHECK(g.dart_between(0, 1) == kNone);
  // The other hub triangles keep their labels.
  CHECK(g.face_left(g.dart_between(1, 2)) ==
        g.face_left(g.dart_between(2, 4)));
  g.validate_active(0);

  g.restore_to(m);
  CHECK(g.edge_alive(e01));
  CHECK(!g.is_exterior(4));
  CHECK(Snap::of(g, 0) == before);
  g.validate_active(0);
}

TEST_CASE("ring split and journal rejoin") {
  PlanarGraph g = make_wheel4();
  Snap before = Snap::of(g, 0);
  Journal::Mark m = g.mark();

  // Divide the hub ring into {4->0, 4->1} and {4->2, 4->3}.
  NodeId c1 = g.node_of(g.dart_between(4, 3));
  NodeId c2 = g.node_of(g.dart_between(4, 1));
  std::vector<NodeId> gaps = g.split_ring(4, {c1, c2});
  REQUIRE(gaps.size() == 2);
  CHECK(gaps[0] != gaps[1]);

  g.set_active_gap(4, gaps[0]);
  CHECK(g.target(g.after_gap_dart(4)) == 0);
  CHECK(g.degree(4) == 2);
  g.set_active_gap(4, gaps[1]);
  CHECK(g.target(g.after_gap_dart(4)) == 2);
  CHECK(g.degree(4) == 2);

  g.restore_to(m);
  CHECK(!g.is_exterior(4));
  CHECK(g.degree(4) == 4);
  CHECK(Snap::of(g, 0) == before);
  g.validate_active(0);
}

TEST_CASE("split along a separating pair and close both pieces") {
  PlanarGraph g = make_square_chord();
  Snap before = Snap::of(g, 0);
  Journal::Mark m = g.mark();

  // Separate along {0, 2}: the chord goes with the inside piece
  // {0, 1, 2}; the outside piece {0, 2, 3} gets a virtual copy.
  std::vector<NodeId> g0 =
      g.split_ring(0, {g.node_of(g.dart_between(0, 2)), g.gap_node(0)});
  std::vector<NodeId> g2 = g.split_ring(
      2, {g.node_of(g.dart_between(2, 3)), g.node_of(g.dart_between(2, 1))});
  NodeId out0 = g0[0];
  NodeId in0 = g0[1];
  NodeId in2 = g2[0];
  NodeId out2 = g2[1];

  g.set_active_gap(0, in0);
  g.set_active_gap(2, in2);
  CHECK(g.outer_walk(0) == std::vector<VertexId>{0, 1, 2});
  CHECK(g.cw_boundary_next(0) == 2);
  CHECK(g.is_outer_dart(g.dart_between(0, 2)));
  g.validate_active(0);

  g.set_active_gap(0, out0);
  g.set_active_gap(2, out2);
  AddedEdge copy = g.add_edge_across_outer(0, 2, true);
  CHECK(g.outer_walk(0) == std::vector<VertexId>{0, 2, 3});
  CHECK(g.is_exterior(3));
  CHECK(g.face_vertices(copy.forward) == std::vector<VertexId>{0, 2, 3});
  g.validate_active(0);

  // The inside piece is still navigable after the outside was closed.
  g.set_active_gap(0, in0);
  g.set_active_gap(2, in2);
  CHECK(g.outer_walk(0) == std::vector<VertexId>{0, 1, 2});
  g.validate_active(0);

  g.restore_to(m);
  CHECK(!g.edge_alive(copy.edge));
  CHECK(Snap::of(g, 0) == before);
  g.validate_active(0);
}

TEST_CASE("nested marks restore in stages") {
  PlanarGraph g(5, Rot{{1, 4}, {2, 0}, {3, 1}, {4, 2}, {0, 3}}, 0, 4);
  FaceId f = g.face_left(g.dart_between(0, 1));
  Snap s0 = Snap::of(g, 0);

  Journal::Mark m1 = g.mark();
  AddedEdge first = g.add_virtual_edge(0, 2, f);
  Snap s1 = Snap::of(g, 0);

  Journal::Mark m2 = g.mark();
  g.add_virtual_edge(2, 4, first.fresh_face);
  CHECK(g.alive_edge_count() == 7);
  CHECK(g.face_vertices(g.dart_between(2, 4)) ==
        std::vector<VertexId>{2, 4, 0});

  g.restore_to(m2);
  CHECK(Snap::of(g, 0) == s1);
  g.restore_to(m1);
  CHECK(Snap::of(g, 0) == s0);
  g.validate_active(0);
}
