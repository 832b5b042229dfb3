#pragma once

#include <vector>

#include "tutte/planar_graph.hpp"

namespace tutte {

// Ordered corner selection on the active boundary: k >= 3 exterior
// vertices listed in ccw outer-face order; corners.front() is the
// distinguished start corner.
struct CornerSet {
  std::vector<VertexId> corners;

  friend bool operator==(const CornerSet&, const CornerSet&) = default;
};

struct CuttingPair {
  VertexId v = kNone;
  VertexId w = kNone;
  FaceId witness_face = kNone;  // interior face containing both
};

struct CuttingTriplet {
  VertexId a = kNone;
  VertexId b = kNone;
  VertexId c = kNone;
  // Common faces along the separating noose, in the order (a,b), (b,c),
  // (c,a); kNone stands for the outer face.
  FaceId face_ab = kNone;
  FaceId face_bc = kNone;
  FaceId face_ca = kNone;
};

struct CuttingSetReport {
  std::vector<CuttingPair> pairs;
  std::vector<CuttingTriplet> triplets;
  // Parallel to pairs once classify_pair_sides ran: index of the side of
  // the corner frame wholly containing the pair, kNone if none.
  std::vector<std::int32_t> side_of;
};

// Plain-adjacency 3-connectivity: connected, n >= 4, and no deletion of
// one or two vertices disconnects the rest.  Quadratic-ish brute force;
// meant for verification and generator filtering, not solving.
bool adjacency_3connected(const std::vector<std::vector<VertexId>>& adj);

// Adjacency lists of the piece whose boundary passes through
// boundary_start (in active-ring ccw order).  Vertices outside the piece
// get empty lists.
std::vector<std::vector<VertexId>> piece_adjacency(const PlanarGraph& g,
                                                   VertexId boundary_start);

bool is_2connected(const PlanarGraph& g, VertexId boundary_start);

// True iff the outer stellation (an apex joined to every exterior
// vertex) is 3-connected.
bool is_internally_3connected(const PlanarGraph& g, VertexId boundary_start);

// True iff the corner stellation (an apex joined to the corners only) is
// 3-connected.  Throws PreconditionViolated if the corner set is not a
// ccw-ordered selection of distinct exterior vertices with k >= 3.
bool is_corner_3connected(const PlanarGraph& g, const CornerSet& c);

// All cutting pairs of the piece, each with an interior witness face.
// Per-vertex articulation sweep, quadratic overall.
CuttingSetReport cutting_pairs(const PlanarGraph& g, VertexId boundary_start);

// All cutting triplets (minimal 3-cuts may include non-minimal ones
// whose removal disconnects; reported exactly as "deletion disconnects").
// Brute force over vertex triples; refuses pieces above max_n.
std::vector<CuttingTriplet> cutting_triplets(const PlanarGraph& g,
                                             VertexId boundary_start,
                                             std::int32_t max_n = 200);

// Fills report.side_of: for each pair, the index i of the boundary side
// corners[i] .. corners[i+1] (inclusive, ccw) containing both vertices,
// else kNone.
void classify_pair_sides(const PlanarGraph& g, const CornerSet& c,
                         CuttingSetReport& report);

// Given corners c1 .. ck (k >= 4) of a corner-3-connected piece, decides
// whether dropping the corner `dropped` (not the first) keeps the piece
// corner-3-connected: no cutting pair may lie wholly on the merged side
// around the dropped corner.
bool check_skip_corner(const PlanarGraph& g, const CornerSet& c,
                       VertexId dropped);

void check_corner_set(const PlanarGraph& g, const CornerSet& c);

}  // namespace tutte
