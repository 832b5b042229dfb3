#pragma once

#include <string>
#include <vector>

#include "tutte/planar_graph.hpp"
#include "tutte/result.hpp"

namespace tutte {

// Plain rotation-system description of an embedded graph: per-vertex ccw
// neighbor lists plus the ccw outer cycle.  This is the exchange form for
// files and generators; PlanarGraph is built from it.
struct EmbeddedGraph {
  std::int32_t n = 0;
  std::vector<std::vector<VertexId>> rotations;
  std::vector<VertexId> outer;

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;
};

// Text format:
//   line 1:        n m
//   lines 2..n+1:  vertex id followed by its ccw neighbor list
//   last line:     "outer" followed by the ccw outer cycle
EmbeddedGraph parse_pgr(const std::string& text);
std::string to_pgr(const EmbeddedGraph& g);

// JSON object with keys "n", "rotations", "outer".
EmbeddedGraph parse_graph_json(const std::string& text);
std::string to_graph_json(const EmbeddedGraph& g);

// Accepts either format, sniffing on the first non-space byte.
EmbeddedGraph parse_graph_auto(const std::string& text);

// Validates the description and constructs the embedding; the declared
// outer cycle must match the actual boundary walk.
PlanarGraph build_embedding(const EmbeddedGraph& spec);

// Reads the active structure back out.  Exterior rings are listed from
// the dart after the outer corner, so the result is canonical for the
// piece whose boundary passes through boundary_start.
EmbeddedGraph snapshot(const PlanarGraph& g, VertexId boundary_start);

// Solver output as JSON.  Keys: "flavor", "u", "x", "alpha" (pair),
// "path", "bridges" (objects with "vertices" and "attachments"), "sdr",
// "case_trace", "counters".  The problem statement travels with the
// answer so a checker needs nothing else.
std::string to_result_json(const TutteResult& r);
TutteResult parse_result_json(const std::string& text);

}  // namespace tutte
