#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tutte/planar_graph.hpp"
#include "tutte/result.hpp"

namespace tutte {

// One checked clause; name is stable and machine-readable.
struct VerifyClause {
  std::string name;
  bool pass = true;
  std::string detail;  // violating object on failure
};

struct VerifyReport {
  bool pass = true;
  std::vector<VerifyClause> clauses;

  const VerifyClause* find(const std::string& name) const;
  bool clause_failed(const std::string& name) const;
};

// Bridges of the path, recomputed from scratch: connected components of
// G minus the path vertices, each with its sorted attachment set.
// Canonical order (components sorted, list sorted by first vertex).
std::vector<TutteBridge> compute_bridges(const PlanarGraph& g,
                                         const std::vector<VertexId>& path);

// Checks every clause of the declared flavor against the graph.  Never
// throws; a malformed result fails its clause instead.  Clause names:
//   path_simple, endpoints, required_edge, bridge_census,
//   bridge_attachments, exterior_bridge_attachments, sdr_valid,
//   sdr_injective, visits_exterior, representative_interior,
//   representative_placement, end_tail
VerifyReport verify_tutte_path(const PlanarGraph& g, const TutteResult& r,
                               Flavor flavor);

// Exhaustive witness search: simple u -> x paths through edge
// (alpha_v, alpha_w), filtered by the flavor clauses, with representative
// assignment decided by bipartite matching.  Returns the first witness in
// DFS order (neighbors ascending) or definitive absence.
// Errc::TooLarge above max_n.
std::optional<TutteResult> brute_force_tutte_path(const PlanarGraph& g,
                                                  VertexId u, VertexId x,
                                                  VertexId alpha_v,
                                                  VertexId alpha_w,
                                                  Flavor flavor,
                                                  std::int32_t max_n = 14);

// Scaling audit over one instance family.
struct AuditSample {
  long long n = 0;
  long long total_work = 0;   // counted scan steps
  long long sum_deg_fp = 0;   // sum of deg(f) over faces incident to path
  long long max_vertex_scans = 0;
  double wall_ms = 0.0;
};

struct AuditReport {
  std::vector<double> ratios;  // total_work / sum_deg_fp per sample
  double mean_ratio = 0.0;
  double max_rel_dev = 0.0;  // max |ratio - mean| / mean
  long long max_vertex_scans = 0;
  std::vector<double> wall_doubling;  // wall_ms[i+1] / wall_ms[i]

  bool ratios_stable(double tol) const { return max_rel_dev <= tol; }
};

// Errc::InsufficientData below four samples.
AuditReport audit_linearity(const std::vector<AuditSample>& samples);

}  // namespace tutte
