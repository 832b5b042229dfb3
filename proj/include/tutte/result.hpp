#pragma once

#include <map>
#include <string>
#include <vector>

#include "tutte/base.hpp"

namespace tutte {

enum class Flavor {
  Sdr,  // Tutte path with representatives anywhere on the path
  Int,  // visits all exterior vertices, representatives interior
  End,  // like Int but the last vertex may serve as a representative
};

inline const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Sdr: return "sdr";
    case Flavor::Int: return "int";
    case Flavor::End: return "end";
  }
  fail(Errc::Internal, "bad flavor");
}

inline Flavor parse_flavor(const std::string& s) {
  if (s == "sdr") return Flavor::Sdr;
  if (s == "int") return Flavor::Int;
  if (s == "end") return Flavor::End;
  fail(Errc::BadInput, "unknown flavor: " + s);
}

// One path bridge: the off-path component plus the path vertices it
// attaches to.  Canonical form keeps both lists sorted and the bridge list
// sorted by component vertices.
struct TutteBridge {
  std::vector<VertexId> vertices;
  std::vector<VertexId> attachments;
  bool operator==(const TutteBridge&) const = default;
};

struct TutteResult {
  Flavor flavor = Flavor::Sdr;
  VertexId u = kNone;        // path start
  VertexId x = kNone;        // path end
  VertexId alpha_v = kNone;  // required outer edge (alpha_v, alpha_w);
  VertexId alpha_w = kNone;  // alpha_w is the end that End-flavor ties to x
  std::vector<VertexId> path;
  std::vector<TutteBridge> bridges;
  std::vector<VertexId> sdr;  // representative per bridge, parallel list
  std::vector<std::string> case_trace;
  std::map<std::string, long long> counters;
};

}  // namespace tutte
