#include "tutte/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace tutte {
namespace {

void check_vertex_range(VertexId v, std::int32_t n) {
  TUTTE_CHECK(v >= 0 && v < n, Errc::BadInput, "vertex id out of range");
}

void check_shape(const EmbeddedGraph& g) {
  TUTTE_CHECK(g.n >= 1, Errc::BadInput, "vertex count must be positive");
  TUTTE_CHECK(static_cast<std::int32_t>(g.rotations.size()) == g.n,
              Errc::BadInput, "one rotation list per vertex required");
  for (const auto& ring : g.rotations)
    for (VertexId u : ring) check_vertex_range(u, g.n);
  TUTTE_CHECK(!g.outer.empty(), Errc::BadInput, "outer cycle missing");
  for (VertexId u : g.outer) check_vertex_range(u, g.n);
}

}  // namespace

EmbeddedGraph parse_pgr(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  TUTTE_CHECK(next_line(), Errc::BadInput, "empty graph file");
  std::int32_t n = 0;
  long long m = -1;
  {
    std::istringstream hdr(line);
    TUTTE_CHECK(static_cast<bool>(hdr >> n >> m), Errc::BadInput,
                "header must be: n m");
  }
  TUTTE_CHECK(n >= 1, Errc::BadInput, "vertex count must be positive");

  EmbeddedGraph g;
  g.n = n;
  g.rotations.resize(static_cast<std::size_t>(n));
  long long listed = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    TUTTE_CHECK(next_line(), Errc::BadInput, "missing vertex line");
    std::istringstream row(line);
    VertexId v = kNone;
    TUTTE_CHECK(static_cast<bool>(row >> v), Errc::BadInput,
                "vertex line must start with its id");
    check_vertex_range(v, n);
    TUTTE_CHECK(g.rotations[static_cast<std::size_t>(v)].empty() && v == i,
                Errc::BadInput, "vertex lines must appear once, in order");
    VertexId u;
    while (row >> u) {
      check_vertex_range(u, n);
      g.rotations[static_cast<std::size_t>(v)].push_back(u);
      ++listed;
    }
  }
  TUTTE_CHECK(listed == 2 * m, Errc::BadInput,
              "edge count does not match neighbor lists");

  TUTTE_CHECK(next_line(), Errc::BadInput, "outer line missing");
  {
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    TUTTE_CHECK(tag == "outer", Errc::BadInput,
                "last line must start with: outer");
    VertexId u;
    while (row >> u) {
      check_vertex_range(u, n);
      g.outer.push_back(u);
    }
    TUTTE_CHECK(!g.outer.empty(), Errc::BadInput, "outer cycle empty");
  }
  TUTTE_CHECK(!next_line(), Errc::BadInput, "trailing content after outer");
  return g;
}

std::string to_pgr(const EmbeddedGraph& g) {
  check_shape(g);
  long long deg_sum = 0;
  for (const auto& ring : g.rotations) deg_sum += static_cast<long long>(ring.size());
  std::ostringstream out;
  out << g.n << ' ' << deg_sum / 2 << '\n';
  for (std::int32_t v = 0; v < g.n; ++v) {
    out << v;
    for (VertexId u : g.rotations[static_cast<std::size_t>(v)]) out << ' ' << u;
    out << '\n';
  }
  out << "outer";
  for (VertexId u : g.outer) out << ' ' << u;
  out << '\n';
  return out.str();
}

EmbeddedGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::BadInput, e.what());
  }
  EmbeddedGraph g;
  try {
    g.n = j.at("n").get<std::int32_t>();
    g.rotations = j.at("rotations").get<std::vector<std::vector<VertexId>>>();
    g.outer = j.at("outer").get<std::vector<VertexId>>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::BadInput, e.what());
  }
  check_shape(g);
  return g;
}

std::string to_graph_json(const EmbeddedGraph& g) {
  check_shape(g);
  nlohmann::json j;
  j["n"] = g.n;
  j["rotations"] = g.rotations;
  j["outer"] = g.outer;
  return j.dump(2) + "\n";
}

EmbeddedGraph parse_graph_auto(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_pgr(text);
  }
  fail(Errc::BadInput, "empty graph file");
}

PlanarGraph build_embedding(const EmbeddedGraph& spec) {
  check_shape(spec);
  TUTTE_CHECK(spec.outer.size() >= 3, Errc::BadOuterFace,
              "outer cycle needs at least three vertices");

  // Check the declared cycle against the rotation lists up front, so the
  // graph can be returned straight from its constructor.  The face left of
  // (first -> last) is traced by (u, v) -> (v, predecessor of u in v's ccw
  // ring), which follows the boundary cw; it must reproduce the declared
  // cycle in reverse.
  std::vector<std::unordered_map<VertexId, std::size_t>> pos(
      static_cast<std::size_t>(spec.n));
  for (std::int32_t v = 0; v < spec.n; ++v) {
    const auto& ring = spec.rotations[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      TUTTE_CHECK(ring[i] != v, Errc::BadInput, "self-loop in rotation list");
      TUTTE_CHECK(pos[static_cast<std::size_t>(v)].emplace(ring[i], i).second,
                  Errc::BadInput, "duplicate neighbor in rotation list");
    }
  }
  VertexId u = spec.outer.front();
  VertexId v = spec.outer.back();
  TUTTE_CHECK(pos[static_cast<std::size_t>(u)].count(v), Errc::BadOuterFace,
              "first and last outer vertices are not adjacent");
  std::vector<VertexId> cw;
  do {
    cw.push_back(u);
    TUTTE_CHECK(cw.size() <= spec.outer.size(), Errc::BadOuterFace,
                "declared outer cycle does not match");
    const auto& ring = spec.rotations[static_cast<std::size_t>(v)];
    std::size_t i = pos[static_cast<std::size_t>(v)].at(u);
    u = v;
    v = ring[(i + ring.size() - 1) % ring.size()];
  } while (u != spec.outer.front() || v != spec.outer.back());
  std::vector<VertexId> expect(spec.outer.rbegin(), spec.outer.rend());
  std::rotate(expect.begin(), expect.end() - 1, expect.end());
  TUTTE_CHECK(cw == expect, Errc::BadOuterFace,
              "declared outer cycle does not match");

  return PlanarGraph(spec.n, spec.rotations, spec.outer.front(),
                     spec.outer.back());
}

EmbeddedGraph snapshot(const PlanarGraph& g, VertexId boundary_start) {
  EmbeddedGraph out;
  out.n = g.vertex_count();
  out.rotations.resize(static_cast<std::size_t>(out.n));
  out.outer = g.outer_walk(boundary_start);
  for (VertexId v = 0; v < out.n; ++v) {
    NodeId start = g.any_node_of(v);
    NodeId c = start;
    auto& ring = out.rotations[static_cast<std::size_t>(v)];
    do {
      if (!g.is_gap_node(c)) ring.push_back(g.target(g.dart_at(c)));
      c = g.ring_next(c);
    } while (c != start);
  }
  return out;
}

std::string to_result_json(const TutteResult& r) {
  nlohmann::json j;
  j["flavor"] = flavor_name(r.flavor);
  j["u"] = r.u;
  j["x"] = r.x;
  j["alpha"] = {r.alpha_v, r.alpha_w};
  j["path"] = r.path;
  j["bridges"] = nlohmann::json::array();
  for (const auto& b : r.bridges)
    j["bridges"].push_back(
        {{"vertices", b.vertices}, {"attachments", b.attachments}});
  j["sdr"] = r.sdr;
  j["case_trace"] = r.case_trace;
  j["counters"] = r.counters;
  return j.dump(2) + "\n";
}

TutteResult parse_result_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::BadInput, e.what());
  }
  TutteResult r;
  try {
    r.flavor = parse_flavor(j.at("flavor").get<std::string>());
    r.u = j.at("u").get<VertexId>();
    r.x = j.at("x").get<VertexId>();
    auto alpha = j.at("alpha").get<std::vector<VertexId>>();
    if (alpha.size() != 2) fail(Errc::BadInput, "alpha must be a pair");
    r.alpha_v = alpha[0];
    r.alpha_w = alpha[1];
    r.path = j.at("path").get<std::vector<VertexId>>();
    for (const auto& jb : j.at("bridges")) {
      TutteBridge b;
      b.vertices = jb.at("vertices").get<std::vector<VertexId>>();
      b.attachments = jb.at("attachments").get<std::vector<VertexId>>();
      r.bridges.push_back(std::move(b));
    }
    r.sdr = j.at("sdr").get<std::vector<VertexId>>();
    r.case_trace = j.at("case_trace").get<std::vector<std::string>>();
    r.counters = j.at("counters").get<std::map<std::string, long long>>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::BadInput, e.what());
  }
  return r;
}

}  // namespace tutte
