#include "tutte/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace tutte {
namespace {

std::vector<std::vector<VertexId>> sorted_adjacency(const PlanarGraph& g) {
  std::vector<std::vector<VertexId>> adj(
      static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    NodeId start = g.any_node_of(v);
    NodeId c = start;
    do {
      if (!g.is_gap_node(c)) adj[static_cast<std::size_t>(v)].push_back(
          g.target(g.dart_at(c)));
      c = g.ring_next(c);
    } while (c != start);
    std::sort(adj[static_cast<std::size_t>(v)].begin(),
              adj[static_cast<std::size_t>(v)].end());
  }
  return adj;
}

bool edge_is_exterior(const PlanarGraph& g, DartId d) {
  return g.is_outer_dart(d) || g.is_outer_dart(PlanarGraph::twin(d));
}

// True iff some edge of the bridge (component-internal or component-to-
// attachment) lies on the outer face.
bool bridge_has_exterior_edge(const PlanarGraph& g, const TutteBridge& b,
                              const std::vector<char>& on_path) {
  std::set<VertexId> comp(b.vertices.begin(), b.vertices.end());
  for (VertexId v : b.vertices) {
    NodeId start = g.any_node_of(v);
    NodeId c = start;
    do {
      if (!g.is_gap_node(c)) {
        DartId d = g.dart_at(c);
        VertexId t = g.target(d);
        if ((comp.count(t) || on_path[static_cast<std::size_t>(t)]) &&
            edge_is_exterior(g, d))
          return true;
      }
      c = g.ring_next(c);
    } while (c != start);
  }
  return false;
}

std::string show_vertices(const std::vector<VertexId>& vs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  out << ']';
  return out.str();
}

std::vector<TutteBridge> canonical(std::vector<TutteBridge> bs) {
  for (auto& b : bs) {
    std::sort(b.vertices.begin(), b.vertices.end());
    std::sort(b.attachments.begin(), b.attachments.end());
  }
  std::sort(bs.begin(), bs.end(), [](const TutteBridge& a, const TutteBridge& b) {
    return a.vertices < b.vertices;
  });
  return bs;
}

// Injective bridge -> representative assignment via augmenting paths.
bool pick_representatives(const std::vector<std::vector<VertexId>>& admissible,
                          std::vector<VertexId>& out) {
  std::map<VertexId, std::size_t> owner;
  std::function<bool(std::size_t, std::set<VertexId>&)> augment =
      [&](std::size_t i, std::set<VertexId>& seen) {
        for (VertexId r : admissible[i]) {
          if (seen.count(r)) continue;
          seen.insert(r);
          auto it = owner.find(r);
          if (it == owner.end() || augment(it->second, seen)) {
            owner[r] = i;
            return true;
          }
        }
        return false;
      };
  for (std::size_t i = 0; i < admissible.size(); ++i) {
    std::set<VertexId> seen;
    if (!augment(i, seen)) return false;
  }
  out.assign(admissible.size(), kNone);
  for (const auto& [r, i] : owner) out[i] = r;
  return true;
}

}  // namespace

const VerifyClause* VerifyReport::find(const std::string& name) const {
  for (const auto& c : clauses)
    if (c.name == name) return &c;
  return nullptr;
}

bool VerifyReport::clause_failed(const std::string& name) const {
  const VerifyClause* c = find(name);
  return c != nullptr && !c->pass;
}

std::vector<TutteBridge> compute_bridges(const PlanarGraph& g,
                                         const std::vector<VertexId>& path) {
  std::int32_t n = g.vertex_count();
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  for (VertexId v : path)
    if (v >= 0 && v < n) on_path[static_cast<std::size_t>(v)] = 1;

  std::vector<char> visited = on_path;
  std::vector<TutteBridge> out;
  for (VertexId seed = 0; seed < n; ++seed) {
    if (visited[static_cast<std::size_t>(seed)]) continue;
    TutteBridge b;
    std::set<VertexId> att;
    std::vector<VertexId> queue{seed};
    visited[static_cast<std::size_t>(seed)] = 1;
    while (!queue.empty()) {
      VertexId v = queue.back();
      queue.pop_back();
      b.vertices.push_back(v);
      NodeId start = g.any_node_of(v);
      NodeId c = start;
      do {
        if (!g.is_gap_node(c)) {
          VertexId t = g.target(g.dart_at(c));
          if (on_path[static_cast<std::size_t>(t)]) {
            att.insert(t);
          } else if (!visited[static_cast<std::size_t>(t)]) {
            visited[static_cast<std::size_t>(t)] = 1;
            queue.push_back(t);
          }
        }
        c = g.ring_next(c);
      } while (c != start);
    }
    b.attachments.assign(att.begin(), att.end());
    std::sort(b.vertices.begin(), b.vertices.end());
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const TutteBridge& a, const TutteBridge& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

VerifyReport verify_tutte_path(const PlanarGraph& g, const TutteResult& r,
                               Flavor flavor) {
  VerifyReport rep;
  auto add = [&](const std::string& name, bool pass, const std::string& why) {
    rep.clauses.push_back(VerifyClause{name, pass, pass ? "" : why});
    rep.pass = rep.pass && pass;
  };
  std::int32_t n = g.vertex_count();
  auto in_range = [&](VertexId v) { return v >= 0 && v < n; };

  // path_simple
  {
    bool ok = !r.path.empty();
    std::string why = ok ? "" : "empty path";
    std::set<VertexId> seen;
    for (std::size_t i = 0; ok && i < r.path.size(); ++i) {
      VertexId v = r.path[i];
      if (!in_range(v)) {
        ok = false;
        why = "vertex out of range: " + std::to_string(v);
      } else if (!seen.insert(v).second) {
        ok = false;
        why = "repeated vertex: " + std::to_string(v);
      } else if (i > 0 && g.dart_between(r.path[i - 1], v) == kNone) {
        ok = false;
        why = "consecutive vertices not adjacent: " +
              std::to_string(r.path[i - 1]) + "," + std::to_string(v);
      }
    }
    add("path_simple", ok, why);
    if (!ok) return rep;
  }

  add("endpoints",
      in_range(r.u) && in_range(r.x) && r.path.front() == r.u &&
          r.path.back() == r.x,
      "path runs " + std::to_string(r.path.front()) + " -> " +
          std::to_string(r.path.back()) + ", declared " + std::to_string(r.u) +
          " -> " + std::to_string(r.x));

  // required_edge
  {
    bool ok = in_range(r.alpha_v) && in_range(r.alpha_w);
    std::string why = "alpha endpoints out of range";
    if (ok) {
      DartId d = g.dart_between(r.alpha_v, r.alpha_w);
      ok = d != kNone && edge_is_exterior(g, d);
      why = "alpha is not an exterior edge";
    }
    if (ok) {
      ok = false;
      for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
        VertexId a = r.path[i], b = r.path[i + 1];
        if ((a == r.alpha_v && b == r.alpha_w) ||
            (a == r.alpha_w && b == r.alpha_v))
          ok = true;
      }
      why = "path does not traverse alpha";
    }
    if (ok && flavor == Flavor::End) {
      ok = r.path.size() >= 2 && r.path[r.path.size() - 2] == r.alpha_w;
      why = "last path edge is not (alpha_w, x)";
    }
    add("required_edge", ok, why);
  }

  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  for (VertexId v : r.path) on_path[static_cast<std::size_t>(v)] = 1;
  std::vector<TutteBridge> computed = compute_bridges(g, r.path);

  {
    std::vector<TutteBridge> claimed = canonical(r.bridges);
    bool ok = claimed == computed;
    std::string why = "claimed bridge list disagrees with recomputation (" +
                      std::to_string(claimed.size()) + " vs " +
                      std::to_string(computed.size()) + " bridges)";
    add("bridge_census", ok, why);
  }

  {
    bool ok = true;
    std::string why;
    for (const auto& b : computed) {
      if (b.attachments.size() > 3) {
        ok = false;
        why = "bridge " + show_vertices(b.vertices) + " has " +
              std::to_string(b.attachments.size()) + " attachments";
        break;
      }
    }
    add("bridge_attachments", ok, why);
  }

  {
    bool ok = true;
    std::string why;
    for (const auto& b : computed) {
      if (b.attachments.size() > 2 && bridge_has_exterior_edge(g, b, on_path)) {
        ok = false;
        why = "bridge " + show_vertices(b.vertices) +
              " contains exterior edges but has " +
              std::to_string(b.attachments.size()) + " attachments";
        break;
      }
    }
    add("exterior_bridge_attachments", ok, why);
  }

  // sdr_valid: representatives are attachments of their claimed bridges.
  {
    bool ok = r.sdr.size() == r.bridges.size();
    std::string why = "sdr and bridge counts differ";
    for (std::size_t i = 0; ok && i < r.sdr.size(); ++i) {
      const auto& att = r.bridges[i].attachments;
      if (std::find(att.begin(), att.end(), r.sdr[i]) == att.end()) {
        ok = false;
        why = "representative " + std::to_string(r.sdr[i]) +
              " is not an attachment of bridge " +
              show_vertices(r.bridges[i].vertices);
      }
    }
    add("sdr_valid", ok, why);
  }

  {
    std::set<VertexId> reps(r.sdr.begin(), r.sdr.end());
    add("sdr_injective", reps.size() == r.sdr.size(),
        "duplicate representative");
  }

  if (flavor == Flavor::Int || flavor == Flavor::End) {
    bool ok = true;
    std::string why;
    for (VertexId v = 0; v < n; ++v) {
      if (g.is_exterior(v) && !on_path[static_cast<std::size_t>(v)]) {
        ok = false;
        why = "exterior vertex " + std::to_string(v) + " not visited";
        break;
      }
    }
    add("visits_exterior", ok, why);
  }

  if (flavor == Flavor::Int) {
    bool ok = true;
    std::string why;
    for (VertexId rep : r.sdr) {
      if (!in_range(rep) || g.is_exterior(rep)) {
        ok = false;
        why = "representative " + std::to_string(rep) + " is exterior";
        break;
      }
    }
    add("representative_interior", ok, why);
  }

  if (flavor == Flavor::End) {
    bool ok = true;
    std::string why;
    for (VertexId rep : r.sdr) {
      if (!in_range(rep) || (g.is_exterior(rep) && rep != r.x)) {
        ok = false;
        why = "representative " + std::to_string(rep) +
              " is exterior and not the last vertex";
        break;
      }
    }
    add("representative_placement", ok, why);

    ok = true;
    why = "";
    for (std::size_t i = 0; i < r.sdr.size() && i < r.bridges.size(); ++i) {
      if (r.sdr[i] != r.x) continue;
      const auto& att = r.bridges[i].attachments;
      bool has_w = std::find(att.begin(), att.end(), r.alpha_w) != att.end();
      bool has_x = std::find(att.begin(), att.end(), r.x) != att.end();
      if (!has_w || !has_x) {
        ok = false;
        why = "bridge " + show_vertices(r.bridges[i].vertices) +
              " takes the last vertex as representative without attaching to "
              "both ends of the final edge";
        break;
      }
    }
    add("end_tail", ok, why);
  }

  return rep;
}

std::optional<TutteResult> brute_force_tutte_path(const PlanarGraph& g,
                                                  VertexId u, VertexId x,
                                                  VertexId alpha_v,
                                                  VertexId alpha_w,
                                                  Flavor flavor,
                                                  std::int32_t max_n) {
  std::int32_t n = g.vertex_count();
  TUTTE_CHECK(n <= max_n, Errc::TooLarge,
              "oracle limited to " + std::to_string(max_n) + " vertices");
  TUTTE_CHECK(u >= 0 && u < n && x >= 0 && x < n && u != x, Errc::BadInput,
              "oracle endpoints invalid");
  TUTTE_CHECK(alpha_v >= 0 && alpha_v < n && alpha_w >= 0 && alpha_w < n,
              Errc::BadInput, "alpha invalid");
  DartId alpha_dart = g.dart_between(alpha_v, alpha_w);
  if (alpha_dart == kNone || !edge_is_exterior(g, alpha_dart))
    return std::nullopt;

  std::vector<std::vector<VertexId>> adj = sorted_adjacency(g);
  std::vector<VertexId> exterior;
  for (VertexId v = 0; v < n; ++v)
    if (g.is_exterior(v)) exterior.push_back(v);

  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> path{u};
  visited[static_cast<std::size_t>(u)] = 1;
  std::optional<TutteResult> found;

  auto accept = [&]() -> bool {
    if (flavor == Flavor::End &&
        (path.size() < 2 || path[path.size() - 2] != alpha_w))
      return false;
    if (flavor == Flavor::Int || flavor == Flavor::End) {
      for (VertexId v : exterior)
        if (!visited[static_cast<std::size_t>(v)]) return false;
    }
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    for (VertexId v : path) on_path[static_cast<std::size_t>(v)] = 1;
    std::vector<TutteBridge> bridges = compute_bridges(g, path);
    std::vector<std::vector<VertexId>> admissible;
    for (const auto& b : bridges) {
      if (b.attachments.size() > 3) return false;
      if (b.attachments.size() > 2 && bridge_has_exterior_edge(g, b, on_path))
        return false;
      std::vector<VertexId> adm;
      for (VertexId r : b.attachments) {
        bool interior = !g.is_exterior(r);
        bool ok = false;
        switch (flavor) {
          case Flavor::Sdr: ok = true; break;
          case Flavor::Int: ok = interior; break;
          case Flavor::End:
            // The last vertex is admissible only when the bridge also
            // attaches to the other end of the final edge.
            ok = interior ||
                 (r == x &&
                  std::find(b.attachments.begin(), b.attachments.end(),
                            alpha_w) != b.attachments.end());
            break;
        }
        if (ok) adm.push_back(r);
      }
      admissible.push_back(std::move(adm));
    }
    std::vector<VertexId> sdr;
    if (!pick_representatives(admissible, sdr)) return false;
    TutteResult r;
    r.flavor = flavor;
    r.u = u;
    r.x = x;
    r.alpha_v = alpha_v;
    r.alpha_w = alpha_w;
    r.path = path;
    r.bridges = std::move(bridges);
    r.sdr = std::move(sdr);
    found = std::move(r);
    return true;
  };

  std::function<bool(VertexId, bool)> dfs = [&](VertexId v,
                                                bool used_alpha) -> bool {
    if (v == x) return used_alpha && accept();
    for (VertexId w : adj[static_cast<std::size_t>(v)]) {
      if (visited[static_cast<std::size_t>(w)]) continue;
      bool ua = used_alpha || (v == alpha_v && w == alpha_w) ||
                (v == alpha_w && w == alpha_v);
      visited[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      // Once both alpha endpoints are interior to the walk without the
      // edge itself, no extension can ever use it.
      bool dead = !ua && visited[static_cast<std::size_t>(alpha_v)] &&
                  visited[static_cast<std::size_t>(alpha_w)];
      if (!dead && dfs(w, ua)) return true;
      path.pop_back();
      visited[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };

  dfs(u, false);
  return found;
}

AuditReport audit_linearity(const std::vector<AuditSample>& samples) {
  TUTTE_CHECK(samples.size() >= 4, Errc::InsufficientData,
              "need at least four samples");
  AuditReport rep;
  double sum = 0.0;
  for (const auto& s : samples) {
    TUTTE_CHECK(s.sum_deg_fp > 0, Errc::InsufficientData,
                "sample without face-degree mass");
    rep.ratios.push_back(static_cast<double>(s.total_work) /
                         static_cast<double>(s.sum_deg_fp));
    sum += rep.ratios.back();
    rep.max_vertex_scans = std::max(rep.max_vertex_scans, s.max_vertex_scans);
  }
  rep.mean_ratio = sum / static_cast<double>(rep.ratios.size());
  for (double r : rep.ratios)
    rep.max_rel_dev = std::max(
        rep.max_rel_dev, std::abs(r - rep.mean_ratio) / rep.mean_ratio);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i)
    rep.wall_doubling.push_back(samples[i].wall_ms > 0.0
                                    ? samples[i + 1].wall_ms / samples[i].wall_ms
                                    : 0.0);
  return rep;
}

}  // namespace tutte
