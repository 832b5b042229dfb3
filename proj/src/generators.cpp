#include "tutte/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "tutte/connectivity.hpp"

namespace tutte {
namespace {

std::vector<VertexId> iota_cycle(std::int32_t k) {
  std::vector<VertexId> c(static_cast<std::size_t>(k));
  for (std::int32_t i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

// Inserts value into ring right after the (unique) entry `anchor`.
void insert_after(std::vector<VertexId>& ring, VertexId anchor, VertexId value) {
  auto it = std::find(ring.begin(), ring.end(), anchor);
  TUTTE_IASSERT(it != ring.end(), "anchor missing from rotation list");
  ring.insert(it + 1, value);
}

}  // namespace

EmbeddedGraph gen_triangle() {
  return EmbeddedGraph{3, {{1, 2}, {2, 0}, {0, 1}}, {0, 1, 2}};
}

EmbeddedGraph gen_wheel(std::int32_t rim) {
  TUTTE_CHECK(rim >= 3, Errc::BadInput, "wheel needs at least three rim vertices");
  EmbeddedGraph g;
  g.n = rim + 1;
  g.rotations.resize(static_cast<std::size_t>(g.n));
  for (std::int32_t i = 0; i < rim; ++i)
    g.rotations[static_cast<std::size_t>(i)] = {(i + 1) % rim, rim,
                                                (i + rim - 1) % rim};
  g.rotations[static_cast<std::size_t>(rim)] = iota_cycle(rim);
  g.outer = iota_cycle(rim);
  return g;
}

EmbeddedGraph gen_prism(std::int32_t k) {
  TUTTE_CHECK(k >= 3, Errc::BadInput, "prism needs at least three spokes");
  EmbeddedGraph g;
  g.n = 2 * k;
  g.rotations.resize(static_cast<std::size_t>(g.n));
  for (std::int32_t i = 0; i < k; ++i) {
    std::int32_t next = (i + 1) % k;
    std::int32_t prev = (i + k - 1) % k;
    g.rotations[static_cast<std::size_t>(i)] = {next, i + k, prev};
    g.rotations[static_cast<std::size_t>(i + k)] = {i, next + k, prev + k};
  }
  g.outer = iota_cycle(k);
  return g;
}

EmbeddedGraph gen_nested_triangulation(std::int32_t size) {
  TUTTE_CHECK(size >= 1, Errc::BadInput, "size must be positive");
  std::int32_t shells = std::max<std::int32_t>(1, (size - 1) / 3);
  std::int32_t n = 3 * shells + 1;
  VertexId center = 3 * shells;

  // Shell s carries vertices (s, 0..2), each rotated 60 degrees against
  // shell s - 1 so the annulus between them splits into six triangles.
  // The ccw ring at (s, j) reads ring-next, the two inward neighbors, ring-
  // prev, then the two outward neighbors; both inward slots collapse to the
  // center on the innermost shell.
  auto id = [](std::int32_t s, std::int32_t j) -> VertexId {
    return 3 * s + ((j % 3) + 3) % 3;
  };

  EmbeddedGraph g;
  g.n = n;
  g.rotations.resize(static_cast<std::size_t>(n));
  for (std::int32_t s = 0; s < shells; ++s) {
    for (std::int32_t j = 0; j < 3; ++j) {
      auto& ring = g.rotations[static_cast<std::size_t>(id(s, j))];
      ring.push_back(id(s, j + 1));
      if (s + 1 == shells) {
        ring.push_back(center);
      } else {
        ring.push_back(id(s + 1, j));
        ring.push_back(id(s + 1, j - 1));
      }
      ring.push_back(id(s, j - 1));
      if (s > 0) {
        ring.push_back(id(s - 1, j));
        ring.push_back(id(s - 1, j + 1));
      }
    }
  }
  g.rotations[static_cast<std::size_t>(center)] = {id(shells - 1, 0),
                                                   id(shells - 1, 1),
                                                   id(shells - 1, 2)};
  g.outer = {0, 1, 2};
  return g;
}

EmbeddedGraph gen_random_triangulation(std::int32_t n, std::uint64_t seed) {
  TUTTE_CHECK(n >= 3, Errc::BadInput, "triangulation needs at least n = 3");
  Rng rng(seed);
  EmbeddedGraph g = gen_triangle();
  g.n = n;
  g.rotations.resize(static_cast<std::size_t>(n));

  // Interior faces as ccw triples.
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}};
  for (VertexId v = 3; v < n; ++v) {
    std::size_t pick = static_cast<std::size_t>(
        rng.below(static_cast<std::uint64_t>(faces.size())));
    auto [a, b, c] = faces[pick];
    insert_after(g.rotations[static_cast<std::size_t>(a)], b, v);
    insert_after(g.rotations[static_cast<std::size_t>(b)], c, v);
    insert_after(g.rotations[static_cast<std::size_t>(c)], a, v);
    g.rotations[static_cast<std::size_t>(v)] = {a, b, c};
    faces[pick] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  return g;
}

EmbeddedGraph gen_random_3connected(std::int32_t n, std::uint64_t seed) {
  TUTTE_CHECK(n >= 4, Errc::BadInput, "needs at least n = 4");
  EmbeddedGraph g = gen_random_triangulation(n, seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);

  std::vector<std::pair<VertexId, VertexId>> candidates;
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : g.rotations[static_cast<std::size_t>(v)])
      if (v < u && !(u <= 2 && v <= 2)) candidates.emplace_back(v, u);
  for (std::size_t i = candidates.size(); i > 1; --i)
    std::swap(candidates[i - 1],
              candidates[static_cast<std::size_t>(
                  rng.below(static_cast<std::uint64_t>(i)))]);

  for (auto [v, u] : candidates) {
    if (rng.coin()) continue;
    auto& rv = g.rotations[static_cast<std::size_t>(v)];
    auto& ru = g.rotations[static_cast<std::size_t>(u)];
    std::size_t iv = static_cast<std::size_t>(
        std::find(rv.begin(), rv.end(), u) - rv.begin());
    std::size_t iu = static_cast<std::size_t>(
        std::find(ru.begin(), ru.end(), v) - ru.begin());
    rv.erase(rv.begin() + static_cast<std::ptrdiff_t>(iv));
    ru.erase(ru.begin() + static_cast<std::ptrdiff_t>(iu));
    if (!adjacency_3connected(g.rotations)) {
      rv.insert(rv.begin() + static_cast<std::ptrdiff_t>(iv), u);
      ru.insert(ru.begin() + static_cast<std::ptrdiff_t>(iu), v);
    }
  }
  return g;
}

EmbeddedGraph gen_glued_blocks(std::int32_t size, std::uint64_t seed) {
  TUTTE_CHECK(size >= 3, Errc::BadInput, "needs at least size = 3");
  Rng rng(seed);

  EmbeddedGraph g;
  std::vector<VertexId> walk;

  // Appends a block whose rim runs x, fresh vertices, y; (x, y) must be a
  // ccw-consecutive boundary pair (or kNone on the first call).  The rim
  // path replaces the boundary edge in the walk.
  auto glue = [&](VertexId x, VertexId y, std::int32_t rim, bool wheel,
                  std::size_t walk_pos) {
    std::int32_t base = g.n;
    std::int32_t fresh = rim - (x == kNone ? 0 : 2);
    VertexId hub = wheel ? base + fresh : kNone;
    g.n += fresh + (wheel ? 1 : 0);
    g.rotations.resize(static_cast<std::size_t>(g.n));

    std::vector<VertexId> p(static_cast<std::size_t>(rim));
    if (x == kNone) {
      for (std::int32_t i = 0; i < rim; ++i) p[static_cast<std::size_t>(i)] = i;
    } else {
      p.front() = x;
      p.back() = y;
      for (std::int32_t i = 1; i + 1 < rim; ++i)
        p[static_cast<std::size_t>(i)] = base + i - 1;
    }

    for (std::int32_t i = 0; i < rim; ++i) {
      VertexId me = p[static_cast<std::size_t>(i)];
      VertexId nx = p[static_cast<std::size_t>((i + 1) % rim)];
      VertexId pv = p[static_cast<std::size_t>((i + rim - 1) % rim)];
      auto& ring = g.rotations[static_cast<std::size_t>(me)];
      if (me == x) {
        // New edges occupy the outer sector just before the boundary edge
        // to y.
        auto it = std::find(ring.begin(), ring.end(), y);
        if (wheel) it = ring.insert(it, hub);
        ring.insert(it, nx);
      } else if (me == y) {
        // Mirror image: [x, hub, pv] read ccw.
        insert_after(ring, x, pv);
        if (wheel) insert_after(ring, x, hub);
      } else {
        ring = wheel ? std::vector<VertexId>{nx, hub, pv}
                     : std::vector<VertexId>{nx, pv};
      }
    }
    if (wheel) g.rotations[static_cast<std::size_t>(hub)] = p;

    if (x == kNone) {
      walk = p;
    } else {
      walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(walk_pos) + 1,
                  p.begin() + 1, p.end() - 1);
    }
  };

  glue(kNone, kNone, 3 + rng.below_i(4), rng.coin(), 0);
  while (g.n < size) {
    std::size_t e = static_cast<std::size_t>(
        rng.below(static_cast<std::uint64_t>(walk.size())));
    VertexId x = walk[e];
    VertexId y = walk[(e + 1) % walk.size()];
    glue(x, y, 3 + rng.below_i(4), rng.coin(), e);
  }
  g.outer = walk;
  return g;
}

EmbeddedGraph generate(const std::string& family, std::int32_t size,
                       std::uint64_t seed) {
  if (family == "triangle") return gen_triangle();
  if (family == "wheel") return gen_wheel(std::max(3, size - 1));
  if (family == "prism") return gen_prism(std::max(3, size / 2));
  if (family == "nested-triangulation") return gen_nested_triangulation(size);
  if (family == "random-triangulation")
    return gen_random_triangulation(std::max(3, size), seed);
  if (family == "random-3conn")
    return gen_random_3connected(std::max(4, size), seed);
  if (family == "glued-blocks")
    return gen_glued_blocks(std::max(3, size), seed);
  fail(Errc::UnknownFamily, "unknown family: " + family);
}

}  // namespace tutte
