#pragma once

#include <cstdint>
#include <string>

#include "tutte/io.hpp"

namespace tutte {

// Instance generators.  All of them return embeddings that build_embedding
// accepts; the random families are deterministic in (size, seed).

// Triangle 0-1-2 with outer cycle [0, 1, 2].
EmbeddedGraph gen_triangle();

// Wheel: rim cycle 0..rim-1 (the outer face) plus hub vertex `rim`.
EmbeddedGraph gen_wheel(std::int32_t rim);

// Prism: outer cycle 0..k-1, inner cycle k..2k-1, spokes i -- i+k.
EmbeddedGraph gen_prism(std::int32_t k);

// Concentric triangle shells around a center vertex, annuli fully
// triangulated.  Picks the shell count so the vertex count lands on or just
// under `size`; the result is a maximal planar graph with triangular outer
// face, every vertex on shell s > 0 has degree 6, boundary vertices degree
// 4, the center degree 3.
EmbeddedGraph gen_nested_triangulation(std::int32_t size);

// Random maximal planar graph: repeatedly splits a uniformly chosen
// interior face with a new degree-3 vertex.  Outer face stays [0, 1, 2].
EmbeddedGraph gen_random_triangulation(std::int32_t n, std::uint64_t seed);

// Random 3-connected planar graph: a random triangulation thinned by
// random interior-edge deletions that keep it 3-connected.  Runs the full
// deletion check per candidate edge, so this is for small instances.
EmbeddedGraph gen_random_3connected(std::int32_t n, std::uint64_t seed);

// Random 2-connected plane graph assembled by gluing wheel and cycle
// blocks onto boundary edges until at least `size` vertices exist.
EmbeddedGraph gen_glued_blocks(std::int32_t size, std::uint64_t seed);

// Dispatch by family name: triangle, wheel, prism, nested-triangulation,
// random-triangulation, random-3conn, glued-blocks.  Errc::UnknownFamily
// otherwise.
EmbeddedGraph generate(const std::string& family, std::int32_t size,
                       std::uint64_t seed);

}  // namespace tutte
