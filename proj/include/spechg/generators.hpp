#ifndef SPECHG_GENERATORS_HPP
#define SPECHG_GENERATORS_HPP

#include "spechg/hypergraph.hpp"

namespace spechg {

// k-uniform squid, k even >= 4: k-1 legs of k vertices each plus a head
// joining the first vertex of every leg with one extra tail vertex.
// n = k^2 - k + 1, m = k.
Hypergraph gen_squid(int k);

// k-uniform sunflower with maximum degree delta: all edges share exactly
// the center vertex. n = (k-1)*delta + 1, m = delta.
Hypergraph gen_sunflower(int k, Index delta);

// 4-uniform grid from s subdivisions of a square: (2^s+1)^2 lattice
// vertices, one edge per cell. n = (2^s+1)^2, m = 4^s.
Hypergraph gen_grid(int s);

// Blow each vertex of g up into a t-set; each graph edge becomes the
// union of its endpoint sets. 2t-uniform, t*n(g) vertices, m preserved.
Hypergraph gen_blowup(const SimpleGraph& g, Index t);

// The Petersen graph: 10 vertices, 15 edges, 3-regular, non-bipartite.
SimpleGraph gen_petersen();

// 4-uniform hypergraph from the s-times-subdivided icosahedral mesh:
// each triangular face contributes {3 corners, dedicated center vertex}.
// n = 30*4^s + 2, m = 20*4^s.
Hypergraph gen_icosahedron(int s);

} // namespace spechg

#endif
