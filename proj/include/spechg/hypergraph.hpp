#ifndef SPECHG_HYPERGRAPH_HPP
#define SPECHG_HYPERGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spechg {

using Index = std::int64_t;

// A k-uniform hypergraph stored as an m-by-k matrix of vertex indices
// (row = edge), 0-based internally, plus the cached degree vector.
// Immutable after construction; safe to share across solver runs.
class Hypergraph {
public:
    // Validates and canonicalizes: each edge sorted ascending, edges sorted
    // lexicographically. Throws IndexOutOfRange, DuplicateVertexInEdge,
    // DuplicateEdge, IsolatedVertex (unless allow_isolated).
    Hypergraph(int k, Index n, std::vector<std::vector<Index>> raw_edges,
               bool allow_isolated = false);

    int k() const { return k_; }
    Index n() const { return n_; }
    Index m() const { return static_cast<Index>(edges_.size()) / k_; }

    // Row-major m-by-k edge matrix.
    std::span<const Index> edge(Index e) const {
        return {edges_.data() + e * k_, static_cast<std::size_t>(k_)};
    }
    const std::vector<Index>& edge_matrix() const { return edges_; }

    const std::vector<Index>& degrees() const { return degrees_; }
    const std::vector<double>& degrees_real() const { return degrees_real_; }
    Index max_degree() const { return max_degree_; }

    bool operator==(const Hypergraph& other) const = default;

private:
    int k_;
    Index n_;
    std::vector<Index> edges_;   // flattened m*k, canonical order
    std::vector<Index> degrees_;
    std::vector<double> degrees_real_;
    Index max_degree_ = 0;
};

// Ordinary graph; input to the blow-up construction.
struct SimpleGraph {
    Index n = 0;
    std::vector<std::pair<Index, Index>> edges; // unordered pairs, no loops/dups

    SimpleGraph(Index n_, std::vector<std::pair<Index, Index>> edges_);
};

// File format: line 1 "k m n", then m lines of k 1-based vertex indices.
// '#' lines are comments.
Hypergraph read_hypergraph(std::istream& in, bool allow_isolated = false);
Hypergraph read_hypergraph(const std::string& path, bool allow_isolated = false);
void write_hypergraph(const Hypergraph& h, std::ostream& out);
void write_hypergraph(const Hypergraph& h, const std::string& path);

} // namespace spechg

#endif
