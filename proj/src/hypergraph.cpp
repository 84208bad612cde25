#include "spechg/hypergraph.hpp"
#include "spechg/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace spechg {

Hypergraph::Hypergraph(int k, Index n, std::vector<std::vector<Index>> raw_edges,
                       bool allow_isolated)
    : k_(k), n_(n) {
    if (k < 2) throw Error("edge cardinality k must be >= 2");
    if (n < 1) throw Error("vertex count n must be >= 1");
    if (raw_edges.empty()) throw Error("edge list must be nonempty");

    for (auto& e : raw_edges) {
        if (static_cast<int>(e.size()) != k)
            throw DimensionMismatch("edge has " + std::to_string(e.size()) +
                                    " vertices, expected " + std::to_string(k));
        for (Index v : e)
            if (v < 0 || v >= n)
                throw IndexOutOfRange("vertex index " + std::to_string(v) +
                                      " outside [0, " + std::to_string(n) + ")");
        std::sort(e.begin(), e.end());
        for (int j = 1; j < k; ++j)
            if (e[j] == e[j - 1])
                throw DuplicateVertexInEdge("vertex " + std::to_string(e[j]) +
                                            " repeated within an edge");
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    for (std::size_t r = 1; r < raw_edges.size(); ++r)
        if (raw_edges[r] == raw_edges[r - 1]) {
            std::ostringstream os;
            os << "duplicate edge {";
            for (int j = 0; j < k; ++j) os << (j ? "," : "") << raw_edges[r][j] + 1;
            os << "}";
            throw DuplicateEdge(os.str());
        }

    edges_.reserve(raw_edges.size() * k);
    degrees_.assign(n, 0);
    for (const auto& e : raw_edges)
        for (Index v : e) {
            edges_.push_back(v);
            ++degrees_[v];
        }
    degrees_real_.resize(n);
    for (Index i = 0; i < n; ++i) {
        if (degrees_[i] == 0 && !allow_isolated)
            throw IsolatedVertex("vertex " + std::to_string(i + 1) + " has no edge");
        max_degree_ = std::max(max_degree_, degrees_[i]);
        degrees_real_[i] = static_cast<double>(degrees_[i]);
    }
}

SimpleGraph::SimpleGraph(Index n_, std::vector<std::pair<Index, Index>> edges_)
    : n(n_), edges(std::move(edges_)) {
    for (auto& [u, v] : edges) {
        if (u == v) throw DuplicateVertexInEdge("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw IndexOutOfRange("graph edge endpoint outside [0, n)");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw DuplicateEdge("duplicate graph edge");
}

Hypergraph read_hypergraph(std::istream& in, bool allow_isolated) {
    int lineno = 0;
    std::string line;
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_data_line()) throw ParseError(lineno, "missing header");
    long long k, m, n;
    {
        std::istringstream hs(line);
        if (!(hs >> k >> m >> n) || k < 2 || m < 1 || n < 1)
            throw ParseError(lineno, "header must be 'k m n' with positive integers");
    }

    std::vector<std::vector<Index>> edges;
    edges.reserve(m);
    for (long long r = 0; r < m; ++r) {
        if (!next_data_line())
            throw ParseError(lineno, "expected " + std::to_string(m) + " edges, got " +
                                         std::to_string(r));
        std::istringstream es(line);
        std::vector<Index> e(k);
        for (long long j = 0; j < k; ++j) {
            long long v;
            if (!(es >> v)) throw ParseError(lineno, "expected " + std::to_string(k) +
                                                         " vertex indices");
            e[j] = v - 1; // 1-based in files
        }
        long long extra;
        if (es >> extra) throw ParseError(lineno, "trailing tokens after edge");
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(static_cast<int>(k), n, std::move(edges), allow_isolated);
    } catch (const DimensionMismatch& e) {
        throw ParseError(lineno, e.what());
    }
}

Hypergraph read_hypergraph(const std::string& path, bool allow_isolated) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open " + path);
    return read_hypergraph(f, allow_isolated);
}

void write_hypergraph(const Hypergraph& h, std::ostream& out) {
    out << h.k() << ' ' << h.m() << ' ' << h.n() << '\n';
    for (Index e = 0; e < h.m(); ++e) {
        auto row = h.edge(e);
        for (int j = 0; j < h.k(); ++j) out << (j ? " " : "") << row[j] + 1;
        out << '\n';
    }
}

void write_hypergraph(const Hypergraph& h, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open " + path);
    write_hypergraph(h, f);
}

} // namespace spechg
