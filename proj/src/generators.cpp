#include "spechg/generators.hpp"
#include "spechg/errors.hpp"

#include <array>
#include <map>
#include <numeric>
#include <utility>

namespace spechg {

Hypergraph gen_squid(int k) {
    if (k < 4 || k % 2 != 0) throw OddOrder("squid requires even k >= 4");
    const Index n = static_cast<Index>(k) * k - k + 1;
    std::vector<std::vector<Index>> edges;
    edges.reserve(k);
    // Leg j occupies vertices [j*k, (j+1)*k); its first vertex joins the head.
    std::vector<Index> head;
    for (int j = 0; j < k - 1; ++j) {
        std::vector<Index> leg(k);
        std::iota(leg.begin(), leg.end(), static_cast<Index>(j) * k);
        head.push_back(leg.front());
        edges.push_back(std::move(leg));
    }
    head.push_back(n - 1); // the tail vertex
    edges.push_back(std::move(head));
    return Hypergraph(k, n, std::move(edges));
}

Hypergraph gen_sunflower(int k, Index delta) {
    if (k < 4 || k % 2 != 0) throw OddOrder("sunflower requires even k >= 4");
    if (delta < 1) throw Error("sunflower requires delta >= 1");
    const Index n = static_cast<Index>(k - 1) * delta + 1;
    std::vector<std::vector<Index>> edges;
    edges.reserve(delta);
    for (Index i = 0; i < delta; ++i) {
        std::vector<Index> e{0};
        for (int j = 0; j < k - 1; ++j) e.push_back(1 + i * (k - 1) + j);
        edges.push_back(std::move(e));
    }
    return Hypergraph(k, n, std::move(edges));
}

Hypergraph gen_grid(int s) {
    if (s < 0) throw Error("grid requires s >= 0");
    const Index side = (Index{1} << s) + 1;
    auto vid = [side](Index r, Index c) { return r * side + c; };
    std::vector<std::vector<Index>> edges;
    edges.reserve((side - 1) * (side - 1));
    for (Index r = 0; r + 1 < side; ++r)
        for (Index c = 0; c + 1 < side; ++c)
            edges.push_back({vid(r, c), vid(r, c + 1), vid(r + 1, c), vid(r + 1, c + 1)});
    return Hypergraph(4, side * side, std::move(edges));
}

Hypergraph gen_blowup(const SimpleGraph& g, Index t) {
    if (t < 1) throw Error("blow-up requires t >= 1");
    std::vector<std::vector<Index>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) {
        std::vector<Index> e;
        e.reserve(2 * t);
        for (Index i = 0; i < t; ++i) e.push_back(u * t + i);
        for (Index i = 0; i < t; ++i) e.push_back(v * t + i);
        edges.push_back(std::move(e));
    }
    return Hypergraph(static_cast<int>(2 * t), g.n * t, std::move(edges));
}

SimpleGraph gen_petersen() {
    std::vector<std::pair<Index, Index>> edges;
    for (Index i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, i + 5);                // spokes
    }
    return SimpleGraph(10, std::move(edges));
}

namespace {

struct TriMesh {
    Index n_vertices;
    std::vector<std::array<Index, 3>> faces;
};

TriMesh icosahedron_mesh() {
    // Combinatorial face list of the regular icosahedron (12 vertices, 20 faces).
    return TriMesh{12,
                   {{0, 11, 5},  {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                    {1, 5, 9},   {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                    {3, 9, 4},   {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                    {4, 9, 5},   {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}}};
}

TriMesh subdivide(const TriMesh& mesh) {
    TriMesh out;
    out.n_vertices = mesh.n_vertices;
    std::map<std::pair<Index, Index>, Index> midpoint;
    auto mid = [&](Index a, Index b) {
        auto key = std::minmax(a, b);
        auto [it, inserted] = midpoint.try_emplace(key, out.n_vertices);
        if (inserted) ++out.n_vertices;
        return it->second;
    };
    out.faces.reserve(mesh.faces.size() * 4);
    for (const auto& [a, b, c] : mesh.faces) {
        const Index ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
        out.faces.push_back({a, ab, ca});
        out.faces.push_back({b, bc, ab});
        out.faces.push_back({c, ca, bc});
        out.faces.push_back({ab, bc, ca});
    }
    return out;
}

} // namespace

Hypergraph gen_icosahedron(int s) {
    if (s < 0) throw Error("icosahedron requires s >= 0");
    TriMesh mesh = icosahedron_mesh();
    for (int i = 0; i < s; ++i) mesh = subdivide(mesh);
    std::vector<std::vector<Index>> edges;
    edges.reserve(mesh.faces.size());
    Index center = mesh.n_vertices;
    for (const auto& [a, b, c] : mesh.faces) edges.push_back({a, b, c, center++});
    return Hypergraph(4, center, std::move(edges));
}

} // namespace spechg
