#include "spechg/errors.hpp"
#include "spechg/generators.hpp"
#include "spechg/hypergraph.hpp"

#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

using namespace spechg;

namespace {
Index degree_sum(const Hypergraph& h) {
    return std::accumulate(h.degrees().begin(), h.degrees().end(), Index{0});
}
} // namespace

TEST_CASE("validate_and_build: a small sunflower") {
    Hypergraph h(4, 10, {{0, 1, 2, 3}, {0, 4, 5, 6}, {0, 7, 8, 9}});
    CHECK(h.n() == 10);
    CHECK(h.m() == 3);
    CHECK(h.degrees()[0] == 3);
    for (Index i = 1; i < 10; ++i) CHECK(h.degrees()[i] == 1);
    CHECK(h.max_degree() == 3);
}

TEST_CASE("validate_and_build: single edge covers all vertices") {
    Hypergraph h(4, 4, {{0, 1, 2, 3}});
    for (Index d : h.degrees()) CHECK(d == 1);
}

TEST_CASE("validate_and_build: rejections") {
    CHECK_THROWS_AS(Hypergraph(4, 5, {{0, 1, 2, 3}}), IsolatedVertex);
    CHECK_NOTHROW(Hypergraph(4, 5, {{0, 1, 2, 3}}, /*allow_isolated=*/true));
    CHECK_THROWS_AS(Hypergraph(4, 4, {{0, 1, 2, 4}}), IndexOutOfRange);
    CHECK_THROWS_AS(Hypergraph(4, 4, {{0, 1, 2, 2}}), DuplicateVertexInEdge);
    CHECK_THROWS_AS(Hypergraph(4, 4, {{0, 1, 2, 3}, {3, 2, 1, 0}}), DuplicateEdge);
}

TEST_CASE("edges are canonicalized") {
    Hypergraph a(4, 8, {{7, 6, 5, 4}, {3, 2, 1, 0}});
    Hypergraph b(4, 8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
    CHECK(a == b);
}

TEST_CASE("gen_squid") {
    Hypergraph h = gen_squid(4);
    CHECK(h.n() == 13);
    CHECK(h.m() == 4);
    CHECK_THROWS_AS(gen_squid(5), OddOrder);
    CHECK_THROWS_AS(gen_squid(2), OddOrder);

    // the head is the edge containing the tail vertex n-1; it shares exactly
    // one vertex with each leg
    std::set<Index> head;
    for (Index e = 0; e < h.m(); ++e) {
        std::set<Index> edge(h.edge(e).begin(), h.edge(e).end());
        if (edge.count(h.n() - 1)) head = edge;
    }
    REQUIRE_FALSE(head.empty());
    int legs_checked = 0;
    for (Index e = 0; e < h.m(); ++e) {
        std::set<Index> edge(h.edge(e).begin(), h.edge(e).end());
        if (edge == head) continue;
        int shared = 0;
        for (Index v : edge) shared += head.count(v);
        CHECK(shared == 1);
        ++legs_checked;
    }
    CHECK(legs_checked == 3);

    Hypergraph h6 = gen_squid(6);
    CHECK(h6.n() == 31);
    CHECK(h6.m() == 6);
}

TEST_CASE("gen_sunflower") {
    Hypergraph h = gen_sunflower(4, 3);
    CHECK(h == Hypergraph(4, 10, {{0, 1, 2, 3}, {0, 4, 5, 6}, {0, 7, 8, 9}}));

    CHECK(gen_sunflower(4, 1).n() == 4);
    CHECK(gen_sunflower(4, 10).n() == 31);
    CHECK(gen_sunflower(4, 10).m() == 10);

    // degree sum k*delta, exactly one vertex of degree delta
    for (Index delta : {Index{2}, Index{7}}) {
        Hypergraph s = gen_sunflower(6, delta);
        CHECK(degree_sum(s) == 6 * delta);
        CHECK(std::count(s.degrees().begin(), s.degrees().end(), delta) ==
              (delta > 1 ? 1 : s.n()));
    }
}

TEST_CASE("gen_grid") {
    CHECK(gen_grid(0).n() == 4);
    CHECK(gen_grid(0).m() == 1);
    CHECK(gen_grid(2).n() == 25);
    CHECK(gen_grid(2).m() == 16);

    Hypergraph h = gen_grid(3);
    CHECK(h.n() == 81);
    CHECK(h.m() == 64);
    CHECK(degree_sum(h) == 4 * 64);
    // brute-force cell membership over the lattice
    const Index side = 9;
    for (Index r = 0; r < side; ++r)
        for (Index c = 0; c < side; ++c) {
            const bool r_in = r > 0 && r < side - 1, c_in = c > 0 && c < side - 1;
            const Index want = (r_in ? 2 : 1) * (c_in ? 2 : 1);
            CHECK(h.degrees()[r * side + c] == want);
        }
}

TEST_CASE("gen_petersen") {
    SimpleGraph g = gen_petersen();
    CHECK(g.n == 10);
    CHECK(g.edges.size() == 15);
    std::vector<int> deg(10, 0);
    for (auto [u, v] : g.edges) { ++deg[u]; ++deg[v]; }
    for (int d : deg) CHECK(d == 3);

    // non-bipartite: 2-coloring by BFS must fail
    std::vector<int> color(10, -1);
    std::vector<Index> stack{0};
    color[0] = 0;
    bool bipartite = true;
    while (!stack.empty()) {
        Index u = stack.back();
        stack.pop_back();
        for (auto [a, b] : g.edges) {
            if (a != u && b != u) continue;
            Index w = a == u ? b : a;
            if (color[w] == -1) { color[w] = 1 - color[u]; stack.push_back(w); }
            else if (color[w] == color[u]) bipartite = false;
        }
    }
    CHECK_FALSE(bipartite);
}

TEST_CASE("gen_blowup") {
    Hypergraph p2 = gen_blowup(gen_petersen(), 2);
    CHECK(p2.k() == 4);
    CHECK(p2.n() == 20);
    CHECK(p2.m() == 15);

    // t=1 is the graph itself as a 2-graph
    Hypergraph p1 = gen_blowup(gen_petersen(), 1);
    CHECK(p1.k() == 2);
    CHECK(p1.n() == 10);
    CHECK(p1.m() == 15);

    SimpleGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    Hypergraph t3 = gen_blowup(tri, 3);
    CHECK(t3.k() == 6);
    CHECK(t3.n() == 9);
    CHECK(t3.m() == 3);

    // degrees of the blow-up replicate the graph's degrees t times
    for (Index v = 0; v < 10; ++v)
        for (Index i = 0; i < 2; ++i)
            CHECK(p2.degrees()[v * 2 + i] == 3);
}

TEST_CASE("gen_icosahedron") {
    for (int s : {0, 1, 2}) {
        Hypergraph h = gen_icosahedron(s);
        const Index pow4 = Index{1} << (2 * s);
        CHECK(h.n() == 30 * pow4 + 2);
        CHECK(h.m() == 20 * pow4);
        // centers (the last m vertices) have degree exactly 1
        for (Index c = h.n() - h.m(); c < h.n(); ++c) CHECK(h.degrees()[c] == 1);
        // mesh vertices: degree 5 at the 12 original, 6 elsewhere
        for (Index v = 0; v < h.n() - h.m(); ++v)
            CHECK(h.degrees()[v] == (v < 12 ? 5 : 6));
    }
}

TEST_CASE("file round trip") {
    const std::string canonical = "4 3 10\n1 2 3 4\n1 5 6 7\n1 8 9 10\n";
    std::istringstream in(canonical);
    Hypergraph h = read_hypergraph(in);
    CHECK(h == gen_sunflower(4, 3));

    std::ostringstream out;
    write_hypergraph(h, out);
    CHECK(out.str() == canonical);

    // comments and permuted rows normalize to the same file
    std::istringstream in2("# sunflower\n4 3 10\n1 8 9 10\n# legs\n4 3 2 1\n1 5 6 7\n");
    std::ostringstream out2;
    write_hypergraph(read_hypergraph(in2), out2);
    CHECK(out2.str() == canonical);
}

TEST_CASE("file parse errors carry line numbers") {
    std::istringstream dup("4 2 4\n1 2 3 4\n4 3 2 1\n");
    CHECK_THROWS_AS(read_hypergraph(dup), DuplicateEdge);

    std::istringstream bad("4 1 4\n1 2 3\n");
    try {
        read_hypergraph(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    std::istringstream short_file("4 2 8\n1 2 3 4\n");
    CHECK_THROWS_AS(read_hypergraph(short_file), ParseError);
}

TEST_CASE("every generator output validates cleanly") {
    // construction already runs the validator; re-wrap to be explicit
    for (const Hypergraph& h : {gen_squid(6), gen_sunflower(4, 5), gen_grid(2),
                                gen_icosahedron(1)}) {
        std::vector<std::vector<Index>> edges;
        for (Index e = 0; e < h.m(); ++e)
            edges.emplace_back(h.edge(e).begin(), h.edge(e).end());
        CHECK_NOTHROW(Hypergraph(h.k(), h.n(), edges));
    }
}
