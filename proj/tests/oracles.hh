#ifndef INDSAT_TESTS_ORACLES_HH
#define INDSAT_TESTS_ORACLES_HH

// Deliberately naive reference implementations. They share no code with the
// library beyond the Graph value type and exist only to cross-check it.

#include <indsat/graph.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle
{
    using indsat::Graph;
    using indsat::Trigraph;
    using indsat::Vertex;

    inline auto adjacency(const Graph & g) -> std::vector<std::vector<bool>>
    {
        std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v)
                a[u][v] = u != v && g.adjacent(u, v);
        return a;
    }

    /// Isomorphism by trying every permutation (small orders only).
    inline auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.order() != b.order() || a.edge_count() != b.edge_count())
            return false;
        auto n = a.order();
        auto da = a.degrees(), db = b.degrees();
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return false;
        auto x = adjacency(a), y = adjacency(b);
        std::vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (Vertex u = 0; u < n && ok; ++u)
                for (Vertex v = u + 1; v < n && ok; ++v)
                    ok = x[u][v] == y[p[u]][p[v]];
            if (ok)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }

    /// Colour-preserving trigraph isomorphism by brute force.
    inline auto isomorphic(const Trigraph & a, const Trigraph & b) -> bool
    {
        if (a.order() != b.order() || a.black_count() != b.black_count() || a.gray_count() != b.gray_count())
            return false;
        auto n = a.order();
        std::vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (Vertex u = 0; u < n && ok; ++u)
                for (Vertex v = u + 1; v < n && ok; ++v)
                    ok = a.color(u, v) == b.color(p[u], p[v]);
            if (ok)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }

    /// Induced copy of h in g by trying every injective map.
    inline auto contains_induced(const Graph & g, const Graph & h) -> bool
    {
        auto n = g.order(), k = h.order();
        if (k > n)
            return false;
        auto x = adjacency(g), y = adjacency(h);
        std::vector<Vertex> map(k);
        std::vector<bool> used(n, false);
        auto rec = [&](auto & self, std::size_t i) -> bool {
            if (i == k)
                return true;
            for (Vertex w = 0; w < n; ++w) {
                if (used[w])
                    continue;
                bool ok = true;
                for (std::size_t j = 0; j < i && ok; ++j)
                    ok = y[j][i] == x[map[j]][w];
                if (! ok)
                    continue;
                used[w] = true;
                map[i] = w;
                if (self(self, i + 1))
                    return true;
                used[w] = false;
            }
            return false;
        };
        return rec(rec, 0);
    }

    inline auto toggled(const Graph & g, Vertex u, Vertex v) -> Graph
    {
        indsat::GraphBuilder b(g);
        b.toggle(u, v);
        return std::move(b).build();
    }

    /// Definition of induced saturation, with the naive matcher.
    inline auto saturated(const Graph & g, const Graph & h) -> bool
    {
        if (contains_induced(g, h))
            return false;
        for (Vertex v = 1; v < g.order(); ++v)
            for (Vertex u = 0; u < v; ++u)
                if (! contains_induced(toggled(g, u, v), h))
                    return false;
        return true;
    }

    /// Every realization as an explicit graph.
    inline auto all_realizations(const Trigraph & t) -> std::vector<Graph>
    {
        std::vector<std::pair<Vertex, Vertex>> gray;
        for (Vertex v = 1; v < t.order(); ++v)
            for (Vertex u = 0; u < v; ++u)
                if (t.color(u, v) == indsat::EdgeColor::Gray)
                    gray.emplace_back(u, v);
        std::vector<Graph> result;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << gray.size()); ++s) {
            indsat::GraphBuilder b(t.order());
            for (Vertex v = 1; v < t.order(); ++v)
                for (Vertex u = 0; u < v; ++u)
                    if (t.color(u, v) == indsat::EdgeColor::Black)
                        b.add_edge(u, v);
            for (std::size_t i = 0; i < gray.size(); ++i)
                if ((s >> i) & 1u)
                    b.add_edge(gray[i].first, gray[i].second);
            result.push_back(std::move(b).build());
        }
        return result;
    }

    /// Trigraph saturation straight from the definition.
    inline auto saturated(const Trigraph & t, const Graph & h) -> bool
    {
        for (auto & r : all_realizations(t))
            if (contains_induced(r, h))
                return false;
        for (Vertex v = 1; v < t.order(); ++v)
            for (Vertex u = 0; u < v; ++u) {
                if (t.color(u, v) == indsat::EdgeColor::Gray)
                    continue;
                auto grayed = std::move(indsat::TrigraphBuilder(t).set_color(u, v, indsat::EdgeColor::Gray)).build();
                bool hit = false;
                for (auto & r : all_realizations(grayed))
                    if (contains_induced(r, h)) {
                        hit = true;
                        break;
                    }
                if (! hit)
                    return false;
            }
        return true;
    }

    /// Vertex set splits into a clique and an independent set (tries every subset).
    inline auto split_by_partition(const Graph & g) -> bool
    {
        auto n = g.order();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            bool ok = true;
            for (Vertex u = 0; u < n && ok; ++u)
                for (Vertex v = u + 1; v < n && ok; ++v) {
                    bool in_u = (s >> u) & 1u, in_v = (s >> v) & 1u;
                    if (in_u && in_v && ! g.adjacent(u, v))
                        ok = false;
                    if (! in_u && ! in_v && g.adjacent(u, v))
                        ok = false;
                }
            if (ok)
                return true;
        }
        return false;
    }

    /// Threshold by repeated removal of an isolated or dominating vertex.
    inline auto threshold_by_peeling(const Graph & g) -> bool
    {
        auto a = adjacency(g);
        std::vector<bool> alive(g.order(), true);
        for (std::size_t remaining = g.order(); remaining > 0; --remaining) {
            bool removed = false;
            for (Vertex v = 0; v < g.order() && ! removed; ++v) {
                if (! alive[v])
                    continue;
                std::size_t d = 0;
                for (Vertex w = 0; w < g.order(); ++w)
                    if (alive[w] && a[v][w])
                        ++d;
                if (d == 0 || d == remaining - 1) {
                    alive[v] = false;
                    removed = true;
                }
            }
            if (! removed)
                return false;
        }
        return true;
    }

    /// graph6 from an explicit bit string, written from the format description.
    inline auto graph6(const Graph & g) -> std::string
    {
        std::string bits;
        for (Vertex v = 1; v < g.order(); ++v)
            for (Vertex u = 0; u < v; ++u)
                bits.push_back(g.adjacent(u, v) ? '1' : '0');
        while (bits.size() % 6 != 0)
            bits.push_back('0');

        std::string out;
        auto n = g.order();
        if (n <= 62)
            out.push_back(static_cast<char>(63 + n));
        else {
            out.push_back('~');
            out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
            out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
            out.push_back(static_cast<char>(63 + (n & 63)));
        }
        for (std::size_t i = 0; i < bits.size(); i += 6)
            out.push_back(static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2)));
        return out;
    }

    inline auto random_graph(std::mt19937_64 & rng, std::size_t n, double density) -> Graph
    {
        std::bernoulli_distribution coin(density);
        indsat::GraphBuilder b(n);
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u)
                if (coin(rng))
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    inline auto random_trigraph(std::mt19937_64 & rng, std::size_t n, std::size_t max_gray) -> Trigraph
    {
        std::uniform_int_distribution<int> colour(0, 1);
        indsat::TrigraphBuilder b(n);
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u)
                b.set_color(u, v, colour(rng) ? indsat::EdgeColor::Black : indsat::EdgeColor::White);
        std::uniform_int_distribution<std::size_t> count(0, max_gray);
        auto g = count(rng);
        auto pairs = indsat::pair_count(n);
        std::uniform_int_distribution<std::size_t> which(0, pairs == 0 ? 0 : pairs - 1);
        for (std::size_t i = 0; i < g && pairs > 0; ++i) {
            auto p = indsat::pair_at(which(rng));
            b.set_color(p.u, p.v, indsat::EdgeColor::Gray);
        }
        return std::move(b).build();
    }

    inline auto random_permutation(std::mt19937_64 & rng, std::size_t n) -> std::vector<Vertex>
    {
        std::vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }
}

#endif
