#include <indsat/constructions.hh>
#include <indsat/errors.hh>
#include <indsat/patterns.hh>

#include <cmath>

namespace indsat
{
    namespace
    {
        auto require(bool condition, const std::string & message) -> void
        {
            if (! condition)
                throw InvalidArgument(message);
        }

        auto copies(const Graph & g, std::size_t count) -> std::vector<Graph>
        {
            return std::vector<Graph>(count, g);
        }

        auto k3_power(std::size_t k) -> Graph
        {
            auto k3 = complete(3);
            Graph h = k3;
            for (std::size_t i = 1; i < k; ++i)
                h = cartesian_product(h, k3);
            return h;
        }
    }

    auto paw_construction(const PawSpec & spec) -> Graph
    {
        require(spec.isolated <= 1, "at most one isolated vertex");
        std::vector<Graph> parts;
        for (auto & component : spec.components) {
            require(component.parts.size() >= 3, "each component needs at least three parts");
            std::size_t singletons = 0;
            for (auto size : component.parts) {
                require(size == 1 || size >= 3, "part sizes must be 1 or at least 3");
                if (size == 1)
                    ++singletons;
            }
            require(singletons <= 1, "at most one part of size 1 per component");
            parts.push_back(complete_multipartite(component.parts));
        }
        if (spec.isolated == 1)
            parts.push_back(Graph(1));
        return disjoint_union(parts);
    }

    auto minimal_paw(std::size_t n) -> Graph
    {
        require(n >= 7, "minimal_paw needs n >= 7");
        auto k = n / 7, r = n % 7;
        PawSpec spec;
        for (std::size_t i = 0; i < k; ++i)
            spec.components.push_back({{1, 3, 3}});
        if (r != 0) {
            spec.components.back().parts.back() += r - 1;
            spec.isolated = 1;
        }
        return paw_construction(spec);
    }

    auto minimal_paw_edge_formula(std::size_t n) -> std::size_t
    {
        require(n >= 7, "formula holds for n >= 7");
        auto r = n % 7;
        return r == 0 ? 15 * n / 7 : 15 * (n / 7) + 4 * (r - 1);
    }

    auto star_construction(std::size_t n, std::size_t k) -> Graph
    {
        require(k >= 2, "star construction needs k >= 2");
        std::size_t block = 1;
        for (std::size_t i = 0; i < k; ++i)
            block *= 3;
        require(n >= block, "star construction needs n >= 3^k");

        auto h = k3_power(k);
        auto z = n / block, remainder = n % block;

        GraphBuilder last(disjoint_union({h, remainder ? complete(remainder) : Graph(0)}));
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t x = 0; x < remainder; ++x)
                last.add_edge(a * (block / 3), block + x);

        auto parts = copies(h, z - 1);
        parts.push_back(std::move(last).build());
        return disjoint_union(parts);
    }

    auto generalized_L(std::size_t m) -> Graph
    {
        require(m >= 5, "generalized L needs m >= 5");
        GraphBuilder b(3 * m);
        for (std::size_t i = 0; i < m; ++i) {
            auto next = (i + 1) % m;
            auto a = [&](std::size_t x) { return x; };
            auto bb = [&](std::size_t x) { return m + x; };
            auto c = [&](std::size_t x) { return 2 * m + x; };
            b.add_edge(a(i), a(next));
            b.add_edge(c(i), c(next));
            b.add_edge(bb(i), a(i));
            b.add_edge(bb(i), a(next));
            b.add_edge(bb(i), c(i));
            b.add_edge(bb(i), c(next));
        }
        return std::move(b).build();
    }

    auto claw_catalogue(ClawGraph which) -> Graph
    {
        switch (which) {
            case ClawGraph::H: return k3_power(2);
            case ClawGraph::J:
                return Graph::from_edges(11,
                    {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 3}, {2, 4}, {1, 4}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8},
                        {7, 8}, {6, 9}, {8, 9}, {8, 10}, {7, 10}, {3, 6}, {3, 9}, {9, 10}, {4, 10}, {4, 7}, {0, 5},
                        {1, 5}});
            case ClawGraph::K:
                // A1..A6 = 0..5, B1, B3, B5 = 6..8, C2, C4, C6 = 9..11
                return Graph::from_edges(12,
                    {{9, 10}, {10, 11}, {9, 11}, {1, 9}, {0, 1}, {3, 10}, {2, 3}, {5, 11}, {4, 5}, {0, 11}, {2, 9},
                        {4, 10}, {0, 6}, {1, 6}, {2, 7}, {3, 7}, {4, 8}, {5, 8}, {6, 7}, {7, 8}, {6, 8}, {0, 5},
                        {1, 2}, {3, 4}});
            case ClawGraph::L: return generalized_L(5);
        }
        throw InvalidArgument("unknown claw catalogue graph");
    }

    auto claw_upper_construction(std::size_t n) -> std::optional<Graph>
    {
        auto multiple_of_three = [](std::size_t m) {
            auto h = claw_catalogue(ClawGraph::H);
            auto parts = copies(h, m / 9 - 1);
            switch (m % 9) {
                case 0: parts.push_back(h); break;
                case 3: parts.push_back(claw_catalogue(ClawGraph::K)); break;
                default: parts.push_back(claw_catalogue(ClawGraph::L)); break;
            }
            return disjoint_union(parts);
        };

        if (n < 9)
            return std::nullopt;
        switch (n % 3) {
            case 0: return multiple_of_three(n);
            case 1: return disjoint_union({multiple_of_three(n - 1), Graph(1)});
            default:
                if (n == 11)
                    return claw_catalogue(ClawGraph::J);
                if (n >= 20)
                    return disjoint_union({claw_catalogue(ClawGraph::J), multiple_of_three(n - 11)});
                return std::nullopt;
        }
    }

    auto icosa(std::size_t j, std::size_t k) -> Graph
    {
        require(j >= 5, "icosa needs j >= 5");
        require(k >= 2, "icosa needs k >= 2");
        auto hub = [&](std::size_t i) { return i * (j + 1); };
        // l in 1..j, taken cyclically
        auto rim = [&](std::size_t i, std::size_t l) { return i * (j + 1) + 1 + (l - 1) % j; };

        GraphBuilder b(k * (j + 1));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 1; l <= j; ++l) {
                b.add_edge(hub(i), rim(i, l));
                b.add_edge(rim(i, l), rim(i, l + 1));
            }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t other = i + 1; other < k; ++other)
                for (std::size_t l = 1; l <= j; ++l) {
                    b.add_edge(rim(i, l), rim(other, l));
                    b.add_edge(rim(i, l), rim(other, l + 1));
                }
        return std::move(b).build();
    }

    auto c4_minimal(std::size_t n) -> Graph
    {
        require(n >= 56, "c4_minimal needs n >= 56");
        auto k = n / 8, r = n % 8;
        auto base = icosa(7, k);
        std::vector<std::size_t> sizes(base.order(), 1);
        for (std::size_t i = 0; i < r; ++i)
            sizes[i * 8] = 2;
        return blowup(base, sizes, BlowupMode::Clique);
    }

    auto matching_construction(std::size_t n, std::size_t k) -> Graph
    {
        require(k >= 2, "matching construction needs k >= 2");
        require(n >= 12 * (k - 1), "matching construction needs n >= 12(k-1)");
        auto parts = copies(complement(icosa(5, 2)), k - 1);
        parts.push_back(Graph(n - 12 * (k - 1)));
        return disjoint_union(parts);
    }

    auto cycles_construction(std::size_t n, std::size_t k) -> Graph
    {
        require(k >= 3, "cycles construction needs k >= 3");
        require(n >= (k + 1) * (k + 1) + 2, "cycles construction needs n >= (k+1)^2 + 2");
        auto t = (n + k) / (k + 1);
        auto s = (k + 1) * t - n;
        require(t >= k + 2 && s + 3 <= t, "cycles construction needs t >= k+2 and s <= t-3");

        std::vector<Vertex> drop;
        for (std::size_t b = 0; b < s; ++b)
            drop.push_back(k * t + b);
        return remove_vertices(cartesian_product(complete(k + 1), complete(t)), drop);
    }

    auto cycles_subquadratic(std::size_t n, std::size_t k, std::size_t t) -> Graph
    {
        require(k >= 3, "cycles construction needs k >= 3");
        require(t >= 3, "subquadratic construction needs t >= 3");
        auto c = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        while (c * c < n)
            ++c;
        while (c > 0 && (c - 1) * (c - 1) >= n)
            --c;
        require(c % t == 0, "subquadratic construction needs t to divide ceil(sqrt(n))");
        auto k1 = k + 1;
        require(n >= k1 * k1 * k1 * k1, "subquadratic construction needs n^(1/4) >= k+1");
        require(c / t >= k1, "subquadratic construction needs ceil(sqrt(n))/t >= k+1");

        auto rows = c / t, width = t * c;
        auto s = rows * width - n;
        std::vector<Vertex> drop;
        for (std::size_t b = 0; b < s; ++b)
            drop.push_back((rows - 1) * width + b);
        return remove_vertices(cartesian_product(complete(rows), complete(width)), drop);
    }

    auto table_trigraph(TableTarget target, std::size_t n) -> Trigraph
    {
        if (target == TableTarget::Paw) {
            require(n >= 4 && n <= 6, "paw table trigraphs exist for n in 4..6");
            if (n == 4)
                return Trigraph::from_lists(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {{0, 1}, {2, 3}});
            std::vector<VertexPair> black;
            for (Vertex leaf = 2; leaf < n; ++leaf) {
                black.push_back({0, leaf});
                black.push_back({1, leaf});
            }
            std::vector<VertexPair> gray{{0, 1}};
            return Trigraph::from_lists(n, black, gray);
        }

        require(n >= 4 && n <= 8, "claw table trigraphs exist for n in 4..8");
        switch (n) {
            case 4: return Trigraph::from_lists(4, {}, {{0, 1}, {1, 2}, {0, 2}});
            case 5: return Trigraph::from_lists(5, {{0, 1}, {1, 2}}, {{0, 2}, {2, 3}, {0, 3}});
            case 6:
                return Trigraph::from_lists(6, {{0, 1}, {1, 3}, {2, 3}, {0, 2}, {0, 3}}, {{1, 2}, {2, 4}, {1, 4}});
            default: {
                std::vector<VertexPair> black{
                    {0, 3}, {3, 4}, {2, 4}, {2, 6}, {5, 6}, {0, 5}, {1, 3}, {1, 5}, {1, 4}, {1, 6}};
                std::vector<VertexPair> gray{{3, 5}, {4, 6}};
                return Trigraph::from_lists(n, black, gray);
            }
        }
    }

    auto c5_trigraph10() -> Trigraph
    {
        // t_{yx} is vertex 3(y-1) + (x-1); the extra vertex is 9.
        TrigraphBuilder b(10);
        for (auto & e : claw_catalogue(ClawGraph::H).edges())
            b.set_color(e.u, e.v, EdgeColor::Black);
        for (Vertex w : {6, 8, 4, 1})
            b.set_color(w, 9, EdgeColor::Black);
        b.set_color(7, 9, EdgeColor::Gray);
        return std::move(b).build();
    }
}
