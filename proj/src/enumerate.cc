#include <indsat/canonical.hh>
#include <indsat/errors.hh>
#include <indsat/saturation.hh>
#include <indsat/search.hh>

#include <unordered_set>

namespace indsat
{
    namespace
    {
        // Canonical representatives on `order` vertices, each extended from a
        // representative on order - 1 vertices by every neighbourhood of the new vertex.
        auto extend_classes(const std::vector<Graph> & smaller, std::size_t order) -> std::vector<Graph>
        {
            std::vector<Graph> result;
            std::unordered_set<std::string> seen;
            auto fresh = order - 1;
            for (auto & base : smaller)
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fresh); ++mask) {
                    GraphBuilder b(order);
                    for (auto & e : base.edges())
                        b.add_edge(e.u, e.v);
                    for (Vertex v = 0; v < fresh; ++v)
                        if ((mask >> v) & 1u)
                            b.add_edge(v, fresh);
                    auto g = std::move(b).build();
                    auto labeling = canonical_labeling(g, 64);
                    if (seen.insert(labeling.form).second)
                        result.push_back(relabel(g, labeling.position));
                }
            return result;
        }
    }

    auto enumerate_graphs(std::size_t n, const GraphFilter & filter, bool dedup, bool unsafe_override)
        -> std::vector<Graph>
    {
        std::vector<Graph> all;
        if (dedup) {
            if (! unsafe_override && n > enumerate_order_guard)
                throw GuardExceeded("graph enumeration limited to n <= " + std::to_string(enumerate_order_guard));
            if (n > 16)
                throw GuardExceeded("graph enumeration cannot exceed the canonical form limit of 16");
            all.push_back(Graph(0));
            for (std::size_t order = 1; order <= n; ++order)
                all = extend_classes(all, order);
        }
        else {
            if (! unsafe_override && n > labeled_enumerate_order_guard)
                throw GuardExceeded("labeled enumeration limited to n <= " +
                    std::to_string(labeled_enumerate_order_guard));
            if (pair_count(n) > 40)
                throw GuardExceeded("labeled enumeration cannot exceed 2^40 graphs");
            auto total = std::uint64_t{1} << pair_count(n);
            for (std::uint64_t mask = 0; mask < total; ++mask)
                all.push_back(Graph::from_pair_mask(n, mask));
        }

        if (! filter)
            return all;
        std::vector<Graph> kept;
        for (auto & g : all)
            if (filter(g))
                kept.push_back(std::move(g));
        return kept;
    }

    auto min_degree_filter(std::size_t d) -> GraphFilter
    {
        return [d](const Graph & g) { return g.order() == 0 || g.min_degree() >= d; };
    }

    auto claw_degree_filter() -> GraphFilter
    {
        return [](const Graph & g) { return degree_profile_check(g).all(); };
    }
}
