#include <indsat/constructions.hh>
#include <indsat/errors.hh>
#include <indsat/induced.hh>
#include <indsat/patterns.hh>

#include <algorithm>

namespace indsat
{
    namespace
    {
        auto components(const Graph & g) -> std::vector<std::vector<Vertex>>
        {
            std::vector<int> seen(g.order(), 0);
            std::vector<std::vector<Vertex>> result;
            for (Vertex start = 0; start < g.order(); ++start) {
                if (seen[start])
                    continue;
                std::vector<Vertex> component{start}, stack{start};
                seen[start] = 1;
                while (! stack.empty()) {
                    auto v = stack.back();
                    stack.pop_back();
                    for (auto w : g.neighbours(v))
                        if (! seen[w]) {
                            seen[w] = 1;
                            component.push_back(w);
                            stack.push_back(w);
                        }
                }
                std::sort(component.begin(), component.end());
                result.push_back(std::move(component));
            }
            return result;
        }

        // Part sizes if the induced subgraph on `vertices` is complete multipartite.
        auto multipartite_parts(const Graph & g, const std::vector<Vertex> & vertices)
            -> std::optional<std::vector<std::size_t>>
        {
            std::vector<std::size_t> part(vertices.size(), vertices.size());
            std::vector<std::size_t> sizes;
            for (std::size_t i = 0; i < vertices.size(); ++i) {
                if (part[i] != vertices.size())
                    continue;
                part[i] = sizes.size();
                sizes.push_back(1);
                for (std::size_t j = i + 1; j < vertices.size(); ++j)
                    if (! g.adjacent(vertices[i], vertices[j])) {
                        if (part[j] != vertices.size())
                            return std::nullopt;
                        part[j] = part[i];
                        ++sizes.back();
                    }
            }
            for (std::size_t i = 0; i < vertices.size(); ++i)
                for (std::size_t j = i + 1; j < vertices.size(); ++j)
                    if (g.adjacent(vertices[i], vertices[j]) == (part[i] == part[j]))
                        return std::nullopt;
            return sizes;
        }

        auto threshold_family() -> std::vector<Graph>
        {
            return {matching(2), path(4), cycle(4)};
        }

        auto split_family() -> std::vector<Graph>
        {
            return {matching(2), cycle(4), cycle(5)};
        }
    }

    auto recognize_paw_shape(const Graph & g) -> bool
    {
        std::size_t isolates = 0;
        for (auto & component : components(g)) {
            if (component.size() == 1) {
                if (++isolates > 1)
                    return false;
                continue;
            }
            auto parts = multipartite_parts(g, component);
            if (! parts || parts->size() < 3)
                return false;
            auto singletons = std::count(parts->begin(), parts->end(), std::size_t{1});
            if (singletons > 1)
                return false;
            if (std::any_of(parts->begin(), parts->end(), [](auto s) { return s == 2; }))
                return false;
        }
        return true;
    }

    auto threshold_from_string(std::string_view signs) -> Graph
    {
        std::vector<bool> dominating;
        for (std::size_t i = 0; i < signs.size(); ++i) {
            if (signs[i] == '+')
                dominating.push_back(true);
            else if (signs[i] == '-')
                dominating.push_back(false);
            else if (signs.substr(i).starts_with("−")) {
                dominating.push_back(false);
                i += 2;
            }
            else
                throw ParseError("threshold signs must be '+' or '-', got '" + std::string(signs) + "'");
        }
        GraphBuilder b(dominating.size());
        for (Vertex v = 1; v < dominating.size(); ++v)
            if (dominating[v])
                for (Vertex u = 0; u < v; ++u)
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    auto threshold_sequence(const Graph & g) -> std::optional<ThresholdSequence>
    {
        auto n = g.order();
        std::vector<bool> alive(n, true);
        std::vector<std::size_t> degree = g.degrees();
        ThresholdSequence reversed;
        for (std::size_t remaining = n; remaining > 0; --remaining) {
            std::optional<Vertex> pick;
            char sign = '-';
            for (Vertex v = 0; v < n && ! pick; ++v) {
                if (! alive[v])
                    continue;
                if (degree[v] == 0)
                    pick = v;
                else if (degree[v] == remaining - 1) {
                    pick = v;
                    sign = '+';
                }
            }
            if (! pick)
                return std::nullopt;
            if (remaining == 1)
                sign = '-';
            alive[*pick] = false;
            for (auto w : g.neighbours(*pick))
                if (alive[w])
                    --degree[w];
            reversed.order.push_back(*pick);
            reversed.signs.push_back(sign);
        }
        std::reverse(reversed.order.begin(), reversed.order.end());
        std::reverse(reversed.signs.begin(), reversed.signs.end());
        return reversed;
    }

    auto is_threshold(const Graph & g) -> bool
    {
        auto family = threshold_family();
        return ! contains_any(g, family).has_value();
    }

    auto is_split(const Graph & g) -> bool
    {
        auto family = split_family();
        return ! contains_any(g, family).has_value();
    }

    auto threshold_edge_removal_witness(const Graph & g) -> VertexPair
    {
        if (g.edge_count() == 0)
            throw InvalidArgument("threshold edge witness needs at least one edge");
        if (! is_threshold(g))
            throw InvalidArgument("threshold edge witness needs a threshold graph");
        auto sequence = threshold_sequence(g);
        if (! sequence)
            throw InvalidArgument("threshold edge witness needs a threshold graph");

        // With the first sign '-', a graph with an edge always has some "-+" step.
        auto & s = sequence->signs;
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] == '-' && s[i + 1] == '+')
                return make_pair(sequence->order[i], sequence->order[i + 1]);
        return g.edges().front();
    }
}
