#include <indsat/errors.hh>
#include <indsat/graph.hh>

#include <algorithm>
#include <cmath>
#include <string>

namespace indsat
{
    auto make_pair(Vertex a, Vertex b) -> VertexPair
    {
        return a < b ? VertexPair{a, b} : VertexPair{b, a};
    }

    auto pair_at(std::size_t index) -> VertexPair
    {
        // largest v with v(v-1)/2 <= index
        auto v = static_cast<Vertex>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
        while (v * (v - 1) / 2 > index)
            --v;
        while ((v + 1) * v / 2 <= index)
            ++v;
        return {index - v * (v - 1) / 2, v};
    }

    Graph::Graph(std::size_t order) :
        order_(order),
        words_(words_for(order)),
        bits_(order * words_for(order), 0)
    {
    }

    auto Graph::from_edges(std::size_t order, std::span<const VertexPair> edges) -> Graph
    {
        GraphBuilder b(order);
        for (auto & e : edges)
            b.add_edge(e.u, e.v);
        return std::move(b).build();
    }

    auto Graph::from_edges(std::size_t order, std::initializer_list<VertexPair> edges) -> Graph
    {
        return from_edges(order, std::span<const VertexPair>(edges.begin(), edges.size()));
    }

    auto Graph::from_pair_mask(std::size_t order, std::uint64_t mask) -> Graph
    {
        auto pairs = pair_count(order);
        if (pairs > 64)
            throw InvalidArgument("pair mask needs order <= 11");
        GraphBuilder b(order);
        for (std::size_t i = 0; i < pairs; ++i)
            if ((mask >> i) & 1u) {
                auto p = pair_at(i);
                b.add_edge(p.u, p.v);
            }
        return std::move(b).build();
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        return test_bit(row(u), v);
    }

    auto Graph::degree(Vertex v) const -> std::size_t
    {
        return popcount(row(v));
    }

    auto Graph::row(Vertex v) const -> std::span<const Word>
    {
        return {bits_.data() + v * words_, words_};
    }

    auto Graph::degrees() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> result(order_);
        for (Vertex v = 0; v < order_; ++v)
            result[v] = degree(v);
        return result;
    }

    auto Graph::neighbours(Vertex v) const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        for_each_bit(row(v), [&](std::size_t w) { result.push_back(w); });
        return result;
    }

    auto Graph::min_degree() const -> std::size_t
    {
        auto d = degrees();
        return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
    }

    auto Graph::max_degree() const -> std::size_t
    {
        auto d = degrees();
        return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    }

    auto Graph::edges() const -> std::vector<VertexPair>
    {
        std::vector<VertexPair> result;
        result.reserve(edges_);
        for (Vertex v = 1; v < order_; ++v)
            for (Vertex u = 0; u < v; ++u)
                if (adjacent(u, v))
                    result.push_back({u, v});
        return result;
    }

    auto Graph::pair_mask() const -> std::uint64_t
    {
        if (pair_count(order_) > 64)
            throw InvalidArgument("pair mask needs order <= 11");
        std::uint64_t mask = 0;
        for (Vertex v = 1; v < order_; ++v)
            for (Vertex u = 0; u < v; ++u)
                if (adjacent(u, v))
                    mask |= std::uint64_t{1} << pair_index(u, v);
        return mask;
    }

    GraphBuilder::GraphBuilder(std::size_t order) :
        graph_(order)
    {
    }

    GraphBuilder::GraphBuilder(Graph start) :
        graph_(std::move(start))
    {
    }

    auto GraphBuilder::check(Vertex u, Vertex v) const -> void
    {
        if (u >= graph_.order_ || v >= graph_.order_)
            throw InvalidArgument("vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                ") out of range for order " + std::to_string(graph_.order_));
        if (u == v)
            throw InvalidArgument("loop at vertex " + std::to_string(u));
    }

    auto GraphBuilder::row(Vertex v) -> std::span<Word>
    {
        return {graph_.bits_.data() + v * graph_.words_, graph_.words_};
    }

    auto GraphBuilder::add_edge(Vertex u, Vertex v) -> GraphBuilder &
    {
        return set_edge(u, v, true);
    }

    auto GraphBuilder::remove_edge(Vertex u, Vertex v) -> GraphBuilder &
    {
        return set_edge(u, v, false);
    }

    auto GraphBuilder::set_edge(Vertex u, Vertex v, bool present) -> GraphBuilder &
    {
        check(u, v);
        if (graph_.adjacent(u, v) != present)
            toggle(u, v);
        return *this;
    }

    auto GraphBuilder::toggle(Vertex u, Vertex v) -> GraphBuilder &
    {
        check(u, v);
        bool was = graph_.adjacent(u, v);
        flip_bit(row(u), v);
        flip_bit(row(v), u);
        if (was)
            --graph_.edges_;
        else
            ++graph_.edges_;
        return *this;
    }

    Trigraph::Trigraph(std::size_t order) :
        black_(order),
        gray_(order)
    {
    }

    auto Trigraph::from_lists(std::size_t order, std::span<const VertexPair> black,
        std::span<const VertexPair> gray) -> Trigraph
    {
        TrigraphBuilder b(order);
        Graph seen(order);
        GraphBuilder seen_builder(std::move(seen));
        auto add = [&](const VertexPair & p, EdgeColor c) {
            if (p.u != p.v && p.u < order && p.v < order && seen_builder.graph().adjacent(p.u, p.v))
                throw InvalidArgument("pair (" + std::to_string(p.u) + "," + std::to_string(p.v) + ") listed twice");
            seen_builder.add_edge(p.u, p.v);
            b.set_color(p.u, p.v, c);
        };
        for (auto & p : black)
            add(p, EdgeColor::Black);
        for (auto & p : gray)
            add(p, EdgeColor::Gray);
        return std::move(b).build();
    }

    auto Trigraph::from_lists(std::size_t order, std::initializer_list<VertexPair> black,
        std::initializer_list<VertexPair> gray) -> Trigraph
    {
        return from_lists(order, std::span<const VertexPair>(black.begin(), black.size()),
            std::span<const VertexPair>(gray.begin(), gray.size()));
    }

    auto Trigraph::from_graph(const Graph & g) -> Trigraph
    {
        Trigraph t;
        t.black_ = g;
        t.gray_ = Graph(g.order());
        return t;
    }

    auto Trigraph::color(Vertex u, Vertex v) const -> EdgeColor
    {
        if (black_.adjacent(u, v))
            return EdgeColor::Black;
        if (gray_.adjacent(u, v))
            return EdgeColor::Gray;
        return EdgeColor::White;
    }

    auto Trigraph::white_count() const -> std::size_t
    {
        return pair_count(order()) - black_count() - gray_count();
    }

    TrigraphBuilder::TrigraphBuilder(std::size_t order) :
        black_(order),
        gray_(order)
    {
    }

    TrigraphBuilder::TrigraphBuilder(Trigraph start) :
        black_(std::move(start.black_)),
        gray_(std::move(start.gray_))
    {
    }

    auto TrigraphBuilder::set_color(Vertex u, Vertex v, EdgeColor c) -> TrigraphBuilder &
    {
        black_.set_edge(u, v, c == EdgeColor::Black);
        gray_.set_edge(u, v, c == EdgeColor::Gray);
        return *this;
    }

    auto TrigraphBuilder::build() && -> Trigraph
    {
        Trigraph t;
        t.black_ = std::move(black_).build();
        t.gray_ = std::move(gray_).build();
        return t;
    }

    auto flip_edge(const Graph & g, Vertex u, Vertex v) -> Graph
    {
        GraphBuilder b(g);
        b.toggle(u, v);
        return std::move(b).build();
    }

    auto complement(const Graph & g) -> Graph
    {
        GraphBuilder b(g.order());
        for (Vertex v = 1; v < g.order(); ++v)
            for (Vertex u = 0; u < v; ++u)
                if (! g.adjacent(u, v))
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    auto complement(const Trigraph & t) -> Trigraph
    {
        TrigraphBuilder b(t.order());
        for (Vertex v = 1; v < t.order(); ++v)
            for (Vertex u = 0; u < v; ++u)
                switch (t.color(u, v)) {
                    case EdgeColor::Black: b.set_color(u, v, EdgeColor::White); break;
                    case EdgeColor::White: b.set_color(u, v, EdgeColor::Black); break;
                    case EdgeColor::Gray: b.set_color(u, v, EdgeColor::Gray); break;
                }
        return std::move(b).build();
    }

    auto disjoint_union(std::span<const Graph> parts) -> Graph
    {
        std::size_t total = 0;
        for (auto & p : parts)
            total += p.order();
        GraphBuilder b(total);
        std::size_t offset = 0;
        for (auto & p : parts) {
            for (auto & e : p.edges())
                b.add_edge(offset + e.u, offset + e.v);
            offset += p.order();
        }
        return std::move(b).build();
    }

    auto disjoint_union(std::initializer_list<Graph> parts) -> Graph
    {
        return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
    }

    auto join(const Graph & a, const Graph & b) -> Graph
    {
        GraphBuilder result(disjoint_union({a, b}));
        for (Vertex u = 0; u < a.order(); ++u)
            for (Vertex v = 0; v < b.order(); ++v)
                result.add_edge(u, a.order() + v);
        return std::move(result).build();
    }

    auto cartesian_product(const Graph & a, const Graph & b) -> Graph
    {
        auto nb = b.order();
        GraphBuilder result(a.order() * nb);
        for (Vertex x = 0; x < a.order(); ++x)
            for (auto & e : b.edges())
                result.add_edge(x * nb + e.u, x * nb + e.v);
        for (auto & e : a.edges())
            for (Vertex y = 0; y < nb; ++y)
                result.add_edge(e.u * nb + y, e.v * nb + y);
        return std::move(result).build();
    }

    auto blowup(const Graph & g, std::span<const std::size_t> sizes, BlowupMode mode) -> Graph
    {
        if (sizes.size() != g.order())
            throw InvalidArgument("blowup needs one size per vertex: got " + std::to_string(sizes.size()) +
                " sizes for order " + std::to_string(g.order()));
        std::vector<std::size_t> start(g.order() + 1, 0);
        for (Vertex v = 0; v < g.order(); ++v) {
            if (sizes[v] < 1)
                throw InvalidArgument("blowup sizes must be positive");
            start[v + 1] = start[v] + sizes[v];
        }
        GraphBuilder b(start.back());
        for (Vertex v = 0; v < g.order(); ++v)
            if (mode == BlowupMode::Clique)
                for (auto x = start[v]; x < start[v + 1]; ++x)
                    for (auto y = x + 1; y < start[v + 1]; ++y)
                        b.add_edge(x, y);
        for (auto & e : g.edges())
            for (auto x = start[e.u]; x < start[e.u + 1]; ++x)
                for (auto y = start[e.v]; y < start[e.v + 1]; ++y)
                    b.add_edge(x, y);
        return std::move(b).build();
    }

    auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Graph
    {
        for (auto v : keep)
            if (v >= g.order())
                throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        GraphBuilder b(keep.size());
        for (std::size_t j = 1; j < keep.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (g.adjacent(keep[i], keep[j]))
                    b.add_edge(i, j);
        return std::move(b).build();
    }

    auto remove_vertices(const Graph & g, std::span<const Vertex> drop) -> Graph
    {
        std::vector<bool> dropped(g.order(), false);
        for (auto v : drop) {
            if (v >= g.order())
                throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
            dropped[v] = true;
        }
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.order(); ++v)
            if (! dropped[v])
                keep.push_back(v);
        return induced_subgraph(g, keep);
    }

    auto relabel(const Graph & g, std::span<const Vertex> perm) -> Graph
    {
        if (perm.size() != g.order())
            throw InvalidArgument("permutation length does not match order");
        GraphBuilder b(g.order());
        for (auto & e : g.edges())
            b.add_edge(perm[e.u], perm[e.v]);
        return std::move(b).build();
    }

    auto relabel(const Trigraph & t, std::span<const Vertex> perm) -> Trigraph
    {
        if (perm.size() != t.order())
            throw InvalidArgument("permutation length does not match order");
        TrigraphBuilder b(t.order());
        for (auto & e : t.black().edges())
            b.set_color(perm[e.u], perm[e.v], EdgeColor::Black);
        for (auto & e : t.gray().edges())
            b.set_color(perm[e.u], perm[e.v], EdgeColor::Gray);
        return std::move(b).build();
    }

    auto realization(const Trigraph & t, std::uint64_t mask) -> Graph
    {
        GraphBuilder b(t.black());
        auto gray = t.gray_pairs();
        for (std::size_t i = 0; i < gray.size() && i < 64; ++i)
            if ((mask >> i) & 1u)
                b.add_edge(gray[i].u, gray[i].v);
        return std::move(b).build();
    }

    Realizations::iterator::iterator(const Trigraph * t, std::uint64_t mask) :
        trigraph_(t),
        mask_(mask)
    {
        if (t) {
            end_ = std::uint64_t{1} << t->gray_count();
            current_ = realization(*t, mask_);
        }
    }

    auto Realizations::iterator::operator++() -> iterator &
    {
        ++mask_;
        if (mask_ < end_)
            current_ = realization(*trigraph_, mask_);
        return *this;
    }

    auto Realizations::iterator::operator++(int) -> iterator
    {
        auto old = *this;
        ++*this;
        return old;
    }

    auto realizations(const Trigraph & t, std::size_t gray_limit) -> Realizations
    {
        if (t.gray_count() > gray_limit || t.gray_count() >= 64)
            throw GuardExceeded("trigraph has " + std::to_string(t.gray_count()) + " gray pairs; limit is " +
                std::to_string(gray_limit));
        return Realizations(&t, std::uint64_t{1} << t.gray_count());
    }
}
