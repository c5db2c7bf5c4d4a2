#ifndef INDSAT_GRAPH_HH
#define INDSAT_GRAPH_HH

#include <indsat/bits.hh>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

namespace indsat
{
    using Vertex = std::size_t;

    /// Unordered vertex pair, always stored with u < v.
    struct VertexPair
    {
        Vertex u = 0;
        Vertex v = 0;

        auto operator<=>(const VertexPair &) const = default;
    };

    auto make_pair(Vertex a, Vertex b) -> VertexPair;

    // All pair enumeration (serialization, realization masks, flip loops,
    // search branching) uses this column-major upper-triangle order:
    // (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    constexpr auto pair_count(std::size_t n) -> std::size_t
    {
        return n < 2 ? 0 : n * (n - 1) / 2;
    }

    constexpr auto pair_index(Vertex u, Vertex v) -> std::size_t
    {
        if (u > v)
            std::swap(u, v);
        return v * (v - 1) / 2 + u;
    }

    auto pair_at(std::size_t index) -> VertexPair;

    /// Simple undirected graph with bit-row adjacency. Immutable once built;
    /// use GraphBuilder or the algebra functions to derive new graphs.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(std::size_t order);

        /// Duplicates collapse; throws InvalidArgument on loops or out-of-range endpoints.
        static auto from_edges(std::size_t order, std::span<const VertexPair> edges) -> Graph;
        static auto from_edges(std::size_t order, std::initializer_list<VertexPair> edges) -> Graph;

        /// Bit i of mask selects pair_at(i); requires pair_count(order) <= 64.
        static auto from_pair_mask(std::size_t order, std::uint64_t mask) -> Graph;

        auto order() const -> std::size_t { return order_; }
        auto edge_count() const -> std::size_t { return edges_; }
        auto words_per_row() const -> std::size_t { return words_; }

        auto adjacent(Vertex u, Vertex v) const -> bool;
        auto degree(Vertex v) const -> std::size_t;
        auto row(Vertex v) const -> std::span<const Word>;

        auto degrees() const -> std::vector<std::size_t>;
        auto neighbours(Vertex v) const -> std::vector<Vertex>;
        auto min_degree() const -> std::size_t;
        auto max_degree() const -> std::size_t;

        /// Edges in column-major pair order.
        auto edges() const -> std::vector<VertexPair>;

        /// Inverse of from_pair_mask; requires pair_count(order) <= 64.
        auto pair_mask() const -> std::uint64_t;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        friend class GraphBuilder;

        std::size_t order_ = 0;
        std::size_t words_ = 0;
        std::size_t edges_ = 0;
        std::vector<Word> bits_;
    };

    class GraphBuilder
    {
    public:
        explicit GraphBuilder(std::size_t order);
        explicit GraphBuilder(Graph start);

        auto add_edge(Vertex u, Vertex v) -> GraphBuilder &;
        auto remove_edge(Vertex u, Vertex v) -> GraphBuilder &;
        auto set_edge(Vertex u, Vertex v, bool present) -> GraphBuilder &;
        auto toggle(Vertex u, Vertex v) -> GraphBuilder &;

        auto graph() const -> const Graph & { return graph_; }
        auto build() && -> Graph { return std::move(graph_); }

    private:
        auto check(Vertex u, Vertex v) const -> void;
        auto row(Vertex v) -> std::span<Word>;

        Graph graph_;
    };

    enum class EdgeColor : std::uint8_t
    {
        White,
        Black,
        Gray
    };

    /// Every unordered pair of distinct vertices carries exactly one colour;
    /// pairs not black and not gray are white.
    class Trigraph
    {
    public:
        Trigraph() = default;
        explicit Trigraph(std::size_t order);

        /// Throws InvalidArgument if a pair is listed twice (within or across lists).
        static auto from_lists(std::size_t order, std::span<const VertexPair> black,
            std::span<const VertexPair> gray) -> Trigraph;
        static auto from_lists(std::size_t order, std::initializer_list<VertexPair> black,
            std::initializer_list<VertexPair> gray) -> Trigraph;
        static auto from_graph(const Graph & g) -> Trigraph;

        auto order() const -> std::size_t { return black_.order(); }
        auto color(Vertex u, Vertex v) const -> EdgeColor;

        auto black() const -> const Graph & { return black_; }
        auto gray() const -> const Graph & { return gray_; }

        auto black_count() const -> std::size_t { return black_.edge_count(); }
        auto gray_count() const -> std::size_t { return gray_.edge_count(); }
        auto white_count() const -> std::size_t;

        /// Gray pairs in column-major order; bit i of a realization mask refers to entry i.
        auto gray_pairs() const -> std::vector<VertexPair> { return gray_.edges(); }

        friend auto operator==(const Trigraph &, const Trigraph &) -> bool = default;

    private:
        friend class TrigraphBuilder;

        Graph black_;
        Graph gray_;
    };

    class TrigraphBuilder
    {
    public:
        explicit TrigraphBuilder(std::size_t order);
        explicit TrigraphBuilder(Trigraph start);

        auto set_color(Vertex u, Vertex v, EdgeColor c) -> TrigraphBuilder &;
        auto build() && -> Trigraph;

    private:
        GraphBuilder black_;
        GraphBuilder gray_;
    };

    auto flip_edge(const Graph & g, Vertex u, Vertex v) -> Graph;

    auto complement(const Graph & g) -> Graph;

    /// Black and white swap; gray pairs stay gray.
    auto complement(const Trigraph & t) -> Trigraph;

    /// Block-diagonal; part i occupies the next n(part i) indices.
    auto disjoint_union(std::span<const Graph> parts) -> Graph;
    auto disjoint_union(std::initializer_list<Graph> parts) -> Graph;

    auto join(const Graph & a, const Graph & b) -> Graph;

    /// Vertex (x, y) has index x * n(b) + y.
    auto cartesian_product(const Graph & a, const Graph & b) -> Graph;

    enum class BlowupMode
    {
        Independent,
        Clique
    };

    /// Vertex i becomes a block of sizes[i] consecutive vertices; blocks of adjacent
    /// vertices are joined completely.
    auto blowup(const Graph & g, std::span<const std::size_t> sizes, BlowupMode mode) -> Graph;

    /// Induced subgraph on the kept vertices, renumbered in increasing order.
    auto remove_vertices(const Graph & g, std::span<const Vertex> drop) -> Graph;

    /// Induced subgraph; vertex keep[i] becomes i.
    auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Graph;

    /// Result has an edge perm[u] perm[v] for every edge uv of g.
    auto relabel(const Graph & g, std::span<const Vertex> perm) -> Graph;
    auto relabel(const Trigraph & t, std::span<const Vertex> perm) -> Trigraph;

    inline constexpr std::size_t default_realization_gray_limit = 25;

    /// Black pairs plus the gray pairs selected by mask (bit i = gray_pairs()[i]).
    auto realization(const Trigraph & t, std::uint64_t mask) -> Graph;

    /// Input range over all 2^g realizations, masks ascending.
    class Realizations
    {
    public:
        class iterator
        {
        public:
            using iterator_category = std::input_iterator_tag;
            using value_type = Graph;
            using difference_type = std::ptrdiff_t;
            using pointer = const Graph *;
            using reference = const Graph &;

            iterator() = default;
            iterator(const Trigraph * t, std::uint64_t mask);

            auto operator*() const -> const Graph & { return current_; }
            auto operator->() const -> const Graph * { return &current_; }
            auto operator++() -> iterator &;
            auto operator++(int) -> iterator;
            auto mask() const -> std::uint64_t { return mask_; }

            friend auto operator==(const iterator & a, const iterator & b) -> bool { return a.mask_ == b.mask_; }

        private:
            const Trigraph * trigraph_ = nullptr;
            std::uint64_t mask_ = 0;
            std::uint64_t end_ = 0;
            Graph current_;
        };

        auto begin() const -> iterator { return {trigraph_, 0}; }
        auto end() const -> iterator { return {nullptr, count_}; }
        auto size() const -> std::uint64_t { return count_; }

    private:
        friend auto realizations(const Trigraph &, std::size_t) -> Realizations;
        Realizations(const Trigraph * t, std::uint64_t count) : trigraph_(t), count_(count) {}

        const Trigraph * trigraph_;
        std::uint64_t count_;
    };

    /// Throws GuardExceeded when gray_count() > gray_limit. The trigraph must outlive the range.
    auto realizations(const Trigraph & t, std::size_t gray_limit = default_realization_gray_limit) -> Realizations;
}

#endif
