#ifndef INDSAT_INDUCED_HH
#define INDSAT_INDUCED_HH

#include <indsat/graph.hh>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace indsat
{
    /// map[x] is the host vertex that pattern vertex x is sent to.
    using Embedding = std::vector<Vertex>;

    /// Host for induced search. For every pair, "pos" means it may serve as a
    /// pattern edge and "neg" means it may serve as a pattern non-edge. A plain
    /// graph has exactly one of the two per pair; a trigraph's gray pairs have both.
    class SearchHost
    {
    public:
        explicit SearchHost(const Graph & g);
        explicit SearchHost(const Trigraph & t);

        auto order() const -> std::size_t { return order_; }
        auto words_per_row() const -> std::size_t { return words_; }
        auto pos_row(Vertex v) const -> std::span<const Word> { return {pos_.data() + v * words_, words_}; }
        auto neg_row(Vertex v) const -> std::span<const Word> { return {neg_.data() + v * words_, words_}; }

        /// Swaps the pos and neg bits of the pair: an edge becomes a non-edge,
        /// black becomes white and vice versa, gray stays gray. Self-inverse.
        auto toggle(Vertex u, Vertex v) -> void;

    private:
        std::size_t order_ = 0;
        std::size_t words_ = 0;
        std::vector<Word> pos_;
        std::vector<Word> neg_;
    };

    /// Induced-subgraph matcher for one fixed pattern. Pattern vertices are
    /// placed most-constrained first; candidates are filtered by degree and by
    /// intersecting host rows of already-placed vertices. Deterministic.
    class InducedMatcher
    {
    public:
        explicit InducedMatcher(const Graph & pattern);

        auto pattern() const -> const Graph & { return pattern_; }

        auto find(const SearchHost & host) const -> std::optional<Embedding>;

        /// Only embeddings whose image contains both u and v.
        auto find_through(const SearchHost & host, Vertex u, Vertex v) const -> std::optional<Embedding>;

    private:
        struct Plan
        {
            std::vector<Vertex> order;
            // For order[i]: earlier positions j and whether order[j] ~ order[i] in the pattern.
            std::vector<std::vector<std::pair<std::size_t, bool>>> constraints;
        };

        auto make_plan(std::vector<Vertex> seed) const -> Plan;
        auto run(const SearchHost & host, const Plan & plan, std::span<const Vertex> fixed) const
            -> std::optional<Embedding>;

        Graph pattern_;
        std::vector<std::size_t> degree_;
        Plan free_plan_;
        // anchored_[a * n + b]: plan starting with pattern vertices a then b.
        std::vector<Plan> anchored_;
    };

    auto find_induced(const Graph & g, const Graph & h) -> std::optional<Embedding>;

    /// Some realization of t contains h as an induced subgraph.
    auto find_induced(const Trigraph & t, const Graph & h) -> std::optional<Embedding>;

    auto is_induced_embedding(const Graph & g, const Graph & h, std::span<const Vertex> map) -> bool;

    /// Gray pairs (bit i = t.gray_pairs()[i]) that map uses as pattern edges;
    /// realization(t, mask) then contains the copy.
    auto realization_mask_for(const Trigraph & t, const Graph & h, std::span<const Vertex> map) -> std::uint64_t;

    inline constexpr std::size_t default_count_order_limit = 12;

    /// Number of vertex subsets S with g[S] isomorphic to h, by exhaustive subset scan.
    auto count_induced(const Graph & g, const Graph & h, std::size_t order_limit = default_count_order_limit)
        -> std::size_t;

    /// First family member (in list order) that occurs, with its witness.
    auto contains_any(const Graph & g, std::span<const Graph> family)
        -> std::optional<std::pair<std::size_t, Embedding>>;
}

#endif
