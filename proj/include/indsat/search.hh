#ifndef INDSAT_SEARCH_HH
#define INDSAT_SEARCH_HH

#include <indsat/exec.hh>
#include <indsat/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace indsat
{
    inline constexpr std::size_t indsat_order_guard = 7;
    inline constexpr std::size_t indsat_gray_guard = 4;
    inline constexpr std::size_t sis_order_guard = 8;
    inline constexpr std::size_t enumerate_order_guard = 10;
    inline constexpr std::size_t labeled_enumerate_order_guard = 7;

    struct SearchOptions
    {
        /// Skip the default size guards (hard representation limits still apply).
        bool unsafe_override = false;
        /// search_sis only: apply the degree-profile filter when the target is the claw.
        bool prune = true;
    };

    enum class SearchStatus
    {
        Found,
        ExceedsBudget,
        NoneExists
    };

    struct SearchReport
    {
        std::size_t n = 0;
        /// graph6 of the target pattern.
        std::string target;
        /// Gray budget (indsat) or edge budget (sis).
        std::size_t budget = 0;
        SearchStatus status = SearchStatus::ExceedsBudget;
        std::optional<std::size_t> value;
        std::optional<Trigraph> trigraph_certificate;
        std::optional<Graph> graph_certificate;
        std::uint64_t nodes_explored = 0;
        double wall_seconds = 0.0;
    };

    /// Least g <= gray_max admitting an h-induced-saturated trigraph on n vertices.
    /// Gray placements are taken one per isomorphism class (masks ascending by
    /// Gosper order), black masks ascending; the certificate is the first
    /// saturated trigraph in that order for any job count.
    auto search_indsat(std::size_t n, const Graph & h, std::size_t gray_max, Exec exec = {},
        const SearchOptions & options = {}) -> SearchReport;

    /// Least edge count <= edge_max of an h-induced-saturated graph on n vertices,
    /// scanning one graph per isomorphism class. NoneExists only when edge_max
    /// covers every pair.
    auto search_sis(std::size_t n, const Graph & h, std::size_t edge_max, Exec exec = {},
        const SearchOptions & options = {}) -> SearchReport;

    /// Number of trigraphs the naive indsat search space holds for gray counts 0..gray_max.
    auto indsat_state_space(std::size_t n, std::size_t gray_max) -> double;
    /// 2^C(n,2).
    auto sis_state_space(std::size_t n) -> double;

    using GraphFilter = std::function<bool(const Graph &)>;

    /// dedup: one canonically labeled representative per isomorphism class, in
    /// discovery order of vertex-by-vertex extension (guard n <= 10). Otherwise every
    /// labeled graph in pair-mask order (guard n <= 7). The filter applies to the output.
    auto enumerate_graphs(std::size_t n, const GraphFilter & filter = {}, bool dedup = true,
        bool unsafe_override = false) -> std::vector<Graph>;

    auto min_degree_filter(std::size_t d) -> GraphFilter;

    /// Degree constraints every claw-induced-saturated graph satisfies.
    auto claw_degree_filter() -> GraphFilter;
}

#endif
