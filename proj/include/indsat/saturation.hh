#ifndef INDSAT_SATURATION_HH
#define INDSAT_SATURATION_HH

#include <indsat/exec.hh>
#include <indsat/graph.hh>
#include <indsat/induced.hh>

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace indsat
{
    enum class FlipDirection
    {
        Added,
        Deleted
    };

    struct Saturated
    {
        auto operator==(const Saturated &) const -> bool = default;
    };

    /// The input itself contains a copy of the target.
    struct NotFree
    {
        Embedding witness;
        auto operator==(const NotFree &) const -> bool = default;
    };

    /// Flipping this pair does not create a copy.
    struct MissingOnFlip
    {
        VertexPair pair;
        FlipDirection direction;
        auto operator==(const MissingOnFlip &) const -> bool = default;
    };

    /// realization(t, mask) contains the copy given by witness.
    struct TrigraphNotFree
    {
        std::uint64_t mask;
        Embedding witness;
        auto operator==(const TrigraphNotFree &) const -> bool = default;
    };

    /// Turning this black or white pair gray creates no realization with a copy.
    struct TrigraphMissingOnGray
    {
        VertexPair pair;
        auto operator==(const TrigraphMissingOnGray &) const -> bool = default;
    };

    using Outcome = std::variant<Saturated, NotFree, MissingOnFlip, TrigraphNotFree, TrigraphMissingOnGray>;

    struct Verdict
    {
        Outcome outcome;
        /// Family index of the member a NotFree/TrigraphNotFree witness belongs to.
        std::optional<std::size_t> member;

        auto saturated() const -> bool { return std::holds_alternative<Saturated>(outcome); }
        auto kind() const -> std::string;
        auto operator==(const Verdict &) const -> bool = default;
    };

    /// "SATURATED", or "FAIL <kind> <pair-or-mask> [member=i] <witness...>".
    auto to_report(const Verdict & v) -> std::string;

    auto is_free(const Graph & g, const Graph & h) -> bool;

    /// Literal definition: free of h, and every pair flip (lowest pair first) creates a copy.
    auto verify_graph_saturated(const Graph & g, const Graph & h, Exec exec = {}) -> Verdict;
    auto verify_family_saturated(const Graph & g, std::span<const Graph> family, Exec exec = {}) -> Verdict;

    /// Condition (b) is checked on the realizations with the pair set to its
    /// opposite colour only; the other realizations of the graying are realizations of t.
    auto verify_trigraph_saturated(const Trigraph & t, const Graph & h, Exec exec = {},
        std::size_t gray_limit = default_realization_gray_limit) -> Verdict;
    auto verify_family_saturated(const Trigraph & t, std::span<const Graph> family, Exec exec = {},
        std::size_t gray_limit = default_realization_gray_limit) -> Verdict;

    /// Definitional check that enumerates every realization of t and of each
    /// single-pair graying. Slow; kept as a reference for testing.
    auto verify_trigraph_saturated_by_realizations(const Trigraph & t, const Graph & h,
        std::size_t gray_limit = default_realization_gray_limit) -> Verdict;

    struct DegreeProfileReport
    {
        bool at_most_one_isolate = true;
        bool no_degree_one = true;
        bool at_most_one_degree_two = true;
        bool at_most_two_degree_three = true;
        /// If an isolated vertex v exists, G - v has minimum degree at least 4.
        bool isolate_residual_ok = true;

        auto all() const -> bool
        {
            return at_most_one_isolate && no_degree_one && at_most_one_degree_two && at_most_two_degree_three &&
                isolate_residual_ok;
        }
    };

    auto degree_profile_check(const Graph & g) -> DegreeProfileReport;

    /// red: neighbourhood induces 2K2; blue: induces P4; other: everything else.
    struct RBPartition
    {
        std::vector<Vertex> red;
        std::vector<Vertex> blue;
        std::vector<Vertex> other;
    };

    auto classify_neighborhoods(const Graph & g) -> RBPartition;

    struct TriangleCensus
    {
        std::vector<VertexPair> edges;
        std::vector<std::size_t> per_edge;
        std::size_t edges_in_one = 0;
        std::size_t edges_in_two = 0;
        std::size_t triangles = 0;
    };

    auto triangle_census(const Graph & g) -> TriangleCensus;

    /// Every neighbourhood induces 2K2 (a sufficient condition for claw saturation).
    auto suff_claw_check(const Graph & g) -> bool;

    /// Vertices of degree at most k - 1. Requires k >= 2.
    auto low_degree_set(const Graph & g, std::size_t k) -> std::vector<Vertex>;
}

#endif
