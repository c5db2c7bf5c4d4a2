#ifndef INDSAT_PATTERNS_HH
#define INDSAT_PATTERNS_HH

#include <indsat/graph.hh>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indsat
{
    enum class PatternKind
    {
        Paw,
        Claw,
        Star,
        Path,
        Cycle,
        Complete,
        CompleteMultipartite,
        Matching,
        CyclePendant,
        CycleHop
    };

    /// A named target graph. `size` is the parameter of Star (leaves), Path,
    /// Cycle, Complete (orders), Matching (edges) and the cycle length of
    /// CyclePendant / CycleHop. `parts` is used by CompleteMultipartite only.
    struct PatternName
    {
        PatternKind kind = PatternKind::Paw;
        std::size_t size = 0;
        std::vector<std::size_t> parts;

        auto operator==(const PatternName &) const -> bool = default;
    };

    /// Labeled pattern graph. Throws InvalidArgument on bad parameters.
    auto pattern(const PatternName & name) -> Graph;

    /// Accepted spellings: paw, claw, star<t>, P<n>, C<n>, K<n>, K<a>,<b>[,...],
    /// <k>K2, C'<2k> or Cpend<2k>, Chat<2k> or Chop<2k>.
    auto parse_pattern(std::string_view text) -> PatternName;
    auto to_string(const PatternName & name) -> std::string;

    // Triangle 0-1-2 with pendant 3 attached to 2.
    auto paw() -> Graph;
    // Center 0.
    auto claw() -> Graph;
    auto star(std::size_t leaves) -> Graph;
    auto path(std::size_t order) -> Graph;
    auto cycle(std::size_t order) -> Graph;
    auto complete(std::size_t order) -> Graph;
    auto empty_graph(std::size_t order) -> Graph;
    // Parts occupy consecutive index ranges.
    auto complete_multipartite(std::span<const std::size_t> parts) -> Graph;
    // Edges (2i, 2i+1).
    auto matching(std::size_t edges) -> Graph;
    // Cycle 0..len-1 plus vertex len adjacent to 0.
    auto cycle_pendant(std::size_t length) -> Graph;
    // Cycle 0..len-1 plus the chord (0, 2).
    auto cycle_hop(std::size_t length) -> Graph;
}

#endif
