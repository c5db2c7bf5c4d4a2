#ifndef INDSAT_CANONICAL_HH
#define INDSAT_CANONICAL_HH

#include <indsat/graph.hh>

#include <string>
#include <vector>

namespace indsat
{
    inline constexpr std::size_t default_canonical_order_limit = 16;

    /// Result of a canonical labeling: position[v] is the canonical index of
    /// vertex v, and form is a byte string that is equal for two inputs iff
    /// they are isomorphic (colour-preserving for trigraphs).
    struct CanonicalLabeling
    {
        std::string form;
        std::vector<Vertex> position;
    };

    /// Throws GuardExceeded if order exceeds order_limit (hard cap 64).
    auto canonical_labeling(const Graph & g, std::size_t order_limit = default_canonical_order_limit)
        -> CanonicalLabeling;
    auto canonical_labeling(const Trigraph & t, std::size_t order_limit = default_canonical_order_limit)
        -> CanonicalLabeling;

    auto canonical_form(const Graph & g, std::size_t order_limit = default_canonical_order_limit) -> std::string;
    auto canonical_form(const Trigraph & t, std::size_t order_limit = default_canonical_order_limit)
        -> std::string;

    /// The input relabeled into its canonical labeling.
    auto canonical_graph(const Graph & g, std::size_t order_limit = default_canonical_order_limit) -> Graph;
    auto canonical_trigraph(const Trigraph & t, std::size_t order_limit = default_canonical_order_limit)
        -> Trigraph;

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool;
    auto are_isomorphic(const Trigraph & a, const Trigraph & b) -> bool;
}

#endif
