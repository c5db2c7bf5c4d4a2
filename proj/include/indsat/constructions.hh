#ifndef INDSAT_CONSTRUCTIONS_HH
#define INDSAT_CONSTRUCTIONS_HH

#include <indsat/graph.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace indsat
{
    /// Part sizes of one complete multipartite component.
    struct PartSpec
    {
        std::vector<std::size_t> parts;
    };

    struct PawSpec
    {
        std::size_t isolated = 0;
        std::vector<PartSpec> components;
    };

    /// Components in list order, then the optional isolated vertex. Each component
    /// needs at least three parts, at most one part of size 1, all others of size >= 3.
    auto paw_construction(const PawSpec & spec) -> Graph;

    /// floor(n/7) components K_{1,3,3}; when 7 does not divide n, the last
    /// component's large part absorbs r - 1 extra vertices and one isolate is added.
    auto minimal_paw(std::size_t n) -> Graph;

    /// Edge count of minimal_paw(n): 15n/7 if r = 0, else 15 floor(n/7) + 4(r - 1).
    auto minimal_paw_edge_formula(std::size_t n) -> std::size_t;

    /// At most one isolated vertex; every other component is complete multipartite
    /// with at least three parts, at most one part of size 1 and the rest of size >= 3.
    auto recognize_paw_shape(const Graph & g) -> bool;

    /// z - 1 copies of the k-fold Cartesian power of K3 followed by one copy with a
    /// clique on R = n mod 3^k vertices joined to the vertices a * 3^(k-1), a = 0, 1, 2.
    /// Within a copy, coordinate vector (a1, ..., ak) has index sum ai * 3^(k-i).
    auto star_construction(std::size_t n, std::size_t k) -> Graph;

    enum class ClawGraph
    {
        H,
        J,
        K,
        L
    };

    auto claw_catalogue(ClawGraph which) -> Graph;

    /// Vertices a_i = i, b_i = m + i, c_i = 2m + i; edges a_i a_{i+1}, c_i c_{i+1},
    /// b_i a_i, b_i a_{i+1}, b_i c_i, b_i c_{i+1} (indices mod m).
    auto generalized_L(std::size_t m) -> Graph;

    /// Disjoint unions of H, J, K, L (plus an isolate when n = 1 mod 3) with
    /// 2n - 2, 2n or 2n + 2 edges. Empty for n < 9 and for n = 14, 17.
    auto claw_upper_construction(std::size_t n) -> std::optional<Graph>;

    /// k wheels with j spokes. Wheel i has hub i(j+1) and rim vertices i(j+1) + l
    /// for l = 1..j in cyclic order; for i < i', rim l of wheel i is adjacent to
    /// rims l and l+1 of wheel i'.
    auto icosa(std::size_t j, std::size_t k) -> Graph;

    /// icosa(7, floor(n/8)) with the first n mod 8 hubs doubled into adjacent twins;
    /// each twin is placed immediately after its hub.
    auto c4_minimal(std::size_t n) -> Graph;

    /// k - 1 copies of the icosahedron's complement, then isolated vertices.
    auto matching_construction(std::size_t n, std::size_t k) -> Graph;

    /// K_{k+1} x K_t (vertex (a, b) at a*t + b) with t = ceil(n/(k+1)), minus the
    /// first s = (k+1)t - n vertices of the last K_t fiber.
    auto cycles_construction(std::size_t n, std::size_t k) -> Graph;

    /// With c = ceil(sqrt n): K_{c/t} x K_{tc} minus c^2 - n vertices of the last
    /// K_{tc} fiber. Needs t >= 3, t | c, n >= (k+1)^4 and c/t >= k+1.
    auto cycles_subquadratic(std::size_t n, std::size_t k, std::size_t t) -> Graph;

    enum class TableTarget
    {
        Paw,
        Claw
    };

    /// Paw: n in 4..6; claw: n in 4..8.
    auto table_trigraph(TableTarget target, std::size_t n) -> Trigraph;

    /// K3 x K3 on 0..8 plus vertex 9, black to 1, 4, 6, 8 and gray to 7.
    auto c5_trigraph10() -> Trigraph;

    /// Vertex i is added as isolated ('-') or dominating ('+'); the first sign is
    /// irrelevant. Accepts '+', '-' and the Unicode minus sign.
    auto threshold_from_string(std::string_view signs) -> Graph;

    /// Peeling: repeatedly remove an isolated or dominating vertex. Returns the
    /// insertion order and sign string (first sign '-') if the graph is threshold.
    struct ThresholdSequence
    {
        std::vector<Vertex> order;
        std::string signs;
    };

    auto threshold_sequence(const Graph & g) -> std::optional<ThresholdSequence>;

    /// {2K2, P4, C4}-free.
    auto is_threshold(const Graph & g) -> bool;

    /// {2K2, C4, C5}-free.
    auto is_split(const Graph & g) -> bool;

    /// An edge whose removal keeps a threshold graph threshold. Throws
    /// InvalidArgument on non-threshold or edgeless input.
    auto threshold_edge_removal_witness(const Graph & g) -> VertexPair;
}

#endif
