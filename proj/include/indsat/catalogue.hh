#ifndef INDSAT_CATALOGUE_HH
#define INDSAT_CATALOGUE_HH

#include <indsat/graph.hh>
#include <indsat/patterns.hh>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace indsat
{
    using CatalogueObject = std::variant<Graph, Trigraph>;

    /// A named construction together with the targets it is saturated for
    /// (each target individually).
    struct CatalogueEntry
    {
        std::string id;
        CatalogueObject object;
        std::vector<PatternName> targets;
    };

    /// Fixed list; ids are also the export file stems.
    auto catalogue() -> std::vector<CatalogueEntry>;

    auto find_catalogue_entry(std::string_view id) -> std::optional<CatalogueEntry>;

    /// Parametrised constructor by family name (minimal-paw, star, claw-H, genL,
    /// icosa, c4-minimal, matching, cycles, cycles-subquadratic, table-paw,
    /// table-claw, c5-trigraph, threshold, claw-upper) or any catalogue id.
    /// Integer parameters are looked up by key (n, k, j, m, t); "signs" is textual.
    auto construct_named(std::string_view name, const std::map<std::string, std::string> & params)
        -> CatalogueObject;

    auto construction_names() -> std::vector<std::string>;
}

#endif
