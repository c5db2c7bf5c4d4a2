#include <indsat/catalogue.hh>
#include <indsat/constructions.hh>
#include <indsat/errors.hh>

#include <charconv>

namespace indsat
{
    namespace
    {
        auto cycle_targets(std::size_t k) -> std::vector<PatternName>
        {
            return {{PatternKind::Cycle, 2 * k - 1, {}}, {PatternKind::CyclePendant, 2 * k, {}},
                {PatternKind::CycleHop, 2 * k, {}}};
        }

        auto number(const std::map<std::string, std::string> & params, const std::string & key) -> std::size_t
        {
            auto it = params.find(key);
            if (it == params.end())
                throw InvalidArgument("missing parameter --" + key);
            std::size_t value = 0;
            auto & text = it->second;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
                throw InvalidArgument("parameter --" + key + " must be a non-negative integer, got '" + text + "'");
            return value;
        }
    }

    auto catalogue() -> std::vector<CatalogueEntry>
    {
        const PatternName paw_target{PatternKind::Paw, 4, {}};
        const PatternName claw_target{PatternKind::Claw, 3, {}};
        const PatternName c4_target{PatternKind::Cycle, 4, {}};

        std::vector<CatalogueEntry> entries;
        entries.push_back({"paw_k133", minimal_paw(7), {paw_target}});
        for (std::size_t n : {8, 13, 14, 16, 20})
            entries.push_back({"minimal_paw_" + std::to_string(n), minimal_paw(n), {paw_target}});

        entries.push_back({"star_9_2", star_construction(9, 2), {{PatternKind::Star, 3, {}}}});
        entries.push_back({"star_10_2", star_construction(10, 2), {{PatternKind::Star, 3, {}}}});
        entries.push_back({"star_27_3", star_construction(27, 3), {{PatternKind::Star, 4, {}}}});

        entries.push_back({"claw_H", claw_catalogue(ClawGraph::H), {claw_target}});
        entries.push_back({"claw_J", claw_catalogue(ClawGraph::J), {claw_target}});
        entries.push_back({"claw_K", claw_catalogue(ClawGraph::K), {claw_target}});
        entries.push_back({"claw_L", claw_catalogue(ClawGraph::L), {claw_target}});
        for (std::size_t m : {6, 7, 8})
            entries.push_back({"genL_" + std::to_string(m), generalized_L(m), {claw_target}});
        entries.push_back(
            {"claw_H_plus_K1", disjoint_union({claw_catalogue(ClawGraph::H), Graph(1)}), {claw_target}});

        for (std::size_t j : {5, 6, 7})
            for (std::size_t k : {2, 3})
                entries.push_back(
                    {"icosa_" + std::to_string(j) + "_" + std::to_string(k), icosa(j, k), {c4_target}});
        entries.push_back({"c4_minimal_56", c4_minimal(56), {c4_target}});
        entries.push_back({"c4_minimal_57", c4_minimal(57), {c4_target}});

        for (auto [n, k] : {std::pair<std::size_t, std::size_t>{12, 2}, {13, 2}, {24, 3}})
            entries.push_back({"matching_" + std::to_string(n) + "_" + std::to_string(k),
                matching_construction(n, k), {{PatternKind::Matching, k, {}}}});

        for (auto [n, k] : {std::pair<std::size_t, std::size_t>{18, 3}, {20, 3}, {27, 4}})
            entries.push_back({"cycles_" + std::to_string(n) + "_" + std::to_string(k), cycles_construction(n, k),
                cycle_targets(k)});

        for (std::size_t n = 4; n <= 6; ++n)
            entries.push_back(
                {"indsat_paw_n" + std::to_string(n), table_trigraph(TableTarget::Paw, n), {paw_target}});
        for (std::size_t n = 4; n <= 8; ++n)
            entries.push_back(
                {"indsat_claw_n" + std::to_string(n), table_trigraph(TableTarget::Claw, n), {claw_target}});
        entries.push_back({"c5_trigraph_n10", c5_trigraph10(), {{PatternKind::Cycle, 5, {}}}});
        return entries;
    }

    auto find_catalogue_entry(std::string_view id) -> std::optional<CatalogueEntry>
    {
        for (auto & entry : catalogue())
            if (entry.id == id)
                return entry;
        return std::nullopt;
    }

    auto construction_names() -> std::vector<std::string>
    {
        return {"minimal-paw", "star", "claw-H", "claw-J", "claw-K", "claw-L", "claw-upper", "genL", "icosa",
            "c4-minimal", "matching", "cycles", "cycles-subquadratic", "table-paw", "table-claw", "c5-trigraph",
            "threshold"};
    }

    auto construct_named(std::string_view name, const std::map<std::string, std::string> & params) -> CatalogueObject
    {
        auto p = [&](const char * key) { return number(params, key); };

        if (name == "minimal-paw")
            return minimal_paw(p("n"));
        if (name == "star")
            return star_construction(p("n"), p("k"));
        if (name == "claw-H")
            return claw_catalogue(ClawGraph::H);
        if (name == "claw-J")
            return claw_catalogue(ClawGraph::J);
        if (name == "claw-K")
            return claw_catalogue(ClawGraph::K);
        if (name == "claw-L")
            return claw_catalogue(ClawGraph::L);
        if (name == "claw-upper") {
            auto g = claw_upper_construction(p("n"));
            if (! g)
                throw InvalidArgument("no claw construction for n = " + std::to_string(p("n")));
            return *g;
        }
        if (name == "genL")
            return generalized_L(p("m"));
        if (name == "icosa")
            return icosa(p("j"), p("k"));
        if (name == "c4-minimal")
            return c4_minimal(p("n"));
        if (name == "matching")
            return matching_construction(p("n"), p("k"));
        if (name == "cycles")
            return cycles_construction(p("n"), p("k"));
        if (name == "cycles-subquadratic")
            return cycles_subquadratic(p("n"), p("k"), p("t"));
        if (name == "table-paw")
            return table_trigraph(TableTarget::Paw, p("n"));
        if (name == "table-claw")
            return table_trigraph(TableTarget::Claw, p("n"));
        if (name == "c5-trigraph")
            return c5_trigraph10();
        if (name == "threshold") {
            auto it = params.find("signs");
            if (it == params.end())
                throw InvalidArgument("missing parameter --signs");
            return threshold_from_string(it->second);
        }
        if (auto entry = find_catalogue_entry(name))
            return entry->object;
        throw InvalidArgument("unknown catalogue id '" + std::string(name) + "'");
    }
}
