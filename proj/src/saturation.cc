#include <indsat/canonical.hh>
#include <indsat/errors.hh>
#include <indsat/saturation.hh>

#include <atomic>
#include <sstream>

namespace indsat
{
    namespace
    {
        auto make_matchers(std::span<const Graph> family) -> std::vector<InducedMatcher>
        {
            if (family.empty())
                throw InvalidArgument("family must not be empty");
            return {family.begin(), family.end()};
        }

        auto any_through(const std::vector<InducedMatcher> & matchers, const SearchHost & host, Vertex u, Vertex v)
            -> bool
        {
            for (auto & m : matchers)
                if (m.find_through(host, u, v))
                    return true;
            return false;
        }

        auto first_copy(const std::vector<InducedMatcher> & matchers, const SearchHost & host)
            -> std::optional<std::pair<std::size_t, Embedding>>
        {
            for (std::size_t i = 0; i < matchers.size(); ++i)
                if (auto e = matchers[i].find(host))
                    return std::pair{i, std::move(*e)};
            return std::nullopt;
        }

        // Lowest pair index in `pairs` whose toggle in `base` creates no copy.
        // Assumes the base host is free of every member, so a new copy must use the pair.
        auto first_dead_pair_serial(const SearchHost & base, std::span<const std::size_t> pairs,
            const std::vector<InducedMatcher> & matchers) -> std::optional<std::size_t>
        {
            SearchHost host = base;
            for (auto index : pairs) {
                auto p = pair_at(index);
                host.toggle(p.u, p.v);
                bool hit = any_through(matchers, host, p.u, p.v);
                host.toggle(p.u, p.v);
                if (! hit)
                    return index;
            }
            return std::nullopt;
        }

        auto first_dead_pair_parallel(const SearchHost & base, std::span<const std::size_t> pairs,
            const std::vector<InducedMatcher> & matchers, int jobs) -> std::optional<std::size_t>
        {
            constexpr auto none = static_cast<std::size_t>(-1);
            std::atomic<std::size_t> best{none};
            auto count = static_cast<std::ptrdiff_t>(pairs.size());

#pragma omp parallel num_threads(jobs)
            {
                SearchHost host = base;
#pragma omp for schedule(dynamic, 1)
                for (std::ptrdiff_t i = 0; i < count; ++i) {
                    auto index = pairs[static_cast<std::size_t>(i)];
                    if (index >= best.load(std::memory_order_relaxed))
                        continue;
                    auto p = pair_at(index);
                    host.toggle(p.u, p.v);
                    bool hit = any_through(matchers, host, p.u, p.v);
                    host.toggle(p.u, p.v);
                    if (! hit) {
                        auto current = best.load();
                        while (index < current && ! best.compare_exchange_weak(current, index)) {
                        }
                    }
                }
            }

            if (best.load() == none)
                return std::nullopt;
            return best.load();
        }

        auto first_dead_pair(const SearchHost & base, std::span<const std::size_t> pairs,
            const std::vector<InducedMatcher> & matchers, Exec exec) -> std::optional<std::size_t>
        {
            if (exec.parallel())
                return first_dead_pair_parallel(base, pairs, matchers, exec.jobs);
            return first_dead_pair_serial(base, pairs, matchers);
        }

        auto graph_verdict(const Graph & g, const std::vector<InducedMatcher> & matchers, bool is_family, Exec exec)
            -> Verdict
        {
            SearchHost host(g);
            if (auto hit = first_copy(matchers, host)) {
                Verdict v{NotFree{std::move(hit->second)}, std::nullopt};
                if (is_family)
                    v.member = hit->first;
                return v;
            }

            std::vector<std::size_t> pairs(pair_count(g.order()));
            for (std::size_t i = 0; i < pairs.size(); ++i)
                pairs[i] = i;
            if (auto dead = first_dead_pair(host, pairs, matchers, exec)) {
                auto p = pair_at(*dead);
                auto direction = g.adjacent(p.u, p.v) ? FlipDirection::Deleted : FlipDirection::Added;
                return {MissingOnFlip{p, direction}, std::nullopt};
            }
            return {Saturated{}, std::nullopt};
        }

        auto check_gray_guard(const Trigraph & t, std::size_t gray_limit) -> void
        {
            if (t.gray_count() > gray_limit || t.gray_count() > 63)
                throw GuardExceeded("trigraph has " + std::to_string(t.gray_count()) + " gray pairs; limit is " +
                    std::to_string(gray_limit));
        }

        auto trigraph_verdict(const Trigraph & t, const std::vector<InducedMatcher> & matchers, bool is_family,
            Exec exec, std::size_t gray_limit) -> Verdict
        {
            check_gray_guard(t, gray_limit);
            SearchHost host(t);
            if (auto hit = first_copy(matchers, host)) {
                auto mask = realization_mask_for(t, matchers[hit->first].pattern(), hit->second);
                Verdict v{TrigraphNotFree{mask, std::move(hit->second)}, std::nullopt};
                if (is_family)
                    v.member = hit->first;
                return v;
            }

            std::vector<std::size_t> pairs;
            for (std::size_t i = 0; i < pair_count(t.order()); ++i) {
                auto p = pair_at(i);
                if (t.color(p.u, p.v) != EdgeColor::Gray)
                    pairs.push_back(i);
            }
            if (auto dead = first_dead_pair(host, pairs, matchers, exec))
                return {TrigraphMissingOnGray{pair_at(*dead)}, std::nullopt};
            return {Saturated{}, std::nullopt};
        }

        auto print_pair(std::ostream & out, VertexPair p) -> void
        {
            out << p.u << ',' << p.v;
        }
    }

    auto Verdict::kind() const -> std::string
    {
        switch (outcome.index()) {
            case 0: return "saturated";
            case 1: return "not-free";
            case 2: return "missing-on-flip";
            case 3: return "trigraph-not-free";
            default: return "trigraph-missing-on-gray";
        }
    }

    auto to_report(const Verdict & v) -> std::string
    {
        if (v.saturated())
            return "SATURATED";

        std::ostringstream out;
        out << "FAIL " << v.kind() << ' ';
        auto member = [&] {
            if (v.member)
                out << " member=" << *v.member;
        };
        auto witness = [&](const Embedding & e) {
            for (auto w : e)
                out << ' ' << w;
        };

        if (auto * nf = std::get_if<NotFree>(&v.outcome)) {
            out << '-';
            member();
            witness(nf->witness);
        }
        else if (auto * mf = std::get_if<MissingOnFlip>(&v.outcome)) {
            print_pair(out, mf->pair);
            member();
            out << ' ' << (mf->direction == FlipDirection::Added ? "added" : "deleted");
        }
        else if (auto * tn = std::get_if<TrigraphNotFree>(&v.outcome)) {
            out << "mask=" << tn->mask;
            member();
            witness(tn->witness);
        }
        else if (auto * tm = std::get_if<TrigraphMissingOnGray>(&v.outcome)) {
            print_pair(out, tm->pair);
            member();
        }
        return out.str();
    }

    auto is_free(const Graph & g, const Graph & h) -> bool
    {
        return ! find_induced(g, h).has_value();
    }

    auto verify_graph_saturated(const Graph & g, const Graph & h, Exec exec) -> Verdict
    {
        std::vector<InducedMatcher> matchers{InducedMatcher(h)};
        return graph_verdict(g, matchers, false, exec);
    }

    auto verify_family_saturated(const Graph & g, std::span<const Graph> family, Exec exec) -> Verdict
    {
        return graph_verdict(g, make_matchers(family), true, exec);
    }

    auto verify_trigraph_saturated(const Trigraph & t, const Graph & h, Exec exec, std::size_t gray_limit) -> Verdict
    {
        std::vector<InducedMatcher> matchers{InducedMatcher(h)};
        return trigraph_verdict(t, matchers, false, exec, gray_limit);
    }

    auto verify_family_saturated(const Trigraph & t, std::span<const Graph> family, Exec exec,
        std::size_t gray_limit) -> Verdict
    {
        return trigraph_verdict(t, make_matchers(family), true, exec, gray_limit);
    }

    auto verify_trigraph_saturated_by_realizations(const Trigraph & t, const Graph & h, std::size_t gray_limit)
        -> Verdict
    {
        check_gray_guard(t, gray_limit);
        if (gray_limit < 63)
            ++gray_limit;

        auto all = realizations(t, gray_limit);
        for (auto it = all.begin(); it != all.end(); ++it)
            if (auto e = find_induced(*it, h))
                return {TrigraphNotFree{it.mask(), std::move(*e)}, std::nullopt};

        for (std::size_t i = 0; i < pair_count(t.order()); ++i) {
            auto p = pair_at(i);
            if (t.color(p.u, p.v) == EdgeColor::Gray)
                continue;
            auto grayed = std::move(TrigraphBuilder(t).set_color(p.u, p.v, EdgeColor::Gray)).build();
            bool hit = false;
            for (auto & r : realizations(grayed, gray_limit))
                if (find_induced(r, h)) {
                    hit = true;
                    break;
                }
            if (! hit)
                return {TrigraphMissingOnGray{p}, std::nullopt};
        }
        return {Saturated{}, std::nullopt};
    }

    auto degree_profile_check(const Graph & g) -> DegreeProfileReport
    {
        DegreeProfileReport report;
        auto degrees = g.degrees();
        std::size_t isolates = 0, twos = 0, threes = 0;
        std::optional<Vertex> isolate;
        for (Vertex v = 0; v < g.order(); ++v)
            switch (degrees[v]) {
                case 0: ++isolates; if (! isolate) isolate = v; break;
                case 1: report.no_degree_one = false; break;
                case 2: ++twos; break;
                case 3: ++threes; break;
                default: break;
            }
        report.at_most_one_isolate = isolates <= 1;
        report.at_most_one_degree_two = twos <= 1;
        report.at_most_two_degree_three = threes <= 2;
        if (isolate) {
            Vertex drop[1] = {*isolate};
            auto rest = remove_vertices(g, drop);
            report.isolate_residual_ok = rest.order() == 0 || rest.min_degree() >= 4;
        }
        return report;
    }

    auto classify_neighborhoods(const Graph & g) -> RBPartition
    {
        auto two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
        auto p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
        auto red_form = canonical_form(two_k2), blue_form = canonical_form(p4);

        RBPartition result;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) != 4) {
                result.other.push_back(v);
                continue;
            }
            auto form = canonical_form(induced_subgraph(g, g.neighbours(v)));
            if (form == red_form)
                result.red.push_back(v);
            else if (form == blue_form)
                result.blue.push_back(v);
            else
                result.other.push_back(v);
        }
        return result;
    }

    auto triangle_census(const Graph & g) -> TriangleCensus
    {
        TriangleCensus census;
        census.edges = g.edges();
        std::size_t total = 0;
        for (auto & e : census.edges) {
            std::size_t common = 0;
            auto a = g.row(e.u), b = g.row(e.v);
            for (std::size_t w = 0; w < a.size(); ++w)
                common += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
            census.per_edge.push_back(common);
            total += common;
            if (common == 1)
                ++census.edges_in_one;
            else if (common == 2)
                ++census.edges_in_two;
        }
        census.triangles = total / 3;
        return census;
    }

    auto suff_claw_check(const Graph & g) -> bool
    {
        auto partition = classify_neighborhoods(g);
        return partition.red.size() == g.order();
    }

    auto low_degree_set(const Graph & g, std::size_t k) -> std::vector<Vertex>
    {
        if (k < 2)
            throw InvalidArgument("low_degree_set needs k >= 2");
        std::vector<Vertex> result;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) + 1 <= k)
                result.push_back(v);
        return result;
    }
}
