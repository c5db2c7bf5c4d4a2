#include <indsat/canonical.hh>
#include <indsat/errors.hh>
#include <indsat/formats.hh>
#include <indsat/induced.hh>
#include <indsat/patterns.hh>
#include <indsat/saturation.hh>
#include <indsat/search.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace indsat
{
    namespace
    {
        constexpr std::size_t mask_pair_limit = 62;

        // Smallest index i in [0, total) for which the worker accepts i. Each thread
        // builds its own worker; threads see their indices in increasing order.
        template <typename MakeWorker>
        auto first_hit(std::uint64_t total, Exec exec, MakeWorker && make_worker) -> std::optional<std::uint64_t>
        {
            if (! exec.parallel()) {
                auto worker = make_worker();
                for (std::uint64_t i = 0; i < total; ++i)
                    if (worker(i))
                        return i;
                return std::nullopt;
            }

            std::atomic<std::uint64_t> best{total};
            auto count = static_cast<std::int64_t>(total);
#pragma omp parallel num_threads(exec.jobs)
            {
                auto worker = make_worker();
#pragma omp for schedule(dynamic, 64)
                for (std::int64_t s = 0; s < count; ++s) {
                    auto i = static_cast<std::uint64_t>(s);
                    if (i >= best.load(std::memory_order_relaxed))
                        continue;
                    if (worker(i)) {
                        auto current = best.load();
                        while (i < current && ! best.compare_exchange_weak(current, i)) {
                        }
                    }
                }
            }
            if (best.load() == total)
                return std::nullopt;
            return best.load();
        }

        auto next_same_popcount(std::uint64_t mask) -> std::uint64_t
        {
            auto lowest = mask & (~mask + 1);
            auto ripple = mask + lowest;
            return (((ripple ^ mask) >> 2) / lowest) | ripple;
        }

        // One pair mask per isomorphism class of g-edge graphs on n vertices,
        // in ascending mask order of first occurrence.
        auto gray_classes(std::size_t n, std::size_t g) -> std::vector<std::uint64_t>
        {
            auto pairs = pair_count(n);
            std::vector<std::uint64_t> result;
            if (g > pairs)
                return result;
            if (g == 0)
                return {0};
            std::unordered_set<std::string> seen;
            auto limit = std::uint64_t{1} << pairs;
            for (auto mask = (std::uint64_t{1} << g) - 1; mask < limit; mask = next_same_popcount(mask)) {
                if (seen.insert(canonical_form(Graph::from_pair_mask(n, mask))).second)
                    result.push_back(mask);
                if (g == pairs)
                    break;
            }
            return result;
        }

        auto elapsed(std::chrono::steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }

        auto choose(std::size_t n, std::size_t k) -> double
        {
            double r = 1;
            for (std::size_t i = 0; i < k; ++i)
                r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
            return r;
        }
    }

    auto indsat_state_space(std::size_t n, std::size_t gray_max) -> double
    {
        auto pairs = pair_count(n);
        double total = 0;
        for (std::size_t g = 0; g <= std::min(gray_max, pairs); ++g)
            total += choose(pairs, g) * std::pow(2.0, static_cast<double>(pairs - g));
        return total;
    }

    auto sis_state_space(std::size_t n) -> double
    {
        return std::pow(2.0, static_cast<double>(pair_count(n)));
    }

    auto search_indsat(std::size_t n, const Graph & h, std::size_t gray_max, Exec exec, const SearchOptions & options)
        -> SearchReport
    {
        if (! options.unsafe_override) {
            if (n > indsat_order_guard)
                throw GuardExceeded("search indsat limited to n <= " + std::to_string(indsat_order_guard));
            if (gray_max > indsat_gray_guard)
                throw GuardExceeded("search indsat limited to at most " + std::to_string(indsat_gray_guard) +
                    " gray pairs");
        }
        if (pair_count(n) > mask_pair_limit)
            throw GuardExceeded("search indsat cannot represent order " + std::to_string(n));

        auto start = std::chrono::steady_clock::now();
        SearchReport report;
        report.n = n;
        report.target = encode_graph6(h);
        report.budget = gray_max;

        auto pairs = pair_count(n);
        std::atomic<std::uint64_t> nodes{0};
        for (std::size_t g = 0; g <= std::min(gray_max, pairs); ++g) {
            auto classes = gray_classes(n, g);
            auto free_bits = pairs - g;
            std::vector<std::vector<VertexPair>> gray_lists, free_lists;
            for (auto mask : classes) {
                gray_lists.emplace_back();
                free_lists.emplace_back();
                for (std::size_t i = 0; i < pairs; ++i)
                    ((mask >> i) & 1u ? gray_lists.back() : free_lists.back()).push_back(pair_at(i));
            }

            auto build = [&](std::uint64_t index) {
                auto cls = static_cast<std::size_t>(index >> free_bits);
                auto mask = index & ((std::uint64_t{1} << free_bits) - 1);
                TrigraphBuilder b(n);
                for (auto & p : gray_lists[cls])
                    b.set_color(p.u, p.v, EdgeColor::Gray);
                for (std::size_t i = 0; i < free_bits; ++i)
                    if ((mask >> i) & 1u)
                        b.set_color(free_lists[cls][i].u, free_lists[cls][i].v, EdgeColor::Black);
                return std::move(b).build();
            };

            auto make_worker = [&] {
                return [&, seen = std::unordered_set<std::string>{}, matcher = InducedMatcher(h)](
                           std::uint64_t index) mutable {
                    nodes.fetch_add(1, std::memory_order_relaxed);
                    auto t = build(index);
                    if (matcher.find(SearchHost(t)))
                        return false;
                    if (! seen.insert(canonical_form(t, 64)).second)
                        return false;
                    return verify_trigraph_saturated(t, h, serial(), 64).saturated();
                };
            };

            auto total = static_cast<std::uint64_t>(classes.size()) << free_bits;
            if (auto hit = first_hit(total, exec, make_worker)) {
                report.status = SearchStatus::Found;
                report.value = g;
                report.trigraph_certificate = build(*hit);
                break;
            }
        }

        if (! report.value)
            report.status = gray_max >= pairs ? SearchStatus::NoneExists : SearchStatus::ExceedsBudget;
        report.nodes_explored = nodes.load();
        report.wall_seconds = elapsed(start);
        return report;
    }

    auto search_sis(std::size_t n, const Graph & h, std::size_t edge_max, Exec exec, const SearchOptions & options)
        -> SearchReport
    {
        if (! options.unsafe_override && n > sis_order_guard)
            throw GuardExceeded("search sis limited to n <= " + std::to_string(sis_order_guard));

        auto start = std::chrono::steady_clock::now();
        SearchReport report;
        report.n = n;
        report.target = encode_graph6(h);
        report.budget = edge_max;

        bool claw_target = h.order() == 4 && are_isomorphic(h, claw());
        auto profile = claw_degree_filter();
        auto filter = [&](const Graph & g) {
            if (g.edge_count() > edge_max)
                return false;
            return ! (options.prune && claw_target) || profile(g);
        };
        auto candidates = enumerate_graphs(n, filter, true, options.unsafe_override);

        std::vector<std::size_t> order(candidates.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
            [&](auto a, auto b) { return candidates[a].edge_count() < candidates[b].edge_count(); });

        std::atomic<std::uint64_t> nodes{0};
        auto make_worker = [&] {
            return [&](std::uint64_t i) {
                nodes.fetch_add(1, std::memory_order_relaxed);
                return verify_graph_saturated(candidates[order[i]], h, serial()).saturated();
            };
        };

        if (auto hit = first_hit(order.size(), exec, make_worker)) {
            auto & g = candidates[order[*hit]];
            report.status = SearchStatus::Found;
            report.value = g.edge_count();
            report.graph_certificate = g;
        }
        else
            report.status = edge_max >= pair_count(n) ? SearchStatus::NoneExists : SearchStatus::ExceedsBudget;

        report.nodes_explored = nodes.load();
        report.wall_seconds = elapsed(start);
        return report;
    }
}
