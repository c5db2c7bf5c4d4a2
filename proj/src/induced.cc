#include <indsat/canonical.hh>
#include <indsat/errors.hh>
#include <indsat/induced.hh>

#include <algorithm>

namespace indsat
{
    SearchHost::SearchHost(const Graph & g) :
        order_(g.order()),
        words_(g.words_per_row()),
        pos_(order_ * words_, 0),
        neg_(order_ * words_, 0)
    {
        for (Vertex v = 0; v < order_; ++v) {
            auto row = g.row(v);
            for (std::size_t w = 0; w < words_; ++w) {
                pos_[v * words_ + w] = row[w];
                neg_[v * words_ + w] = ~row[w];
            }
            neg_[v * words_ + words_ - 1] &= tail_mask(order_);
            clear_bit({neg_.data() + v * words_, words_}, v);
        }
    }

    SearchHost::SearchHost(const Trigraph & t) :
        order_(t.order()),
        words_(t.black().words_per_row()),
        pos_(order_ * words_, 0),
        neg_(order_ * words_, 0)
    {
        for (Vertex v = 0; v < order_; ++v) {
            auto black = t.black().row(v);
            auto gray = t.gray().row(v);
            for (std::size_t w = 0; w < words_; ++w) {
                pos_[v * words_ + w] = black[w] | gray[w];
                neg_[v * words_ + w] = ~black[w];
            }
            neg_[v * words_ + words_ - 1] &= tail_mask(order_);
            clear_bit({neg_.data() + v * words_, words_}, v);
        }
    }

    auto SearchHost::toggle(Vertex u, Vertex v) -> void
    {
        flip_bit({pos_.data() + u * words_, words_}, v);
        flip_bit({pos_.data() + v * words_, words_}, u);
        flip_bit({neg_.data() + u * words_, words_}, v);
        flip_bit({neg_.data() + v * words_, words_}, u);
    }

    InducedMatcher::InducedMatcher(const Graph & pattern) :
        pattern_(pattern),
        degree_(pattern.degrees())
    {
        auto n = pattern_.order();
        free_plan_ = make_plan({});
        if (n >= 2) {
            anchored_.resize(n * n);
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = 0; b < n; ++b)
                    if (a != b)
                        anchored_[a * n + b] = make_plan({a, b});
        }
    }

    auto InducedMatcher::make_plan(std::vector<Vertex> seed) const -> Plan
    {
        auto n = pattern_.order();
        std::vector<bool> placed(n, false);
        for (auto x : seed)
            placed[x] = true;

        Plan plan;
        plan.order = std::move(seed);
        while (plan.order.size() < n) {
            std::size_t best = n, best_links = 0;
            for (Vertex x = 0; x < n; ++x) {
                if (placed[x])
                    continue;
                std::size_t links = 0;
                for (auto y : plan.order)
                    if (pattern_.adjacent(x, y))
                        ++links;
                if (best == n || links > best_links || (links == best_links && degree_[x] > degree_[best])) {
                    best = x;
                    best_links = links;
                }
            }
            placed[best] = true;
            plan.order.push_back(best);
        }

        plan.constraints.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                plan.constraints[i].emplace_back(j, pattern_.adjacent(plan.order[i], plan.order[j]));
        return plan;
    }

    namespace
    {
        // Per-host candidate domains: host vertex w may take pattern vertex x only
        // if it has enough pos and neg neighbours.
        auto make_domains(const SearchHost & host, const Graph & pattern, std::span<const std::size_t> degree)
            -> std::vector<Word>
        {
            auto n = host.order();
            auto words = host.words_per_row();
            auto k = pattern.order();
            std::vector<std::size_t> pos_degree(n), neg_degree(n);
            for (Vertex w = 0; w < n; ++w) {
                pos_degree[w] = popcount(host.pos_row(w));
                neg_degree[w] = popcount(host.neg_row(w));
            }
            std::vector<Word> domains(k * words, 0);
            for (Vertex x = 0; x < k; ++x) {
                auto nondegree = k - 1 - degree[x];
                for (Vertex w = 0; w < n; ++w)
                    if (pos_degree[w] >= degree[x] && neg_degree[w] >= nondegree)
                        set_bit({domains.data() + x * words, words}, w);
            }
            return domains;
        }
    }

    auto InducedMatcher::run(const SearchHost & host, const Plan & plan, std::span<const Vertex> fixed) const
        -> std::optional<Embedding>
    {
        auto k = pattern_.order();
        auto n = host.order();
        if (k > n)
            return std::nullopt;
        if (k == 0)
            return Embedding{};

        auto words = host.words_per_row();
        auto domains = make_domains(host, pattern_, degree_);
        std::vector<Word> used(words, 0);
        std::vector<Word> candidates(k * words, 0);
        Embedding map(k, 0);

        auto compute = [&](std::size_t i) {
            auto x = plan.order[i];
            auto cand = candidates.data() + i * words;
            for (std::size_t w = 0; w < words; ++w)
                cand[w] = domains[x * words + w] & ~used[w];
            for (auto [j, adjacent] : plan.constraints[i]) {
                auto row = adjacent ? host.pos_row(map[plan.order[j]]) : host.neg_row(map[plan.order[j]]);
                for (std::size_t w = 0; w < words; ++w)
                    cand[w] &= row[w];
            }
            if (i < fixed.size()) {
                bool ok = test_bit({cand, words}, fixed[i]);
                std::fill(cand, cand + words, Word{0});
                if (ok)
                    set_bit({cand, words}, fixed[i]);
            }
        };

        // Iterative backtracking: candidates[i] holds the untried host vertices for position i.
        std::size_t i = 0;
        compute(0);
        while (true) {
            auto cand = candidates.data() + i * words;
            std::size_t w = 0;
            while (w < words && cand[w] == 0)
                ++w;
            if (w == words) {
                if (i == 0)
                    return std::nullopt;
                --i;
                clear_bit(used, map[plan.order[i]]);
                continue;
            }
            auto bit = static_cast<std::size_t>(std::countr_zero(cand[w]));
            cand[w] &= cand[w] - 1;
            auto target = w * bits_per_word + bit;
            map[plan.order[i]] = target;
            if (i + 1 == k)
                return map;
            set_bit(used, target);
            ++i;
            compute(i);
        }
    }

    auto InducedMatcher::find(const SearchHost & host) const -> std::optional<Embedding>
    {
        return run(host, free_plan_, {});
    }

    auto InducedMatcher::find_through(const SearchHost & host, Vertex u, Vertex v) const -> std::optional<Embedding>
    {
        auto k = pattern_.order();
        if (k < 2 || k > host.order())
            return std::nullopt;
        bool can_edge = test_bit(host.pos_row(u), v);
        bool can_non_edge = test_bit(host.neg_row(u), v);
        Vertex fixed[2] = {u, v};
        for (Vertex a = 0; a < k; ++a)
            for (Vertex b = 0; b < k; ++b) {
                if (a == b)
                    continue;
                bool adjacent = pattern_.adjacent(a, b);
                if ((adjacent && ! can_edge) || (! adjacent && ! can_non_edge))
                    continue;
                if (auto e = run(host, anchored_[a * k + b], fixed))
                    return e;
            }
        return std::nullopt;
    }

    auto find_induced(const Graph & g, const Graph & h) -> std::optional<Embedding>
    {
        return InducedMatcher(h).find(SearchHost(g));
    }

    auto find_induced(const Trigraph & t, const Graph & h) -> std::optional<Embedding>
    {
        return InducedMatcher(h).find(SearchHost(t));
    }

    auto is_induced_embedding(const Graph & g, const Graph & h, std::span<const Vertex> map) -> bool
    {
        if (map.size() != h.order())
            return false;
        std::vector<bool> seen(g.order(), false);
        for (auto w : map) {
            if (w >= g.order() || seen[w])
                return false;
            seen[w] = true;
        }
        for (Vertex x = 0; x < h.order(); ++x)
            for (Vertex y = x + 1; y < h.order(); ++y)
                if (h.adjacent(x, y) != g.adjacent(map[x], map[y]))
                    return false;
        return true;
    }

    auto realization_mask_for(const Trigraph & t, const Graph & h, std::span<const Vertex> map) -> std::uint64_t
    {
        auto gray = t.gray_pairs();
        if (gray.size() > 64)
            throw GuardExceeded("realization masks need at most 64 gray pairs");
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < gray.size(); ++i)
            for (Vertex x = 0; x < h.order(); ++x)
                for (Vertex y = x + 1; y < h.order(); ++y)
                    if (h.adjacent(x, y) && make_pair(map[x], map[y]) == gray[i])
                        mask |= std::uint64_t{1} << i;
        return mask;
    }

    auto count_induced(const Graph & g, const Graph & h, std::size_t order_limit) -> std::size_t
    {
        if (g.order() > order_limit)
            throw GuardExceeded("count_induced limited to host order " + std::to_string(order_limit));
        auto n = g.order(), k = h.order();
        if (k > n)
            return 0;
        auto target = canonical_form(h);
        std::vector<Vertex> subset(k);
        for (std::size_t i = 0; i < k; ++i)
            subset[i] = i;
        std::size_t count = 0;
        while (true) {
            if (canonical_form(induced_subgraph(g, subset)) == target)
                ++count;
            // next k-combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && subset[i - 1] == n - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++subset[i - 1];
            for (auto j = i; j < k; ++j)
                subset[j] = subset[j - 1] + 1;
        }
        return count;
    }

    auto contains_any(const Graph & g, std::span<const Graph> family) -> std::optional<std::pair<std::size_t, Embedding>>
    {
        if (family.empty())
            throw InvalidArgument("family must not be empty");
        SearchHost host(g);
        for (std::size_t i = 0; i < family.size(); ++i)
            if (auto e = InducedMatcher(family[i]).find(host))
                return std::pair{i, std::move(*e)};
        return std::nullopt;
    }
}
