#include <indsat/canonical.hh>
#include <indsat/errors.hh>

#include <algorithm>
#include <bit>
#include <numeric>

namespace indsat
{
    namespace
    {
        using Cell = std::vector<std::uint8_t>;
        using Partition = std::vector<Cell>;
        using Perm = std::vector<std::uint8_t>;

        constexpr std::size_t hard_order_limit = 64;
        constexpr std::size_t max_stored_automorphisms = 64;

        class Canonicaliser
        {
        public:
            Canonicaliser(std::size_t n, std::vector<std::vector<std::uint64_t>> layers) :
                n_(n),
                layers_(std::move(layers))
            {
            }

            auto run() -> CanonicalLabeling
            {
                Partition root;
                if (n_ > 0) {
                    Cell all(n_);
                    std::iota(all.begin(), all.end(), 0);
                    root.push_back(std::move(all));
                }
                refine(root);
                search(root, 0);

                CanonicalLabeling result;
                result.form = best_cert_;
                result.position.resize(n_);
                for (std::size_t i = 0; i < n_; ++i)
                    result.position[best_order_[i]] = i;
                return result;
            }

        private:
            std::size_t n_;
            std::vector<std::vector<std::uint64_t>> layers_;

            Perm prefix_;
            bool have_first_ = false;
            Perm first_prefix_;
            Perm first_order_;
            std::string first_cert_;
            Perm best_order_;
            std::string best_cert_;
            std::vector<Perm> automorphisms_;

            auto key(std::uint8_t v, std::uint64_t splitter) const -> std::size_t
            {
                std::size_t k = 0;
                for (auto & layer : layers_)
                    k = k * (n_ + 1) + static_cast<std::size_t>(std::popcount(layer[v] & splitter));
                return k;
            }

            // Equitable refinement; cells split by per-layer neighbour counts into
            // a splitter cell, subcells in ascending key order, restarting after each split.
            auto refine(Partition & p) const -> void
            {
                std::vector<std::pair<std::size_t, std::uint8_t>> keyed;
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (std::size_t s = 0; s < p.size() && ! changed; ++s) {
                        std::uint64_t splitter = 0;
                        for (auto v : p[s])
                            splitter |= std::uint64_t{1} << v;
                        for (std::size_t c = 0; c < p.size() && ! changed; ++c) {
                            if (p[c].size() == 1)
                                continue;
                            keyed.clear();
                            for (auto v : p[c])
                                keyed.emplace_back(key(v, splitter), v);
                            bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                [&](auto & e) { return e.first == keyed.front().first; });
                            if (uniform)
                                continue;
                            std::sort(keyed.begin(), keyed.end());
                            Partition pieces;
                            for (std::size_t i = 0; i < keyed.size(); ++i) {
                                if (i == 0 || keyed[i].first != keyed[i - 1].first)
                                    pieces.emplace_back();
                                pieces.back().push_back(keyed[i].second);
                            }
                            p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
                            p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                            changed = true;
                        }
                    }
                }
            }

            auto certificate(const Perm & order) const -> std::string
            {
                std::string cert;
                cert.push_back(static_cast<char>(n_));
                cert.push_back(static_cast<char>(layers_.size()));
                for (auto & layer : layers_) {
                    unsigned char byte = 0;
                    int filled = 0;
                    for (std::size_t j = 1; j < n_; ++j)
                        for (std::size_t i = 0; i < j; ++i) {
                            byte = static_cast<unsigned char>((byte << 1) | ((layer[order[i]] >> order[j]) & 1u));
                            if (++filled == 8) {
                                cert.push_back(static_cast<char>(byte));
                                byte = 0;
                                filled = 0;
                            }
                        }
                    if (filled != 0)
                        cert.push_back(static_cast<char>(byte << (8 - filled)));
                }
                return cert;
            }

            auto store_automorphism(const Perm & from, const Perm & to) -> void
            {
                if (automorphisms_.size() >= max_stored_automorphisms)
                    return;
                Perm gamma(n_);
                bool identity = true;
                for (std::size_t i = 0; i < n_; ++i) {
                    gamma[from[i]] = to[i];
                    identity = identity && from[i] == to[i];
                }
                if (! identity)
                    automorphisms_.push_back(std::move(gamma));
            }

            auto find_root(std::vector<std::uint8_t> & parent, std::uint8_t x) const -> std::uint8_t
            {
                while (parent[x] != x) {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                return x;
            }

            // Orbits of the stored automorphisms that fix the current prefix pointwise.
            auto prefix_orbits() -> std::vector<std::uint8_t>
            {
                std::vector<std::uint8_t> parent(n_);
                std::iota(parent.begin(), parent.end(), 0);
                for (auto & gamma : automorphisms_) {
                    bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](auto v) { return gamma[v] == v; });
                    if (! fixes)
                        continue;
                    for (std::size_t v = 0; v < n_; ++v) {
                        auto a = find_root(parent, static_cast<std::uint8_t>(v));
                        auto b = find_root(parent, gamma[v]);
                        if (a != b)
                            parent[std::max(a, b)] = std::min(a, b);
                    }
                }
                for (std::size_t v = 0; v < n_; ++v)
                    parent[v] = find_root(parent, static_cast<std::uint8_t>(v));
                return parent;
            }

            // Returns the depth of the node that should continue exploring.
            auto search(const Partition & p, int depth) -> int
            {
                auto target = p.end();
                for (auto c = p.begin(); c != p.end(); ++c)
                    if (c->size() > 1 && (target == p.end() || c->size() < target->size()))
                        target = c;

                if (target == p.end())
                    return leaf(p, depth);

                auto target_index = static_cast<std::size_t>(target - p.begin());
                std::vector<std::uint8_t> explored;
                for (auto w : *target) {
                    if (! explored.empty() && ! automorphisms_.empty()) {
                        auto orbit = prefix_orbits();
                        if (std::any_of(explored.begin(), explored.end(), [&](auto x) { return orbit[x] == orbit[w]; }))
                            continue;
                    }

                    Partition child;
                    child.reserve(p.size() + 1);
                    for (std::size_t c = 0; c < p.size(); ++c) {
                        if (c != target_index) {
                            child.push_back(p[c]);
                            continue;
                        }
                        child.push_back(Cell{w});
                        Cell rest;
                        for (auto x : p[c])
                            if (x != w)
                                rest.push_back(x);
                        child.push_back(std::move(rest));
                    }
                    refine(child);

                    prefix_.push_back(w);
                    int r = search(child, depth + 1);
                    prefix_.pop_back();
                    explored.push_back(w);
                    if (r < depth)
                        return r;
                }
                return depth - 1;
            }

            auto leaf(const Partition & p, int depth) -> int
            {
                Perm order;
                order.reserve(n_);
                for (auto & c : p)
                    order.push_back(c.front());
                auto cert = certificate(order);

                if (! have_first_) {
                    have_first_ = true;
                    first_prefix_ = prefix_;
                    first_order_ = order;
                    first_cert_ = cert;
                    best_order_ = order;
                    best_cert_ = cert;
                    return depth - 1;
                }

                if (cert == first_cert_) {
                    store_automorphism(order, first_order_);
                    int common = 0;
                    while (static_cast<std::size_t>(common) < prefix_.size() &&
                        static_cast<std::size_t>(common) < first_prefix_.size() &&
                        prefix_[common] == first_prefix_[common])
                        ++common;
                    return common;
                }

                if (cert < best_cert_) {
                    best_cert_ = cert;
                    best_order_ = order;
                }
                else if (cert == best_cert_)
                    store_automorphism(order, best_order_);
                return depth - 1;
            }
        };

        auto check_order(std::size_t n, std::size_t limit) -> void
        {
            if (n > limit || n > hard_order_limit)
                throw GuardExceeded("canonical form limited to order " + std::to_string(std::min(limit, hard_order_limit)) +
                    ", got " + std::to_string(n));
        }

        auto layer_of(const Graph & g) -> std::vector<std::uint64_t>
        {
            std::vector<std::uint64_t> rows(g.order(), 0);
            for (Vertex v = 0; v < g.order(); ++v)
                rows[v] = g.row(v).empty() ? 0 : g.row(v)[0];
            return rows;
        }
    }

    auto canonical_labeling(const Graph & g, std::size_t order_limit) -> CanonicalLabeling
    {
        check_order(g.order(), order_limit);
        return Canonicaliser(g.order(), {layer_of(g)}).run();
    }

    auto canonical_labeling(const Trigraph & t, std::size_t order_limit) -> CanonicalLabeling
    {
        check_order(t.order(), order_limit);
        return Canonicaliser(t.order(), {layer_of(t.black()), layer_of(t.gray())}).run();
    }

    auto canonical_form(const Graph & g, std::size_t order_limit) -> std::string
    {
        return canonical_labeling(g, order_limit).form;
    }

    auto canonical_form(const Trigraph & t, std::size_t order_limit) -> std::string
    {
        return canonical_labeling(t, order_limit).form;
    }

    auto canonical_graph(const Graph & g, std::size_t order_limit) -> Graph
    {
        return relabel(g, canonical_labeling(g, order_limit).position);
    }

    auto canonical_trigraph(const Trigraph & t, std::size_t order_limit) -> Trigraph
    {
        return relabel(t, canonical_labeling(t, order_limit).position);
    }

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
    }

    auto are_isomorphic(const Trigraph & a, const Trigraph & b) -> bool
    {
        return a.order() == b.order() && a.black_count() == b.black_count() && a.gray_count() == b.gray_count() &&
            canonical_form(a) == canonical_form(b);
    }
}
