#include <indsat/canonical.hh>
#include <indsat/constructions.hh>
#include <indsat/errors.hh>
#include <indsat/formats.hh>
#include <indsat/patterns.hh>
#include <indsat/saturation.hh>
#include <indsat/search.hh>

#include "oracles.hh"

#include <doctest.h>

#include <set>

using namespace indsat;

TEST_CASE("enumerate_graphs class counts")
{
    std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 0; n <= 7; ++n)
        CHECK(enumerate_graphs(n).size() == expected[n]);

    auto k3 = enumerate_graphs(3, min_degree_filter(2));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0] == complete(3));

    CHECK(enumerate_graphs(4, {}, false).size() == 64);
    CHECK_THROWS_AS(enumerate_graphs(11), GuardExceeded);
    CHECK_THROWS_AS(enumerate_graphs(8, {}, false), GuardExceeded);
}

TEST_CASE("enumerated classes are pairwise non-isomorphic and complete")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        auto classes = enumerate_graphs(n);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j)
                CHECK(! oracle::isomorphic(classes[i], classes[j]));
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pair_count(n)); ++m) {
            auto g = Graph::from_pair_mask(n, m);
            bool hit = false;
            for (auto & c : classes)
                hit = hit || oracle::isomorphic(g, c);
            CHECK(hit);
        }
    }
}

TEST_CASE("indsat search reproduces the small tables")
{
    std::vector<std::size_t> paw_values{2, 1, 1};
    for (std::size_t n = 4; n <= 6; ++n) {
        auto r = search_indsat(n, paw(), 3);
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(r.value == paw_values[n - 4]);
        REQUIRE(r.trigraph_certificate);
        CHECK(r.trigraph_certificate->gray_count() == *r.value);
        CHECK(verify_trigraph_saturated(*r.trigraph_certificate, paw()).saturated());
        CHECK(oracle::saturated(*r.trigraph_certificate, paw()));
    }
    auto r4 = search_indsat(4, paw(), 3);
    CHECK(are_isomorphic(*r4.trigraph_certificate, table_trigraph(TableTarget::Paw, 4)));

    for (std::size_t n = 4; n <= 5; ++n) {
        auto r = search_indsat(n, claw(), 3);
        CHECK(r.value == std::optional<std::size_t>{3});
        CHECK(verify_trigraph_saturated(*r.trigraph_certificate, claw()).saturated());
    }

    CHECK(search_indsat(5, paw(), 2).value == std::optional<std::size_t>{1});
}

TEST_CASE("indsat search budgets")
{
    auto r = search_indsat(4, paw(), 1);
    CHECK(r.status == SearchStatus::ExceedsBudget);
    CHECK(! r.value);
    CHECK(r.budget == 1);
    CHECK(r.target == encode_graph6(paw()));

    // A budget covering every pair makes "none" definitive; claw on 3 vertices
    // is impossible only in the literal sense, so an all-gray trigraph is found.
    auto tiny = search_indsat(3, claw(), 3);
    CHECK(tiny.status == SearchStatus::Found);
    CHECK(tiny.value == std::optional<std::size_t>{3});

    CHECK_THROWS_AS(search_indsat(8, paw(), 3), GuardExceeded);
    CHECK_THROWS_AS(search_indsat(5, paw(), 5), GuardExceeded);
}

TEST_CASE("indsat search is independent of the job count")
{
    for (auto & h : {paw(), claw(), path(4), cycle(4)})
        for (std::size_t n = 4; n <= 5; ++n) {
            auto a = search_indsat(n, h, 3, Exec{1});
            auto b = search_indsat(n, h, 3, Exec{3});
            CHECK(a.status == b.status);
            CHECK(a.value == b.value);
            if (a.trigraph_certificate && b.trigraph_certificate) {
                CHECK(canonical_form(*a.trigraph_certificate) == canonical_form(*b.trigraph_certificate));
                CHECK(*a.trigraph_certificate == *b.trigraph_certificate);
            }
        }
}

TEST_CASE("indsat search agrees with an exhaustive oracle scan")
{
    // Every labeled trigraph on 4 vertices with at most 2 gray pairs.
    for (auto & h : {paw(), claw(), path(4), cycle(4), matching(2), path(3)}) {
        std::optional<std::size_t> best;
        for (std::size_t g = 0; g <= 2 && ! best; ++g) {
            for (std::uint64_t code = 0; code < 729 && ! best; ++code) {
                TrigraphBuilder b(4);
                std::size_t grays = 0;
                auto c = code;
                for (std::size_t i = 0; i < 6; ++i, c /= 3) {
                    auto p = pair_at(i);
                    auto colour = static_cast<EdgeColor>(c % 3);
                    grays += colour == EdgeColor::Gray;
                    b.set_color(p.u, p.v, colour);
                }
                if (grays != g)
                    continue;
                if (oracle::saturated(std::move(b).build(), h))
                    best = g;
            }
        }
        auto r = search_indsat(4, h, 2);
        CHECK(r.value == best);
        CHECK((r.status == SearchStatus::Found) == best.has_value());
    }
}

TEST_CASE("sis search")
{
    auto r = search_sis(7, paw(), 21);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.value == std::optional<std::size_t>{15});
    REQUIRE(r.graph_certificate);
    CHECK(are_isomorphic(*r.graph_certificate, complete_multipartite(std::vector<std::size_t>{1, 3, 3})));
    CHECK(verify_graph_saturated(*r.graph_certificate, paw()).saturated());

    auto none = search_sis(4, paw(), 6);
    CHECK(none.status == SearchStatus::NoneExists);
    auto budget = search_sis(7, paw(), 14);
    CHECK(budget.status == SearchStatus::ExceedsBudget);

    CHECK_THROWS_AS(search_sis(9, paw(), 10), GuardExceeded);

    SearchOptions off;
    off.prune = false;
    CHECK(search_sis(8, claw(), 28).status == SearchStatus::NoneExists);
    CHECK(search_sis(8, claw(), 28, {}, off).status == SearchStatus::NoneExists);
}

TEST_CASE("claw pruning does not change results")
{
    for (std::size_t n = 2; n <= 6; ++n) {
        SearchOptions on, off;
        off.prune = false;
        auto a = search_sis(n, claw(), pair_count(n), {}, on);
        auto b = search_sis(n, claw(), pair_count(n), {}, off);
        CHECK(a.status == b.status);
        CHECK(a.value == b.value);
    }
    // Every saturated graph on at most 7 vertices passes the filter.
    auto filter = claw_degree_filter();
    for (std::size_t n = 1; n <= 7; ++n)
        for (auto & g : enumerate_graphs(n))
            if (verify_graph_saturated(g, claw()).saturated())
                CHECK(filter(g));
}

TEST_CASE("sis search is independent of the job count")
{
    for (auto & h : {paw(), claw(), cycle(4), matching(2)})
        for (std::size_t n = 4; n <= 6; ++n) {
            auto a = search_sis(n, h, pair_count(n), Exec{1});
            auto b = search_sis(n, h, pair_count(n), Exec{2});
            CHECK(a.status == b.status);
            CHECK(a.value == b.value);
            CHECK(a.graph_certificate == b.graph_certificate);
        }
}

TEST_CASE("state space sizes")
{
    CHECK(sis_state_space(4) == 64.0);
    // Sum over g of C(6, g) 2^(6 - g) for g = 0..1.
    CHECK(indsat_state_space(4, 1) == 64.0 + 6 * 32.0);
}
