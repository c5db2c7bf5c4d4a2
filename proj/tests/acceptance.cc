// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <indsat/canonical.hh>
#include <indsat/constructions.hh>
#include <indsat/exec.hh>
#include <indsat/induced.hh>
#include <indsat/patterns.hh>
#include <indsat/saturation.hh>
#include <indsat/search.hh>

#include "oracles.hh"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace indsat;

namespace
{
    struct Check
    {
        std::ostringstream notes;
        bool ok = true;

        auto expect(bool cond, const std::string & what) -> void
        {
            if (! cond) {
                ok = false;
                notes << " [" << what << "]";
            }
        }
    };

    auto criterion(const std::string & id, const std::string & title, const std::function<void(Check &)> & body) -> bool
    {
        auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            body(c);
        }
        catch (const std::exception & e) {
            c.ok = false;
            c.notes << " [exception: " << e.what() << "]";
        }
        std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        std::cout << (c.ok ? "PASS " : "FAIL ") << id << ' ' << title << " (" << std::fixed << std::setprecision(1)
                  << took.count() << "s)" << c.notes.str() << std::endl;
        return c.ok;
    }

    auto jobs() -> Exec
    {
        return Exec{hardware_jobs()};
    }

    auto ac1(Check & c) -> void
    {
        std::vector<std::size_t> expected{2, 1, 1};
        for (std::size_t n = 4; n <= 6; ++n) {
            auto r = search_indsat(n, paw(), 3, jobs());
            auto tag = "n=" + std::to_string(n);
            c.expect(r.value == expected[n - 4], tag + " value");
            c.expect(r.trigraph_certificate && verify_trigraph_saturated(*r.trigraph_certificate, paw()).saturated(),
                tag + " certificate");
        }
    }

    auto ac2(Check & c) -> void
    {
        for (std::size_t n = 4; n <= 6; ++n) {
            auto r = search_indsat(n, claw(), 3, jobs());
            auto tag = "n=" + std::to_string(n);
            c.expect(r.value == std::size_t{3}, tag + " value");
            c.expect(r.trigraph_certificate && verify_trigraph_saturated(*r.trigraph_certificate, claw()).saturated(),
                tag + " certificate");
        }
        // Lower-bound search at n = 7: no saturated trigraph with fewer than 2 gray pairs.
        auto r7 = search_indsat(7, claw(), 2, jobs());
        c.expect(r7.value == std::size_t{2}, "n=7 search value");
        c.expect(r7.trigraph_certificate && verify_trigraph_saturated(*r7.trigraph_certificate, claw()).saturated(),
            "n=7 certificate");
        for (std::size_t n = 7; n <= 8; ++n) {
            auto t = table_trigraph(TableTarget::Claw, n);
            c.expect(t.gray_count() == 2, "shipped n=" + std::to_string(n) + " gray count");
            c.expect(verify_trigraph_saturated(t, claw()).saturated(), "shipped n=" + std::to_string(n));
        }
    }

    auto ac3(Check & c) -> void
    {
        auto h = paw();
        std::size_t saturated = 0, min_edges = SIZE_MAX, mismatches = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << 21); ++m) {
            auto g = Graph::from_pair_mask(7, m);
            bool sat = verify_graph_saturated(g, h).saturated();
            if (sat != recognize_paw_shape(g))
                ++mismatches;
            if (sat) {
                ++saturated;
                min_edges = std::min(min_edges, g.edge_count());
            }
        }
        c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
        c.expect(min_edges == 15, "minimum edges " + std::to_string(min_edges));
        c.notes << " saturated=" << saturated;
    }

    auto ac4(Check & c) -> void
    {
        for (std::size_t n = 7; n <= 60; ++n) {
            auto r = n % 7;
            std::size_t formula = r == 0 ? 15 * n / 7 : 15 * (n / 7) + 4 * (r - 1);
            auto g = minimal_paw(n);
            c.expect(g.order() == n && g.edge_count() == formula, "edges at n=" + std::to_string(n));
            c.expect(verify_graph_saturated(g, paw(), jobs()).saturated(), "verifier at n=" + std::to_string(n));
        }
        auto e = [](std::size_t n) { return minimal_paw(n).edge_count(); };
        c.expect(e(14) == 30 && e(16) == 34 && e(13) == 35, "non-monotone triple");
        c.expect(e(14) < e(16) && e(16) < e(13), "ordering");
    }

    auto ac5(Check & c) -> void
    {
        std::vector<std::pair<ClawGraph, std::size_t>> named{
            {ClawGraph::H, 18}, {ClawGraph::J, 24}, {ClawGraph::K, 24}, {ClawGraph::L, 30}};
        const char * labels = "HJKL";
        for (auto & [which, edges] : named) {
            auto g = claw_catalogue(which);
            std::string tag(1, labels[static_cast<int>(which)]);
            c.expect(g.edge_count() == edges, tag + " edges");
            c.expect(verify_graph_saturated(g, claw()).saturated(), tag + " verifier");
        }
        for (std::size_t m = 5; m <= 8; ++m) {
            auto g = generalized_L(m);
            c.expect(g.edge_count() == 6 * m, "genL edges m=" + std::to_string(m));
            c.expect(verify_graph_saturated(g, claw()).saturated(), "genL verifier m=" + std::to_string(m));
        }
        c.expect(verify_graph_saturated(star_construction(10, 2), claw()).saturated(), "star_construction(10,2)");
        auto iso = disjoint_union({cartesian_product(complete(3), complete(3)), Graph(1)});
        c.expect(iso.edge_count() == 2 * 10 - 2, "isolate variant edges");
        c.expect(verify_graph_saturated(iso, claw()).saturated(), "isolate variant verifier");
    }

    auto ac6(Check & c) -> void
    {
        std::vector<std::pair<std::string, Graph>> graphs{{"H", claw_catalogue(ClawGraph::H)},
            {"J", claw_catalogue(ClawGraph::J)}, {"K", claw_catalogue(ClawGraph::K)},
            {"L", claw_catalogue(ClawGraph::L)}};
        for (std::size_t m = 5; m <= 8; ++m)
            graphs.emplace_back("genL" + std::to_string(m), generalized_L(m));

        std::size_t checked = 0;
        for (auto & [name, g] : graphs) {
            if (g.min_degree() != 4 || g.max_degree() != 4)
                continue;
            if (! verify_graph_saturated(g, claw()).saturated()) {
                c.expect(false, name + " not saturated");
                continue;
            }
            ++checked;
            auto p = classify_neighborhoods(g);
            auto t = triangle_census(g);
            c.expect(p.other.empty(), name + " other");
            bool one_or_two = std::all_of(t.per_edge.begin(), t.per_edge.end(), [](auto x) { return x == 1 || x == 2; });
            c.expect(one_or_two, name + " per-edge triangles");
            c.expect(t.edges_in_two == p.blue.size(), name + " edges_in_two");
            c.expect(3 * t.triangles == 2 * g.order() + p.blue.size(), name + " 3t = 2n + b");
            c.expect(g.order() % 3 == 0, name + " n mod 3");
            // The blue vertices induce disjoint triangles.
            auto blue = induced_subgraph(g, p.blue);
            bool triangles = blue.order() % 3 == 0;
            for (Vertex v = 0; v < blue.order() && triangles; ++v)
                triangles = blue.degree(v) == 2 && blue.adjacent(blue.neighbours(v)[0], blue.neighbours(v)[1]);
            c.expect(triangles, name + " blue triangles");
        }
        c.notes << " four_regular=" << checked;
        c.expect(checked == 7, "expected 7 four-regular graphs");
    }

    auto ac7(Check & c) -> void
    {
        for (std::size_t j : {5, 6, 7})
            for (std::size_t k : {2, 3}) {
                auto g = icosa(j, k);
                auto tag = "I" + std::to_string(j) + "^" + std::to_string(k);
                bool sat = verify_graph_saturated(g, cycle(4), jobs()).saturated();
                c.expect(sat, tag + " C4");
                if (sat)
                    c.expect(g.min_degree() >= 5, tag + " min degree");
                c.expect(verify_graph_saturated(complement(g), matching(2), jobs()).saturated(), tag + " dual 2K2");
            }

        std::vector<std::pair<std::size_t, std::size_t>> cases{{12, 2}, {13, 2}, {24, 3}};
        for (auto & [n, k] : cases) {
            auto g = matching_construction(n, k);
            auto tag = "matching(" + std::to_string(n) + "," + std::to_string(k) + ")";
            c.expect(g.edge_count() == 36 * (k - 1), tag + " edges");
            c.expect(verify_graph_saturated(g, matching(k), jobs()).saturated(), tag + " verifier");
        }

        // Every size vector with sum <= 16, i.e. at most four extra vertices.
        auto base = complement(icosa(5, 2));
        std::size_t blowups = 0;
        std::vector<std::size_t> sizes(12, 1);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t extra) {
            auto g = blowup(base, sizes, BlowupMode::Independent);
            ++blowups;
            if (! verify_graph_saturated(g, matching(2)).saturated())
                c.expect(false, "blowup failed");
            if (extra == 0)
                return;
            for (std::size_t i = from; i < 12; ++i) {
                ++sizes[i];
                rec(i, extra - 1);
                --sizes[i];
            }
        };
        rec(0, 4);
        c.notes << " blowups=" << blowups;
    }

    auto ac8(Check & c) -> void
    {
        for (std::size_t n : {18, 20}) {
            auto g = cycles_construction(n, 3);
            for (auto & [name, h] : std::vector<std::pair<std::string, Graph>>{
                     {"C5", cycle(5)}, {"C'6", cycle_pendant(6)}, {"Chat6", cycle_hop(6)}})
                c.expect(verify_graph_saturated(g, h, jobs()).saturated(), "n=" + std::to_string(n) + " " + name);
        }
        auto g = cycles_construction(27, 4);
        c.expect(g.order() == 27, "order 27");
        for (auto & [name, h] : std::vector<std::pair<std::string, Graph>>{
                 {"C7", cycle(7)}, {"C'8", cycle_pendant(8)}, {"Chat8", cycle_hop(8)}})
            c.expect(verify_graph_saturated(g, h, jobs()).saturated(), "n=27 " + name);
    }

    auto ac9(Check & c) -> void
    {
        auto t = c5_trigraph10();
        c.expect(t.gray_count() == 1, "gray count");
        c.expect(verify_trigraph_saturated(t, cycle(5)).saturated(), "verifier");
    }

    auto ac10(Check & c) -> void
    {
        std::vector<Graph> thr{matching(2), path(4), cycle(4)};
        std::size_t strings = 0;
        for (std::size_t len = 1; len <= 7; ++len)
            for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
                std::string s;
                for (std::size_t i = 0; i < len; ++i)
                    s.push_back((bits >> i) & 1u ? '+' : '-');
                ++strings;
                auto g = threshold_from_string(s);
                if (g.edge_count() == 0)
                    continue;
                auto e = threshold_edge_removal_witness(g);
                auto reduced = flip_edge(g, e.u, e.v);
                c.expect(g.adjacent(e.u, e.v), "witness not an edge for " + s);
                c.expect(is_threshold(reduced) && oracle::threshold_by_peeling(reduced), "witness fails for " + s);
                c.expect(! verify_family_saturated(g, thr).saturated(), "family saturated for " + s);
            }

        std::vector<Graph> split{matching(2), cycle(4), cycle(5)};
        std::size_t graphs = 0;
        for (std::size_t n = 1; n <= 6; ++n)
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << pair_count(n)); ++m) {
                auto g = Graph::from_pair_mask(n, m);
                ++graphs;
                bool forbidden_free = std::none_of(split.begin(), split.end(),
                    [&](auto & h) { return oracle::contains_induced(g, h); });
                bool partition = oracle::split_by_partition(g);
                c.expect(forbidden_free == partition, "oracles disagree");
                if (is_split(g) != partition) {
                    c.expect(false, "is_split mismatch");
                    return;
                }
            }
        c.notes << " sign_strings=" << strings << " graphs=" << graphs;
    }

    auto ac11(Check & c) -> void
    {
        std::vector<std::pair<std::string, Graph>> pats{{"paw", paw()}, {"claw", claw()}, {"C4", cycle(4)},
            {"C5", cycle(5)}, {"P4", path(4)}, {"2K2", matching(2)}};
        std::size_t pairs = 0;
        for (std::size_t n = 0; n <= 7; ++n)
            for (auto & g : enumerate_graphs(n))
                for (auto & [name, h] : pats) {
                    ++pairs;
                    auto w = find_induced(g, h);
                    if (w.has_value() != (count_induced(g, h) > 0))
                        c.expect(false, name + " disagreement");
                    if (w && ! is_induced_embedding(g, h, *w))
                        c.expect(false, name + " bad witness");
                }
        c.notes << " pairs=" << pairs;
    }
}

auto main() -> int
{
    bool all = true;
    all &= criterion("AC1", "indsat(n, paw) table", ac1);
    all &= criterion("AC2", "indsat(n, claw) table", ac2);
    all &= criterion("AC3", "paw characterization on 7 vertices", ac3);
    all &= criterion("AC4", "sis(paw) formula", ac4);
    all &= criterion("AC5", "claw catalogue", ac5);
    all &= criterion("AC6", "4-regular claw structure", ac6);
    all &= criterion("AC7", "C4 and matching suite", ac7);
    all &= criterion("AC8", "cycles suite", ac8);
    all &= criterion("AC9", "C5 trigraph", ac9);
    all &= criterion("AC10", "threshold and split families", ac10);
    all &= criterion("AC11", "matcher against subset counting", ac11);
    return all ? 0 : 1;
}
