#include <indsat/catalogue.hh>
#include <indsat/constructions.hh>
#include <indsat/errors.hh>
#include <indsat/formats.hh>
#include <indsat/patterns.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace indsat;

TEST_CASE("graph6 reference strings")
{
    // Produced by an independent encoder (networkx) on the same labelings.
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(complete(2)) == "A_");
    CHECK(encode_graph6(cycle(4)) == "Cl");
    CHECK(encode_graph6(complete(5)) == "D~{");
    CHECK(encode_graph6(paw()) == "Cx");
    CHECK(encode_graph6(claw()) == "Cs");
    CHECK(encode_graph6(cartesian_product(complete(3), complete(3))) == "H{S{aSf");
    CHECK(encode_graph6(icosa(5, 2)) == "K|fGALbKgs`x");
}

TEST_CASE("graph6 long headers")
{
    auto p = path(63);
    auto e = encode_graph6(p);
    CHECK(e.substr(0, 4) == "~??~");
    CHECK(e.size() == 4 + (pair_count(63) + 5) / 6);
    CHECK(e == oracle::graph6(p));
    CHECK(decode_graph6(e) == p);

    auto c = cycle(100);
    CHECK(encode_graph6(c) == oracle::graph6(c));
    CHECK(decode_graph6(encode_graph6(c)) == c);
}

TEST_CASE("graph6 agrees with the bit-string encoder")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(rng, i % 70, 0.3);
        auto s = encode_graph6(g);
        CHECK(s == oracle::graph6(g));
        CHECK(decode_graph6(s) == g);
    }
}

TEST_CASE("graph6 decoding tolerance and errors")
{
    CHECK(decode_graph6(">>graph6<<Cl") == cycle(4));
    CHECK(decode_graph6("  Cl\n") == cycle(4));
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    CHECK_THROWS_AS(decode_graph6("C"), ParseError);
    CHECK_THROWS_AS(decode_graph6("Clx"), ParseError);
    CHECK_THROWS_AS(decode_graph6("C "), ParseError);
    // Padding bits beyond the last pair must be zero.
    CHECK_THROWS_AS(decode_graph6("B@"), ParseError);
    CHECK(decode_graph6("Bw") == complete(3));
}

TEST_CASE("trigraph text format")
{
    auto white3 = Trigraph(3);
    CHECK(encode_trigraph(white3) == "n 3\n");

    auto t4 = table_trigraph(TableTarget::Paw, 4);
    CHECK(encode_trigraph(t4) == "n 4\nB 0 2\nB 0 3\nB 1 2\nB 1 3\nG 0 1\nG 2 3\n");

    auto text = "# comment\n\nn 4\nG 2 3\nB 1 3\nB 0 2\nG 0 1\nB 1 2\nB 0 3\n";
    CHECK(decode_trigraph(text) == t4);

    CHECK_THROWS_AS(decode_trigraph("B 0 1\n"), ParseError);
    CHECK_THROWS_AS(decode_trigraph("n 3\nB 1 0\n"), ParseError);
    CHECK_THROWS_AS(decode_trigraph("n 3\nB 0 3\n"), ParseError);
    CHECK_THROWS_AS(decode_trigraph("n 3\nB 0 1\nG 0 1\n"), ParseError);
    CHECK_THROWS_AS(decode_trigraph("n 3\nX 0 1\n"), ParseError);
    CHECK_THROWS_AS(decode_trigraph("n 3\nB 0\n"), ParseError);

    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
        auto t = oracle::random_trigraph(rng, i % 12, 6);
        CHECK(decode_trigraph(encode_trigraph(t)) == t);
    }
}

TEST_CASE("every catalogue object round-trips")
{
    for (auto & entry : catalogue()) {
        CAPTURE(entry.id);
        if (auto g = std::get_if<Graph>(&entry.object))
            CHECK(decode_graph6(encode_graph6(*g)) == *g);
        else {
            auto & t = std::get<Trigraph>(entry.object);
            CHECK(decode_trigraph(encode_trigraph(t)) == t);
        }
    }
}

TEST_CASE("dot output")
{
    CHECK(to_dot(path(3)) == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
    auto t = Trigraph::from_lists(3, {{0, 1}}, {{1, 2}});
    CHECK(to_dot(t) == "graph T {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2 [style=dashed];\n}\n");
}
