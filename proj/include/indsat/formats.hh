#ifndef INDSAT_FORMATS_HH
#define INDSAT_FORMATS_HH

#include <indsat/graph.hh>

#include <string>
#include <string_view>

namespace indsat
{
    /// Standard graph6, without trailing newline. Short, 4-byte and 8-byte order headers.
    auto encode_graph6(const Graph & g) -> std::string;

    /// Accepts one graph6 line; surrounding whitespace and an optional ">>graph6<<" header are ignored.
    auto decode_graph6(std::string_view line) -> Graph;

    /// Line 1 "n <order>", then "B u v" lines, then "G u v" lines, each block
    /// sorted lexicographically by (u, v) with u < v. Ends with a newline.
    auto encode_trigraph(const Trigraph & t) -> std::string;

    /// Blank lines and lines starting with '#' are skipped.
    auto decode_trigraph(std::string_view text) -> Trigraph;

    auto to_dot(const Graph & g, std::string_view name = "G") -> std::string;

    /// Gray pairs carry [style=dashed]; white pairs are omitted.
    auto to_dot(const Trigraph & t, std::string_view name = "T") -> std::string;
}

#endif
