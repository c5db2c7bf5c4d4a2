#include <indsat/errors.hh>
#include <indsat/formats.hh>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace indsat
{
    namespace
    {
        constexpr std::size_t short_limit = 62;
        constexpr std::size_t medium_limit = 258047;
        constexpr std::uint64_t long_limit = 68719476735ULL;

        auto trim(std::string_view s) -> std::string_view
        {
            while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
                s.remove_prefix(1);
            while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
                s.remove_suffix(1);
            return s;
        }

        auto graph6_value(char c) -> unsigned
        {
            auto u = static_cast<unsigned char>(c);
            if (u < 63 || u > 126)
                throw ParseError("graph6 character out of range: code " + std::to_string(u));
            return u - 63;
        }

        auto parse_number(std::string_view token, std::string_view what) -> std::size_t
        {
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
                throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" +
                    std::string(token) + "'");
            return value;
        }

        auto split_words(std::string_view line) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> words;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                    ++i;
                auto start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t')
                    ++i;
                if (i > start)
                    words.push_back(line.substr(start, i - start));
            }
            return words;
        }
    }

    auto encode_graph6(const Graph & g) -> std::string
    {
        std::string out;
        auto n = static_cast<std::uint64_t>(g.order());
        if (n <= short_limit)
            out.push_back(static_cast<char>(63 + n));
        else if (n <= medium_limit) {
            out.push_back('~');
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(63 + ((n >> shift) & 63u)));
        }
        else if (n <= long_limit) {
            out += "~~";
            for (int shift = 30; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(63 + ((n >> shift) & 63u)));
        }
        else
            throw InvalidArgument("order too large for graph6");

        unsigned chunk = 0;
        int filled = 0;
        for (Vertex v = 1; v < g.order(); ++v)
            for (Vertex u = 0; u < v; ++u) {
                chunk = (chunk << 1) | (g.adjacent(u, v) ? 1u : 0u);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(63 + chunk));
                    chunk = 0;
                    filled = 0;
                }
            }
        if (filled != 0)
            out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
        return out;
    }

    auto decode_graph6(std::string_view line) -> Graph
    {
        line = trim(line);
        if (line.starts_with(">>graph6<<"))
            line.remove_prefix(10);
        if (line.empty())
            throw ParseError("empty graph6 string");

        std::size_t pos = 0;
        std::uint64_t n = 0;
        if (line[0] != '~') {
            n = graph6_value(line[0]);
            pos = 1;
        }
        else if (line.size() >= 2 && line[1] == '~') {
            if (line.size() < 8)
                throw ParseError("truncated graph6 order header");
            for (std::size_t i = 2; i < 8; ++i)
                n = (n << 6) | graph6_value(line[i]);
            pos = 8;
        }
        else {
            if (line.size() < 4)
                throw ParseError("truncated graph6 order header");
            for (std::size_t i = 1; i < 4; ++i)
                n = (n << 6) | graph6_value(line[i]);
            pos = 4;
        }

        auto pairs = static_cast<std::uint64_t>(pair_count(static_cast<std::size_t>(n)));
        auto expected = (pairs + 5) / 6;
        if (line.size() - pos != expected)
            throw ParseError("graph6 length mismatch: order " + std::to_string(n) + " needs " +
                std::to_string(expected) + " data characters, got " + std::to_string(line.size() - pos));

        GraphBuilder b(static_cast<std::size_t>(n));
        std::uint64_t bit = 0;
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u, ++bit) {
                auto value = graph6_value(line[pos + bit / 6]);
                if ((value >> (5 - bit % 6)) & 1u)
                    b.add_edge(u, v);
            }
        for (auto i = pos; i < line.size(); ++i)
            graph6_value(line[i]);
        if (pairs % 6 != 0) {
            auto padding = graph6_value(line.back()) & ((1u << (6 - pairs % 6)) - 1);
            if (padding != 0)
                throw ParseError("graph6 padding bits are not zero");
        }
        return std::move(b).build();
    }

    auto encode_trigraph(const Trigraph & t) -> std::string
    {
        std::ostringstream out;
        out << "n " << t.order() << '\n';
        auto emit = [&](const Graph & layer, char tag) {
            for (Vertex u = 0; u < t.order(); ++u)
                for (Vertex v = u + 1; v < t.order(); ++v)
                    if (layer.adjacent(u, v))
                        out << tag << ' ' << u << ' ' << v << '\n';
        };
        emit(t.black(), 'B');
        emit(t.gray(), 'G');
        return out.str();
    }

    auto decode_trigraph(std::string_view text) -> Trigraph
    {
        bool have_order = false;
        std::size_t order = 0;
        std::vector<VertexPair> black, gray;
        std::size_t line_number = 0;

        while (! text.empty()) {
            auto end = text.find('\n');
            auto line = trim(text.substr(0, end));
            text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
            ++line_number;
            if (line.empty() || line.front() == '#')
                continue;

            auto words = split_words(line);
            auto where = " on line " + std::to_string(line_number);
            if (! have_order) {
                if (words.size() != 2 || words[0] != "n")
                    throw ParseError("expected 'n <order>'" + where);
                order = parse_number(words[1], "order");
                have_order = true;
                continue;
            }
            if (words.size() != 3 || (words[0] != "B" && words[0] != "G"))
                throw ParseError("expected 'B u v' or 'G u v'" + where);
            auto u = parse_number(words[1], "vertex");
            auto v = parse_number(words[2], "vertex");
            if (u >= v)
                throw ParseError("pair must have u < v" + where);
            if (v >= order)
                throw ParseError("vertex " + std::to_string(v) + " out of range" + where);
            (words[0] == "B" ? black : gray).push_back({u, v});
        }
        if (! have_order)
            throw ParseError("missing 'n <order>' line");

        try {
            return Trigraph::from_lists(order, black, gray);
        }
        catch (const InvalidArgument & e) {
            throw ParseError(e.what());
        }
    }

    auto to_dot(const Graph & g, std::string_view name) -> std::string
    {
        std::ostringstream out;
        out << "graph " << name << " {\n";
        for (Vertex v = 0; v < g.order(); ++v)
            out << "  " << v << ";\n";
        for (auto & e : g.edges())
            out << "  " << e.u << " -- " << e.v << ";\n";
        out << "}\n";
        return out.str();
    }

    auto to_dot(const Trigraph & t, std::string_view name) -> std::string
    {
        std::ostringstream out;
        out << "graph " << name << " {\n";
        for (Vertex v = 0; v < t.order(); ++v)
            out << "  " << v << ";\n";
        for (Vertex v = 1; v < t.order(); ++v)
            for (Vertex u = 0; u < v; ++u)
                switch (t.color(u, v)) {
                    case EdgeColor::Black: out << "  " << u << " -- " << v << ";\n"; break;
                    case EdgeColor::Gray: out << "  " << u << " -- " << v << " [style=dashed];\n"; break;
                    case EdgeColor::White: break;
                }
        out << "}\n";
        return out.str();
    }
}
