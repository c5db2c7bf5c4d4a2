#include <indsat/errors.hh>
#include <indsat/patterns.hh>

#include <charconv>

namespace indsat
{
    namespace
    {
        auto require(bool condition, const std::string & message) -> void
        {
            if (! condition)
                throw InvalidArgument(message);
        }

        auto parse_count(std::string_view text, std::string_view whole) -> std::size_t
        {
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
                throw ParseError("cannot parse pattern '" + std::string(whole) + "'");
            return value;
        }

        auto even_cycle_length(std::size_t length, const char * what) -> void
        {
            require(length >= 6 && length % 2 == 0,
                std::string(what) + " needs an even cycle length of at least 6, got " + std::to_string(length));
        }
    }

    auto paw() -> Graph
    {
        return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    }

    auto claw() -> Graph
    {
        return star(3);
    }

    auto star(std::size_t leaves) -> Graph
    {
        require(leaves >= 1, "star needs at least one leaf");
        GraphBuilder b(leaves + 1);
        for (Vertex v = 1; v <= leaves; ++v)
            b.add_edge(0, v);
        return std::move(b).build();
    }

    auto path(std::size_t order) -> Graph
    {
        require(order >= 1, "path needs at least one vertex");
        GraphBuilder b(order);
        for (Vertex v = 1; v < order; ++v)
            b.add_edge(v - 1, v);
        return std::move(b).build();
    }

    auto cycle(std::size_t order) -> Graph
    {
        require(order >= 3, "cycle needs at least three vertices");
        GraphBuilder b(path(order));
        b.add_edge(0, order - 1);
        return std::move(b).build();
    }

    auto complete(std::size_t order) -> Graph
    {
        require(order >= 1, "complete graph needs at least one vertex");
        GraphBuilder b(order);
        for (Vertex v = 1; v < order; ++v)
            for (Vertex u = 0; u < v; ++u)
                b.add_edge(u, v);
        return std::move(b).build();
    }

    auto empty_graph(std::size_t order) -> Graph
    {
        return Graph(order);
    }

    auto complete_multipartite(std::span<const std::size_t> parts) -> Graph
    {
        require(! parts.empty(), "complete multipartite graph needs at least one part");
        std::vector<std::size_t> part_of;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            require(parts[p] >= 1, "part sizes must be positive");
            part_of.insert(part_of.end(), parts[p], p);
        }
        GraphBuilder b(part_of.size());
        for (Vertex v = 1; v < part_of.size(); ++v)
            for (Vertex u = 0; u < v; ++u)
                if (part_of[u] != part_of[v])
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    auto matching(std::size_t edges) -> Graph
    {
        require(edges >= 1, "matching needs at least one edge");
        GraphBuilder b(2 * edges);
        for (std::size_t i = 0; i < edges; ++i)
            b.add_edge(2 * i, 2 * i + 1);
        return std::move(b).build();
    }

    auto cycle_pendant(std::size_t length) -> Graph
    {
        even_cycle_length(length, "C'");
        GraphBuilder b(length + 1);
        for (auto & e : cycle(length).edges())
            b.add_edge(e.u, e.v);
        b.add_edge(0, length);
        return std::move(b).build();
    }

    auto cycle_hop(std::size_t length) -> Graph
    {
        even_cycle_length(length, "Chat");
        GraphBuilder b(cycle(length));
        b.add_edge(0, 2);
        return std::move(b).build();
    }

    auto pattern(const PatternName & name) -> Graph
    {
        switch (name.kind) {
            case PatternKind::Paw: return paw();
            case PatternKind::Claw: return claw();
            case PatternKind::Star: return star(name.size);
            case PatternKind::Path: return path(name.size);
            case PatternKind::Cycle: return cycle(name.size);
            case PatternKind::Complete: return complete(name.size);
            case PatternKind::CompleteMultipartite: return complete_multipartite(name.parts);
            case PatternKind::Matching: return matching(name.size);
            case PatternKind::CyclePendant: return cycle_pendant(name.size);
            case PatternKind::CycleHop: return cycle_hop(name.size);
        }
        throw InvalidArgument("unknown pattern kind");
    }

    auto parse_pattern(std::string_view text) -> PatternName
    {
        auto rest_after = [&](std::string_view prefix) { return text.substr(prefix.size()); };

        if (text == "paw")
            return {PatternKind::Paw, 4, {}};
        if (text == "claw")
            return {PatternKind::Claw, 3, {}};
        if (text.starts_with("star"))
            return {PatternKind::Star, parse_count(rest_after("star"), text), {}};
        if (text.starts_with("C'"))
            return {PatternKind::CyclePendant, parse_count(rest_after("C'"), text), {}};
        if (text.starts_with("Cpend"))
            return {PatternKind::CyclePendant, parse_count(rest_after("Cpend"), text), {}};
        if (text.starts_with("Chat"))
            return {PatternKind::CycleHop, parse_count(rest_after("Chat"), text), {}};
        if (text.starts_with("Chop"))
            return {PatternKind::CycleHop, parse_count(rest_after("Chop"), text), {}};
        if (text.starts_with("P"))
            return {PatternKind::Path, parse_count(rest_after("P"), text), {}};
        if (text.starts_with("C"))
            return {PatternKind::Cycle, parse_count(rest_after("C"), text), {}};
        if (text.starts_with("K")) {
            auto body = rest_after("K");
            if (body.find(',') == std::string_view::npos)
                return {PatternKind::Complete, parse_count(body, text), {}};
            PatternName name{PatternKind::CompleteMultipartite, 0, {}};
            while (true) {
                auto comma = body.find(',');
                name.parts.push_back(parse_count(body.substr(0, comma), text));
                if (comma == std::string_view::npos)
                    break;
                body.remove_prefix(comma + 1);
            }
            return name;
        }
        if (text.ends_with("K2"))
            return {PatternKind::Matching, parse_count(text.substr(0, text.size() - 2), text), {}};
        throw ParseError("unknown pattern '" + std::string(text) + "'");
    }

    auto to_string(const PatternName & name) -> std::string
    {
        auto n = std::to_string(name.size);
        switch (name.kind) {
            case PatternKind::Paw: return "paw";
            case PatternKind::Claw: return "claw";
            case PatternKind::Star: return "star" + n;
            case PatternKind::Path: return "P" + n;
            case PatternKind::Cycle: return "C" + n;
            case PatternKind::Complete: return "K" + n;
            case PatternKind::CompleteMultipartite: {
                std::string s = "K";
                for (std::size_t i = 0; i < name.parts.size(); ++i)
                    s += (i ? "," : "") + std::to_string(name.parts[i]);
                return s;
            }
            case PatternKind::Matching: return n + "K2";
            case PatternKind::CyclePendant: return "C'" + n;
            case PatternKind::CycleHop: return "Chat" + n;
        }
        return "?";
    }
}
