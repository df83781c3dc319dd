#include <algorithm>
#include <cctype>
#include <sstream>

#include "swk/error.hpp"
#include "swk/graph.hpp"

namespace swk {

Graph interval_graph()
{
    GraphBuilder b("I");
    b.add_vertex("0");
    b.add_vertex("1");
    b.add_edge("e", 0, 1);
    return std::move(b).build();
}

Graph star_graph(std::size_t n)
{
    GraphBuilder b("S" + std::to_string(n));
    b.add_vertex("v0");
    for (std::size_t i = 1; i <= n; ++i)
        b.add_vertex("v" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i)
        b.add_edge("e" + std::to_string(i), 0, i);
    return std::move(b).build();
}

Graph cycle_graph(std::size_t n)
{
    if (n == 0)
        throw PreconditionError("cycle graph needs at least one vertex");
    GraphBuilder b("C" + std::to_string(n));
    for (std::size_t i = 1; i <= n; ++i)
        b.add_vertex("v" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        b.add_edge("e" + std::to_string(i + 1), i, (i + 1) % n);
    return std::move(b).build();
}

Graph theta_graph(std::size_t n)
{
    GraphBuilder b("Theta" + std::to_string(n));
    b.add_vertex("v1");
    b.add_vertex("v2");
    for (std::size_t i = 1; i <= n; ++i)
        b.add_edge("e" + std::to_string(i), 0, 1);
    return std::move(b).build();
}

Graph lollipop_graph(std::size_t n)
{
    if (n == 0)
        throw PreconditionError("lollipop graph needs a cycle of length at least one");
    GraphBuilder b("L" + std::to_string(n));
    for (std::size_t i = 1; i <= n; ++i)
        b.add_vertex("v" + std::to_string(i));
    b.add_vertex("w");
    b.add_edge("e0", 0, n);
    for (std::size_t i = 0; i < n; ++i)
        b.add_edge("e" + std::to_string(i + 1), i, (i + 1) % n);
    return std::move(b).build();
}

Graph complete_graph(std::size_t n)
{
    GraphBuilder b("K" + std::to_string(n));
    for (std::size_t i = 1; i <= n; ++i)
        b.add_vertex(std::to_string(i));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = a + 1; c < n; ++c)
            b.add_edge("e" + std::to_string(a + 1) + std::to_string(c + 1), a, c);
    return std::move(b).build();
}

Graph complete_bipartite_graph(std::size_t m, std::size_t n)
{
    GraphBuilder b("K" + std::to_string(m) + "," + std::to_string(n));
    for (std::size_t i = 1; i <= m; ++i)
        b.add_vertex("a" + std::to_string(i));
    for (std::size_t j = 1; j <= n; ++j)
        b.add_vertex("b" + std::to_string(j));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b.add_edge("a" + std::to_string(i + 1) + "_b" + std::to_string(j + 1), i, m + j);
    return std::move(b).build();
}

Graph net_graph()
{
    Graph k4 = complete_graph(4);
    Explosion ex = vertex_explosion(k4, k4.vertex("4"));
    GraphBuilder b("net");
    for (const auto& v : ex.graph.vertex_ids())
        b.add_vertex(v);
    for (const auto& e : ex.graph.edges())
        b.add_edge(e.id, e.ends[0], e.ends[1]);
    return std::move(b).build();
}

Graph standard_graph(const StandardGraphSpec& spec)
{
    switch (spec.family) {
    case GraphFamily::Interval: return interval_graph();
    case GraphFamily::Star: return star_graph(spec.n);
    case GraphFamily::Cycle: return cycle_graph(spec.n);
    case GraphFamily::Theta: return theta_graph(spec.n);
    case GraphFamily::Lollipop: return lollipop_graph(spec.n);
    case GraphFamily::Complete: return complete_graph(spec.n);
    case GraphFamily::CompleteBipartite: return complete_bipartite_graph(spec.m, spec.n);
    case GraphFamily::Net: return net_graph();
    }
    throw PreconditionError("unknown graph family");
}

namespace {

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::size_t parse_count(const std::string& token, std::string_view description)
{
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw PreconditionError("bad size '" + token + "' in graph description '" + std::string(description) + "'");
    return std::stoul(token);
}

// Compact names such as "S3", "C4", "K4", "K33", "K3,3", "Theta3", "L1".
std::optional<StandardGraphSpec> parse_compact(const std::string& s)
{
    auto tail_number = [&](std::size_t prefix) -> std::optional<std::size_t> {
        if (s.size() <= prefix)
            return std::nullopt;
        auto rest = s.substr(prefix);
        if (!std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); }))
            return std::nullopt;
        return std::stoul(rest);
    };
    if (s == "i")
        return StandardGraphSpec{GraphFamily::Interval};
    if (s.rfind("theta", 0) == 0)
        if (auto n = tail_number(5))
            return StandardGraphSpec{GraphFamily::Theta, *n};
    if (s[0] == 's')
        if (auto n = tail_number(1))
            return StandardGraphSpec{GraphFamily::Star, *n};
    if (s[0] == 'c')
        if (auto n = tail_number(1))
            return StandardGraphSpec{GraphFamily::Cycle, *n};
    if (s[0] == 'l')
        if (auto n = tail_number(1))
            return StandardGraphSpec{GraphFamily::Lollipop, *n};
    if (s[0] == 'k') {
        auto comma = s.find(',');
        if (comma != std::string::npos) {
            auto a = s.substr(1, comma - 1);
            auto b = s.substr(comma + 1);
            auto digits = [](const std::string& t) {
                return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
            };
            if (digits(a) && digits(b))
                return StandardGraphSpec{GraphFamily::CompleteBipartite, std::stoul(b), std::stoul(a)};
            return std::nullopt;
        }
        if (s.size() == 3 && std::isdigit(static_cast<unsigned char>(s[1])) &&
            std::isdigit(static_cast<unsigned char>(s[2])))
            return StandardGraphSpec{GraphFamily::CompleteBipartite, std::size_t(s[2] - '0'), std::size_t(s[1] - '0')};
        if (auto n = tail_number(1))
            return StandardGraphSpec{GraphFamily::Complete, *n};
    }
    return std::nullopt;
}

} // namespace

Graph standard_graph(std::string_view description)
{
    std::istringstream in{std::string(description)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;)
        tokens.push_back(lower(t));
    if (tokens.empty())
        throw PreconditionError("empty graph description");

    const std::string& family = tokens[0];
    auto need = [&](std::size_t count) {
        if (tokens.size() != count + 1)
            throw PreconditionError("graph family '" + family + "' takes " + std::to_string(count) + " size argument(s)");
    };

    if (family == "interval") {
        need(0);
        return interval_graph();
    }
    if (family == "net") {
        need(0);
        return net_graph();
    }
    if (family == "star") {
        need(1);
        return star_graph(parse_count(tokens[1], description));
    }
    if (family == "cycle") {
        need(1);
        return cycle_graph(parse_count(tokens[1], description));
    }
    if (family == "theta") {
        need(1);
        return theta_graph(parse_count(tokens[1], description));
    }
    if (family == "lollipop") {
        need(1);
        return lollipop_graph(parse_count(tokens[1], description));
    }
    if (family == "complete") {
        need(1);
        return complete_graph(parse_count(tokens[1], description));
    }
    if (family == "complete_bipartite" || family == "bipartite") {
        need(2);
        return complete_bipartite_graph(parse_count(tokens[1], description), parse_count(tokens[2], description));
    }
    if (tokens.size() == 1)
        if (auto spec = parse_compact(family))
            return standard_graph(*spec);
    throw PreconditionError("unknown graph description '" + std::string(description) + "'");
}

} // namespace swk
