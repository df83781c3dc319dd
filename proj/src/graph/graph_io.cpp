#include "swk/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "swk/error.hpp"

namespace swk {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#')
            break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

} // namespace

Graph parse_graph(std::istream& in)
{
    std::string name = "graph";
    bool named = false;
    std::size_t name_line = 0;
    // Vertices and edges are buffered so that `graph` may come anywhere.
    struct EdgeDecl {
        Token id, tail, head;
        std::size_t line;
    };
    std::vector<std::pair<Token, std::size_t>> vertices;
    std::vector<EdgeDecl> edges;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const auto& kw = tokens[0];
        auto arity = [&](std::size_t n) {
            if (tokens.size() < n + 1) {
                std::size_t col = tokens.back().column + tokens.back().text.size();
                throw ParseError("'" + kw.text + "' expects " + std::to_string(n) + " argument(s)", lineno, col);
            }
            if (tokens.size() > n + 1)
                throw ParseError("unexpected token '" + tokens[n + 1].text + "'", lineno, tokens[n + 1].column);
        };
        if (kw.text == "graph") {
            arity(1);
            if (named)
                throw ParseError("duplicate 'graph' declaration (first on line " + std::to_string(name_line) + ")",
                                 lineno, kw.column);
            name = tokens[1].text;
            named = true;
            name_line = lineno;
        } else if (kw.text == "vertex") {
            arity(1);
            vertices.emplace_back(tokens[1], lineno);
        } else if (kw.text == "edge") {
            arity(3);
            edges.push_back({tokens[1], tokens[2], tokens[3], lineno});
        } else {
            throw ParseError("unknown declaration '" + kw.text + "'", lineno, kw.column);
        }
    }

    GraphBuilder b(name);
    for (const auto& [tok, ln] : vertices) {
        if (b.has_vertex(tok.text))
            throw ParseError("duplicate vertex '" + tok.text + "'", ln, tok.column);
        b.add_vertex(tok.text);
    }
    for (const auto& d : edges) {
        if (b.has_edge(d.id.text))
            throw ParseError("duplicate edge '" + d.id.text + "'", d.line, d.id.column);
        for (const Token* t : {&d.tail, &d.head})
            if (!b.has_vertex(t->text))
                throw ParseError("edge '" + d.id.text + "' references unknown vertex '" + t->text + "'", d.line,
                                 t->column);
        b.add_edge(d.id.text, d.tail.text, d.head.text);
    }
    return std::move(b).build();
}

Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

Graph parse_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open graph file '" + path.string() + "'");
    return parse_graph(in);
}

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    out << "graph " << g.name() << '\n';
    for (const auto& v : g.vertex_ids())
        out << "vertex " << v << '\n';
    for (const auto& e : g.edges())
        out << "edge " << e.id << ' ' << g.vertex_id(e.ends[0]) << ' ' << g.vertex_id(e.ends[1]) << '\n';
    return out.str();
}

} // namespace swk
