#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "relkit/error.hpp"
#include "relkit/graph.hpp"

namespace relkit {

// Text formats (UTF-8, line oriented, '#' starts a comment, blank lines
// ignored):
//
//   graph file:   first data line "N M", then exactly M lines "u v"
//                 (emitted with 0 <= u < v < N; parsing accepts either
//                 endpoint order and canonicalizes)
//
//   script file:  one step per line, "leaf A" or "chord U V"; the base
//                 graph (vertices 0 and 1 joined by edge 0-1) is implicit
//
// A file whose first data token is "leaf" or "chord" is a script; a file
// whose first data token is an integer is a graph. A file with no data
// lines cannot be classified and is a parse error.

namespace detail {

inline std::vector<std::string_view> data_lines(std::string_view text,
                                                std::vector<int>* line_numbers = nullptr) {
    std::vector<std::string_view> lines;
    int lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(b, e - b + 1));
        if (line_numbers) line_numbers->push_back(lineno);
    }
    return lines;
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const std::size_t b = line.find_first_not_of(" \t", pos);
        if (b == std::string_view::npos) break;
        std::size_t e = line.find_first_of(" \t", b);
        if (e == std::string_view::npos) e = line.size();
        toks.push_back(line.substr(b, e - b));
        pos = e;
    }
    return toks;
}

inline int parse_int(std::string_view tok, int lineno, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        raise(Errc::parse_error, "line " + std::to_string(lineno) + ": expected " + what +
                                     ", got '" + std::string(tok) + "'");
    return value;
}

} // namespace detail

inline Graph parse_graph_text(std::string_view text) {
    std::vector<int> linenos;
    const auto lines = detail::data_lines(text, &linenos);
    if (lines.empty()) raise(Errc::parse_error, "empty graph file");

    const auto header = detail::split_tokens(lines[0]);
    if (header.size() != 2)
        raise(Errc::parse_error,
              "line " + std::to_string(linenos[0]) + ": expected header 'N M'");
    const int n = detail::parse_int(header[0], linenos[0], "vertex count");
    const int m = detail::parse_int(header[1], linenos[0], "edge count");
    if (n < 0 || m < 0)
        raise(Errc::parse_error, "line " + std::to_string(linenos[0]) + ": negative header value");
    if (static_cast<int>(lines.size()) - 1 != m)
        raise(Errc::parse_error, "expected " + std::to_string(m) + " edge lines, found " +
                                     std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const auto toks = detail::split_tokens(lines[static_cast<std::size_t>(i)]);
        if (toks.size() != 2)
            raise(Errc::parse_error,
                  "line " + std::to_string(linenos[static_cast<std::size_t>(i)]) +
                      ": expected 'u v'");
        const int lineno = linenos[static_cast<std::size_t>(i)];
        edges.push_back({detail::parse_int(toks[0], lineno, "vertex index"),
                         detail::parse_int(toks[1], lineno, "vertex index")});
    }
    return Graph::validate(n, std::move(edges));
}

inline std::string format_graph_text(const Graph& g) {
    std::string out = std::to_string(g.n_vertices()) + " " + std::to_string(g.m()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

inline ConstructionScript parse_script_text(std::string_view text) {
    std::vector<int> linenos;
    const auto lines = detail::data_lines(text, &linenos);
    ConstructionScript script;
    script.steps.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto toks = detail::split_tokens(lines[i]);
        const int lineno = linenos[i];
        if (toks[0] == "leaf" && toks.size() == 2) {
            script.steps.push_back(
                LeafStep{detail::parse_int(toks[1], lineno, "attach vertex")});
        } else if (toks[0] == "chord" && toks.size() == 3) {
            script.steps.push_back(ChordStep{detail::parse_int(toks[1], lineno, "vertex index"),
                                             detail::parse_int(toks[2], lineno, "vertex index")});
        } else {
            raise(Errc::parse_error, "line " + std::to_string(lineno) +
                                         ": expected 'leaf A' or 'chord U V'");
        }
    }
    return script;
}

inline std::string format_script_text(const ConstructionScript& script) {
    std::string out;
    for (const ConstructionStep& s : script.steps) {
        if (const auto* leaf = std::get_if<LeafStep>(&s)) {
            out += "leaf " + std::to_string(leaf->attach) + "\n";
        } else {
            const auto& chord = std::get<ChordStep>(s);
            out += "chord " + std::to_string(chord.u) + " " + std::to_string(chord.v) + "\n";
        }
    }
    return out;
}

enum class TextKind { graph, script };

inline TextKind detect_text_kind(std::string_view text) {
    const auto lines = detail::data_lines(text);
    if (lines.empty())
        raise(Errc::parse_error, "no data lines; cannot tell graph from script");
    const auto toks = detail::split_tokens(lines[0]);
    if (toks[0] == "leaf" || toks[0] == "chord") return TextKind::script;
    int dummy = 0;
    const auto [ptr, ec] =
        std::from_chars(toks[0].data(), toks[0].data() + toks[0].size(), dummy);
    if (ec == std::errc{} && ptr == toks[0].data() + toks[0].size()) return TextKind::graph;
    raise(Errc::parse_error, "first data line is neither a graph header nor a step");
}

} // namespace relkit
