#include "framelift/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "framelift/errors.hpp"
#include "text_lines.hpp"

namespace framelift {

namespace {

void write_comment(std::ostream& os, const std::string& comment) {
    std::istringstream ss(comment);
    std::string line;
    while (std::getline(ss, line)) os << "# " << line << '\n';
}

void write_vertices(std::ostream& os, const Multigraph& g) {
    os << "VERTICES " << g.vertex_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) os << (v ? " " : "") << g.vertices()[v];
    os << '\n';
}

std::string edge_line(const Multigraph& g, int e) {
    const Edge& ed = g.edge(e);
    return ed.name + ' ' + g.vertices()[ed.tail] + ' ' + g.vertices()[ed.head];
}

struct RawEdges {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<std::vector<std::string>> extra;  // tokens after "name tail head"
    std::vector<int> lines;
};

RawEdges read_edges(detail::LineReader& in) {
    RawEdges raw;
    const int n = in.keyword_count("VERTICES");
    if (n > kMaxVertices) throw ParseError(in.line(), "more than 64 vertices");
    while (static_cast<int>(raw.vertices.size()) < n) {
        auto t = in.require("vertex names");
        for (auto& s : t) raw.vertices.push_back(s);
    }
    if (static_cast<int>(raw.vertices.size()) != n)
        throw ParseError(in.line(), "expected " + std::to_string(n) + " vertex names");
    std::unordered_map<std::string, int> pos;
    for (int i = 0; i < n; ++i)
        if (!pos.emplace(raw.vertices[i], i).second)
            throw ParseError(in.line(), "duplicate vertex '" + raw.vertices[i] + "'");
    const int m = in.keyword_count("EDGES");
    if (m > kMaxElements) throw ParseError(in.line(), "more than 32 edges");
    std::unordered_map<std::string, int> names;
    for (int j = 0; j < m; ++j) {
        auto t = in.require("an edge line");
        if (t.size() < 3) throw ParseError(in.line(), "edge line needs 'name tail head'");
        auto end = [&](const std::string& v) {
            auto it = pos.find(v);
            if (it == pos.end()) throw ParseError(in.line(), "unknown vertex '" + v + "'");
            return it->second;
        };
        if (!names.emplace(t[0], j).second) throw ParseError(in.line(), "duplicate edge '" + t[0] + "'");
        raw.edges.push_back({t[0], end(t[1]), end(t[2])});
        raw.extra.emplace_back(t.begin() + 3, t.end());
        raw.lines.push_back(in.line());
    }
    return raw;
}

void no_trailing(detail::LineReader& in) {
    std::vector<std::string> extra;
    if (in.next(extra)) throw ParseError(in.line(), "trailing content '" + extra.front() + "'");
}

}  // namespace

void write_labelled_graph(std::ostream& os, const LabelledGraph& lg, const std::string& comment) {
    write_comment(os, comment);
    const Multigraph& g = lg.graph();
    os << "GROUP " << to_string(lg.group()) << '\n';
    write_vertices(os, g);
    os << "EDGES " << g.edge_count() << '\n';
    for (int e = 0; e < g.edge_count(); ++e) {
        os << edge_line(g, e) << ' ';
        if (g.edge(e).is_loop())
            os << (lg.balanced_loops().contains(e) ? "balanced" : "unbalanced");
        else
            os << lg.label(e).to_string();
        os << '\n';
    }
}

LabelledGraph read_labelled_graph(std::istream& is) {
    detail::LineReader in(is);
    auto t = in.require("GROUP");
    if (t.size() != 2 || t[0] != "GROUP") throw ParseError(in.line(), "expected 'GROUP Z' or 'GROUP Q+'");
    Group group;
    try {
        group = parse_group(t[1]);
    } catch (const InputError& e) {
        throw ParseError(in.line(), e.what());
    }
    RawEdges raw = read_edges(in);
    std::vector<GroupValue> labels;
    ElementSet balanced_loops;
    for (std::size_t j = 0; j < raw.edges.size(); ++j) {
        const auto& extra = raw.extra[j];
        const int line = raw.lines[j];
        if (extra.size() > 1) throw ParseError(line, "too many fields for edge '" + raw.edges[j].name + "'");
        if (raw.edges[j].is_loop()) {
            labels.push_back(GroupValue::identity(group));
            if (extra.empty() || extra[0] == "unbalanced") continue;
            if (extra[0] != "balanced")
                throw ParseError(line, "loop '" + raw.edges[j].name + "' takes 'balanced' or 'unbalanced'");
            balanced_loops = balanced_loops.with(static_cast<int>(j));
            continue;
        }
        try {
            labels.push_back(extra.empty() ? GroupValue::identity(group) : GroupValue::parse(group, extra[0]));
        } catch (const InputError& e) {
            throw ParseError(line, "edge '" + raw.edges[j].name + "': " + e.what());
        }
    }
    no_trailing(in);
    return LabelledGraph(Multigraph(std::move(raw.vertices), std::move(raw.edges)), group, std::move(labels),
                         balanced_loops);
}

std::string to_text(const LabelledGraph& lg) {
    std::ostringstream os;
    write_labelled_graph(os, lg);
    return os.str();
}

LabelledGraph labelled_graph_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_labelled_graph(is);
}

LabelledGraph load_labelled_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_labelled_graph(in);
}

void save_labelled_graph(const std::string& path, const LabelledGraph& lg, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    write_labelled_graph(out, lg, comment);
}

void write_biased_graph(std::ostream& os, const BiasedGraph& bg, const std::string& comment) {
    write_comment(os, comment);
    const Multigraph& g = bg.graph();
    write_vertices(os, g);
    os << "EDGES " << g.edge_count() << '\n';
    for (int e = 0; e < g.edge_count(); ++e) os << edge_line(g, e) << '\n';
    os << "BALANCED " << bg.balanced().size() << '\n';
    for (auto c : bg.balanced()) {
        bool first = true;
        for (int e : c) {
            os << (first ? "" : " ") << g.edge(e).name;
            first = false;
        }
        os << '\n';
    }
}

BiasedGraph read_biased_graph(std::istream& is) {
    detail::LineReader in(is);
    RawEdges raw = read_edges(in);
    for (std::size_t j = 0; j < raw.extra.size(); ++j)
        if (!raw.extra[j].empty()) throw ParseError(raw.lines[j], "biased graph edges take no label");
    Multigraph g(std::move(raw.vertices), std::move(raw.edges));
    const int k = in.keyword_count("BALANCED");
    std::vector<ElementSet> balanced;
    for (int j = 0; j < k; ++j) {
        auto t = in.require("a balanced cycle");
        ElementSet c;
        try {
            c = g.edge_set(t);
        } catch (const InputError& e) {
            throw ParseError(in.line(), e.what());
        }
        if (!is_cycle(g, c)) throw ParseError(in.line(), g.format(c) + " is not a cycle");
        balanced.push_back(c);
    }
    no_trailing(in);
    try {
        return BiasedGraph(std::move(g), std::move(balanced));
    } catch (const InputError& e) {
        throw ParseError(in.line(), e.what());
    }
}

std::string to_text(const BiasedGraph& bg) {
    std::ostringstream os;
    write_biased_graph(os, bg);
    return os.str();
}

BiasedGraph biased_graph_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_biased_graph(is);
}

}  // namespace framelift
