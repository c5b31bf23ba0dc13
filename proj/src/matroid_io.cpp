#include "framelift/matroid_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "framelift/errors.hpp"
#include "text_lines.hpp"

namespace framelift {

void write_matroid(std::ostream& os, const ExplicitMatroid& m, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream ss(comment);
        std::string line;
        while (std::getline(ss, line)) os << "# " << line << '\n';
    }
    os << "GROUND " << m.size() << '\n';
    for (int i = 0; i < m.size(); ++i) os << (i ? " " : "") << m.names()[i];
    os << '\n';
    os << "RANK " << m.full_rank() << '\n';
    os << "BASES " << m.bases().size() << '\n';
    for (auto b : m.bases()) {
        if (b.empty()) {
            os << "-\n";
            continue;
        }
        bool first = true;
        for (int i : b) {
            os << (first ? "" : " ") << m.names()[i];
            first = false;
        }
        os << '\n';
    }
}

std::string to_text(const ExplicitMatroid& m) {
    std::ostringstream os;
    write_matroid(os, m);
    return os.str();
}

ExplicitMatroid read_matroid(std::istream& is) {
    detail::LineReader in(is);
    const int n = in.keyword_count("GROUND");
    if (n > kMaxElements) throw ParseError(in.line(), "ground set larger than 32 elements");
    std::vector<std::string> names;
    while (static_cast<int>(names.size()) < n) {
        auto t = in.require("element names");
        for (auto& s : t) names.push_back(s);
    }
    if (static_cast<int>(names.size()) != n)
        throw ParseError(in.line(), "expected " + std::to_string(n) + " element names");
    std::unordered_map<std::string, int> pos;
    for (int i = 0; i < n; ++i) {
        if (!pos.emplace(names[i], i).second) throw ParseError(in.line(), "duplicate element '" + names[i] + "'");
    }
    const int r = in.keyword_count("RANK");
    auto header = in.require("BASES or CIRCUITS");
    if (header.size() != 2 || (header[0] != "BASES" && header[0] != "CIRCUITS"))
        throw ParseError(in.line(), "expected 'BASES <m>' or 'CIRCUITS <m>'");
    const bool bases_mode = header[0] == "BASES";
    const int count = in.to_int(header[1]);
    std::vector<ElementSet> family;
    for (int j = 0; j < count; ++j) {
        auto t = in.require(bases_mode ? "a basis" : "a circuit");
        ElementSet s;
        if (t.size() == 1 && t[0] == "-") t.clear();
        for (auto& name : t) {
            auto it = pos.find(name);
            if (it == pos.end()) throw ParseError(in.line(), "unknown element '" + name + "'");
            if (s.contains(it->second)) throw ParseError(in.line(), "repeated element '" + name + "'");
            s = s.with(it->second);
        }
        if (bases_mode && s.size() != r)
            throw ParseError(in.line(), "basis has " + std::to_string(s.size()) + " elements, rank is " + std::to_string(r));
        family.push_back(s);
    }
    std::vector<std::string> extra;
    if (in.next(extra)) throw ParseError(in.line(), "trailing content '" + extra.front() + "'");
    try {
        if (bases_mode) return ExplicitMatroid(std::move(names), std::move(family));
        return from_circuits(std::move(names), r, family);
    } catch (const InputError& e) {
        throw ParseError(in.line(), e.what());
    }
}

ExplicitMatroid matroid_from_text(const std::string& text) {
    std::istringstream ss(text);
    return read_matroid(ss);
}

ExplicitMatroid load_matroid(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    return read_matroid(f);
}

void save_matroid(const std::string& path, const ExplicitMatroid& m, const std::string& comment) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    write_matroid(f, m, comment);
}

}  // namespace framelift
