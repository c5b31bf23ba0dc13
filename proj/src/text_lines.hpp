#pragma once

// Line reader shared by the text formats: skips blank and '#' lines and
// keeps the 1-based line number for error messages.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "framelift/errors.hpp"

namespace framelift::detail {

class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    // Next non-blank, non-comment line split into tokens; false at EOF.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(is_, line)) {
            ++line_no_;
            std::istringstream ss(line);
            tokens.clear();
            std::string t;
            while (ss >> t) tokens.push_back(t);
            if (tokens.empty() || tokens.front()[0] == '#') continue;
            return true;
        }
        return false;
    }

    std::vector<std::string> require(const char* what) {
        std::vector<std::string> t;
        if (!next(t)) throw ParseError(line_no_ + 1, std::string("unexpected end of input, expected ") + what);
        return t;
    }

    // "KEYWORD <count>"
    int keyword_count(const std::string& keyword) {
        auto t = require(keyword.c_str());
        if (t.size() != 2 || t[0] != keyword) throw ParseError(line_no_, "expected '" + keyword + " <count>'");
        return to_int(t[1]);
    }

    int to_int(const std::string& s) const {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size() || v < 0) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ParseError(line_no_, "expected a nonnegative integer, got '" + s + "'");
        }
    }

    int line() const { return line_no_; }

private:
    std::istream& is_;
    int line_no_ = 0;
};

}  // namespace framelift::detail
