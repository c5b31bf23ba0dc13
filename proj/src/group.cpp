#include "framelift/group.hpp"

#include <limits>
#include <numeric>

#include "framelift/errors.hpp"

namespace framelift {

std::string to_string(Group g) { return g == Group::Integers ? "Z" : "Q+"; }

Group parse_group(const std::string& s) {
    if (s == "Z") return Group::Integers;
    if (s == "Q+") return Group::PositiveRationals;
    throw InputError("unknown group '" + s + "' (expected Z or Q+)");
}

namespace {

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw InternalError("group label arithmetic overflowed 64 bits");
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("malformed label '" + s + "'");
    }
}

}  // namespace

GroupValue GroupValue::integer(std::int64_t v) { return {Group::Integers, v, 1}; }

GroupValue GroupValue::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num <= 0) throw InputError("multiplicative labels must be strictly positive");
    const std::int64_t g = std::gcd(num, den);
    return {Group::PositiveRationals, num / g, den / g};
}

GroupValue GroupValue::identity(Group g) {
    return g == Group::Integers ? integer(0) : GroupValue(Group::PositiveRationals, 1, 1);
}

GroupValue GroupValue::parse(Group g, const std::string& text) {
    if (g == Group::Integers) {
        if (text.find('/') != std::string::npos) throw InputError("additive labels are integers, got '" + text + "'");
        return integer(parse_int(text));
    }
    const auto slash = text.find('/');
    if (slash == std::string::npos) return rational(parse_int(text), 1);
    return rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

bool GroupValue::is_identity() const {
    return group_ == Group::Integers ? num_ == 0 : (num_ == 1 && den_ == 1);
}

GroupValue GroupValue::inverse() const {
    if (group_ == Group::Integers) return integer(narrow(-static_cast<__int128>(num_)));
    return {Group::PositiveRationals, den_, num_};
}

std::string GroupValue::to_string() const {
    if (group_ == Group::Integers || den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

GroupValue compose(const GroupValue& a, const GroupValue& b) {
    if (a.group() != b.group()) throw InputError("cannot compose labels from different groups");
    if (a.group() == Group::Integers) return GroupValue::integer(narrow(static_cast<__int128>(a.num()) + b.num()));
    // Cross-reduce before multiplying to keep the terms small.
    const std::int64_t g1 = std::gcd(a.num(), b.den());
    const std::int64_t g2 = std::gcd(b.num(), a.den());
    const __int128 n = static_cast<__int128>(a.num() / g1) * (b.num() / g2);
    const __int128 d = static_cast<__int128>(a.den() / g2) * (b.den() / g1);
    return GroupValue::rational(narrow(n), narrow(d));
}

}  // namespace framelift
