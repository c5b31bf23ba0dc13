#pragma once

#include <cstdint>
#include <string>

namespace framelift {

// The two abelian groups used for edge labels: the integers under addition
// and the positive rationals under multiplication (a subgroup of the reals
// under multiplication, kept exact).
enum class Group { Integers, PositiveRationals };

std::string to_string(Group g);  // "Z" or "Q+"
Group parse_group(const std::string& s);

class GroupValue {
public:
    GroupValue() = default;  // the additive identity
    static GroupValue integer(std::int64_t v);
    // Reduced to lowest terms; throws InputError unless num/den > 0.
    static GroupValue rational(std::int64_t num, std::int64_t den = 1);
    static GroupValue identity(Group g);
    // "5", "-2" for Z; "3", "2/3" for Q+.
    static GroupValue parse(Group g, const std::string& text);

    Group group() const { return group_; }
    // Integer value for Z; numerator for Q+.
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_identity() const;
    GroupValue inverse() const;
    std::string to_string() const;

    friend bool operator==(const GroupValue&, const GroupValue&) = default;

private:
    GroupValue(Group g, std::int64_t n, std::int64_t d) : group_(g), num_(n), den_(d) {}

    Group group_ = Group::Integers;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Group operation; throws InputError when the groups differ.
GroupValue compose(const GroupValue& a, const GroupValue& b);

}  // namespace framelift
