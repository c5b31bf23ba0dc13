#pragma once

#include <stdexcept>
#include <string>

namespace framelift {

// Bad caller input: unknown element names, overlapping minor sets, wrong group.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation's documented precondition does not hold (e.g. relaxing a set
// that is not a circuit-hyperplane).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Something that must hold by theory did not. Carries a description of the
// offending instance so it can be reproduced.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace framelift
