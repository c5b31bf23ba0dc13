#pragma once

#include <iosfwd>
#include <string>

#include "framelift/matroid.hpp"

namespace framelift {

// Text format:
//   GROUND n          followed by n element names
//   RANK r
//   BASES m           followed by m lines of r names, or
//   CIRCUITS m        followed by m lines of names (bases are derived)
// A lone '-' stands for the empty set. Lines starting with '#' are comments. The writer emits bases in canonical
// order, so write(read(write(M))) is byte-identical to write(M).
void write_matroid(std::ostream& os, const ExplicitMatroid& m, const std::string& comment = {});
std::string to_text(const ExplicitMatroid& m);
ExplicitMatroid read_matroid(std::istream& is);
ExplicitMatroid matroid_from_text(const std::string& text);
ExplicitMatroid load_matroid(const std::string& path);
void save_matroid(const std::string& path, const ExplicitMatroid& m, const std::string& comment = {});

}  // namespace framelift
