#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "framelift/bias_matroid.hpp"
#include "framelift/decide.hpp"
#include "report.hpp"

namespace framelift::cli {

// Bad flags or parameters; the front end maps these to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Level { Facts, Minors, Full };
Level parse_level(const std::string& s);
std::string to_string(Level l);

struct SearchOptions {
    std::uint64_t budget_nodes = 1'000'000'000;
    double budget_seconds = 0;
    int threads = 1;
    Strategy strategy = Strategy::Auto;

    DecideOptions decide_options() const;
};

RunReport cmd_generate(MatroidKind kind, int k, const std::string& out_dir);
RunReport cmd_verify(MatroidKind kind, int k, Level level, const SearchOptions& opt);
RunReport cmd_decide(const std::string& matroid_file, MatroidKind kind, const SearchOptions& opt,
                     std::optional<Verdict> expect = {});
RunReport cmd_crosscheck(const std::string& graph_file, std::optional<MatroidKind> kind = {});

CertificateSummary summarize(const Certificate& c, const std::string& subject);

}  // namespace framelift::cli
