#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace framelift::cli {

inline constexpr int kSchemaVersion = 1;

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct RuleSummary {
    std::string name;
    std::string justification;
    std::uint64_t firings = 0;
};

struct CertificateSummary {
    std::string subject;  // what was decided, e.g. "M/{e1,e2}"
    std::string kind;
    std::string verdict;
    std::string model;
    std::string strategy;
    std::string filter;
    std::uint64_t candidate_graphs = 0;
    std::uint64_t vertical_families = 0;
    std::uint64_t bijection_nodes = 0;
    std::uint64_t leaves = 0;
    std::vector<RuleSummary> rules;
    std::vector<std::string> notes;
    std::string witness;  // biased-graph text, empty unless representable
};

struct Artifact {
    std::string role;
    std::string path;
    std::string sha256;
    std::string content;  // inline text, for witnesses; empty for files
};

struct RunReport {
    std::string tool_version;
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<Artifact> inputs;
    std::vector<Artifact> outputs;
    std::vector<CheckResult> checks;
    std::vector<CertificateSummary> certificates;
    // Execution details; not part of the canonical form.
    int threads = 1;
    double seconds = 0;

    bool passed() const;
    void check(std::string name, bool ok, std::string detail = {});
};

nlohmann::ordered_json to_json(const RunReport& r);
// The report without execution details and digest, serialized compactly.
std::string canonical_text(const RunReport& r);
std::string canonical_digest(const RunReport& r);
// Throws nlohmann::json exceptions or std::runtime_error on schema mismatch.
RunReport report_from_json(const nlohmann::json& j);
std::string render_text(const RunReport& r);

std::string sha256_hex(std::string_view data);
std::string file_sha256(const std::string& path);

}  // namespace framelift::cli
