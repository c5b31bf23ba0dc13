#include "report.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace framelift::cli {

using ojson = nlohmann::ordered_json;

bool RunReport::passed() const {
    if (checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

void RunReport::check(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

namespace {

ojson artifacts(const std::vector<Artifact>& xs) {
    ojson out = ojson::array();
    for (const auto& a : xs) {
        ojson j{{"role", a.role}, {"path", a.path}, {"sha256", a.sha256}};
        if (!a.content.empty()) j["content"] = a.content;
        out.push_back(std::move(j));
    }
    return out;
}

ojson canonical_json(const RunReport& r) {
    ojson checks = ojson::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    ojson certs = ojson::array();
    for (const auto& c : r.certificates) {
        ojson rules = ojson::array();
        for (const auto& x : c.rules)
            rules.push_back({{"name", x.name}, {"justification", x.justification}, {"firings", x.firings}});
        certs.push_back({{"subject", c.subject},
                         {"kind", c.kind},
                         {"verdict", c.verdict},
                         {"model", c.model},
                         {"strategy", c.strategy},
                         {"filter", c.filter},
                         {"candidate_graphs", c.candidate_graphs},
                         {"vertical_families", c.vertical_families},
                         {"bijection_nodes", c.bijection_nodes},
                         {"leaves", c.leaves},
                         {"rules", rules},
                         {"notes", c.notes},
                         {"witness", c.witness}});
    }
    ojson params = ojson::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    return {{"schema", "framelift-report"},
            {"schema_version", kSchemaVersion},
            {"tool_version", r.tool_version},
            {"command", r.command},
            {"parameters", params},
            {"inputs", artifacts(r.inputs)},
            {"outputs", artifacts(r.outputs)},
            {"checks", checks},
            {"certificates", certs},
            {"passed", r.passed()}};
}

std::vector<Artifact> read_artifacts(const nlohmann::json& j) {
    std::vector<Artifact> out;
    for (const auto& a : j)
        out.push_back({a.at("role"), a.at("path"), a.at("sha256"), a.value("content", std::string{})});
    return out;
}

}  // namespace

ojson to_json(const RunReport& r) {
    ojson j = canonical_json(r);
    j["execution"] = {{"threads", r.threads}, {"seconds", r.seconds}};
    j["canonical_digest"] = canonical_digest(r);
    return j;
}

std::string canonical_text(const RunReport& r) { return canonical_json(r).dump(); }

std::string canonical_digest(const RunReport& r) { return sha256_hex(canonical_text(r)); }

RunReport report_from_json(const nlohmann::json& j) {
    if (j.at("schema") != "framelift-report") throw std::runtime_error("not a framelift report");
    if (j.at("schema_version") != kSchemaVersion)
        throw std::runtime_error("unsupported report schema version " + j.at("schema_version").dump());
    RunReport r;
    r.tool_version = j.at("tool_version");
    r.command = j.at("command");
    for (const auto& [k, v] : j.at("parameters").items()) r.parameters[k] = v;
    r.inputs = read_artifacts(j.at("inputs"));
    r.outputs = read_artifacts(j.at("outputs"));
    for (const auto& c : j.at("checks")) r.checks.push_back({c.at("name"), c.at("passed"), c.at("detail")});
    for (const auto& c : j.at("certificates")) {
        CertificateSummary s;
        s.subject = c.at("subject");
        s.kind = c.at("kind");
        s.verdict = c.at("verdict");
        s.model = c.at("model");
        s.strategy = c.at("strategy");
        s.filter = c.at("filter");
        s.candidate_graphs = c.at("candidate_graphs");
        s.vertical_families = c.at("vertical_families");
        s.bijection_nodes = c.at("bijection_nodes");
        s.leaves = c.at("leaves");
        for (const auto& x : c.at("rules")) s.rules.push_back({x.at("name"), x.at("justification"), x.at("firings")});
        s.notes = c.at("notes").get<std::vector<std::string>>();
        s.witness = c.at("witness");
        r.certificates.push_back(std::move(s));
    }
    if (j.contains("execution")) {
        r.threads = j["execution"].at("threads");
        r.seconds = j["execution"].at("seconds");
    }
    if (j.contains("canonical_digest") && j["canonical_digest"] != canonical_digest(r))
        throw std::runtime_error("canonical digest does not match the report body");
    return r;
}

std::string render_text(const RunReport& r) {
    std::ostringstream os;
    os << "framelift " << r.tool_version << "  " << r.command;
    for (const auto& [k, v] : r.parameters) os << "  " << k << "=" << v;
    os << "\n";
    for (const auto& a : r.inputs) os << "input  " << a.role << "  " << a.path << "  sha256:" << a.sha256 << "\n";
    for (const auto& a : r.outputs) {
        os << "output " << a.role << "  " << a.path << "  sha256:" << a.sha256 << "\n";
        if (!a.content.empty()) {
            std::istringstream lines(a.content);
            for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
        }
    }
    for (const auto& c : r.checks) {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    for (const auto& c : r.certificates) {
        os << "certificate  " << c.subject << "  " << c.kind << "  " << c.verdict << "\n";
        os << "  model: " << c.model << "\n";
        os << "  strategy " << c.strategy << ", graphs " << c.filter << "; candidates " << c.candidate_graphs
           << ", star families " << c.vertical_families << ", bijection nodes " << c.bijection_nodes << ", leaves "
           << c.leaves << "\n";
        for (const auto& x : c.rules)
            os << "  rule " << x.name << " (fired " << x.firings << "): " << x.justification << "\n";
        for (const auto& n : c.notes) os << "  note: " << n << "\n";
        if (!c.witness.empty()) {
            os << "  witness:\n";
            std::istringstream lines(c.witness);
            for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
        }
    }
    os << (r.passed() ? "RESULT PASS" : "RESULT FAIL") << "  digest " << canonical_digest(r) << "\n";
    return os.str();
}

std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

std::string file_sha256(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return sha256_hex(buf.str());
}

}  // namespace framelift::cli
