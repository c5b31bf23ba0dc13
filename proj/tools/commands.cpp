#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "framelift/errors.hpp"
#include "framelift/families.hpp"
#include "framelift/graph_io.hpp"
#include "framelift/linear_rep.hpp"
#include "framelift/matroid_io.hpp"
#include "framelift/matroid_query.hpp"

#ifndef FRAMELIFT_VERSION
#define FRAMELIFT_VERSION "dev"
#endif

namespace framelift::cli {

namespace fs = std::filesystem;

Level parse_level(const std::string& s) {
    if (s == "facts") return Level::Facts;
    if (s == "minors") return Level::Minors;
    if (s == "full") return Level::Full;
    throw UsageError("level must be facts, minors or full");
}

std::string to_string(Level l) {
    switch (l) {
        case Level::Facts: return "facts";
        case Level::Minors: return "minors";
        case Level::Full: return "full";
    }
    return {};
}

DecideOptions SearchOptions::decide_options() const {
    DecideOptions o;
    o.max_nodes = budget_nodes;
    o.max_seconds = budget_seconds;
    o.threads = threads;
    o.strategy = strategy;
    return o;
}

namespace {

RunReport start(std::string command) {
    RunReport r;
    r.tool_version = FRAMELIFT_VERSION;
    r.command = std::move(command);
    return r;
}

void family_params(RunReport& r, MatroidKind kind, int k) {
    r.parameters["kind"] = to_string(kind);
    r.parameters["k"] = std::to_string(k);
    try {
        check_params({k, kind, {}});
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
}

void search_params(RunReport& r, const SearchOptions& opt) {
    r.parameters["budget_nodes"] = std::to_string(opt.budget_nodes);
    std::ostringstream s;
    s << opt.budget_seconds;
    r.parameters["budget_seconds"] = s.str();
    r.parameters["strategy"] = to_string(opt.strategy);
}

// The two modified sets, checked against N before anything else.
void construction_checks(RunReport& r, const FamilyInstance& inst) {
    const bool frame = inst.params.kind == MatroidKind::Frame;
    for (auto [label, set] : {std::pair{"P+{e1,e2}", inst.p_plus()}, std::pair{"Q+{e1,e2}", inst.q_plus()}}) {
        const auto fails = frame ? free_basis_failures(*inst.n, set) : circuit_hyperplane_failures(*inst.n, set);
        std::string detail = inst.n->format(set);
        for (const auto& f : fails) detail += "; " + f;
        r.check(std::string(label) + " is a " + (frame ? "free basis" : "circuit-hyperplane") + " of N", fails.empty(),
                detail);
    }
}

std::optional<FamilyInstance> instance_or_report(RunReport& r, MatroidKind kind, int k, bool materialize) {
    try {
        return build_instance({k, kind, {}}, materialize);
    } catch (const PreconditionError& e) {
        r.check("construction", false, e.what());
        return std::nullopt;
    }
}

Artifact file_artifact(const std::string& role, const fs::path& path, const fs::path& shown) {
    return {role, shown.generic_string(), file_sha256(path.string()), {}};
}

Artifact inline_artifact(const std::string& role, const std::string& text) { return {role, "", sha256_hex(text), text}; }

}  // namespace

CertificateSummary summarize(const Certificate& c, const std::string& subject) {
    CertificateSummary s;
    s.subject = subject;
    s.kind = to_string(c.kind);
    s.verdict = to_string(c.verdict);
    s.model = c.model;
    s.strategy = to_string(c.strategy);
    s.filter = to_string(c.filter);
    s.candidate_graphs = c.candidate_graphs;
    s.vertical_families = c.vertical_families;
    s.bijection_nodes = c.bijection_nodes;
    s.leaves = c.leaves;
    for (const auto& x : c.rules) s.rules.push_back({x.name, x.justification, x.firings});
    s.notes = c.notes;
    if (c.witness) s.witness = to_text(*c.witness);
    return s;
}

RunReport cmd_generate(MatroidKind kind, int k, const std::string& out_dir) {
    RunReport r = start("generate");
    family_params(r, kind, k);
    r.parameters["out"] = out_dir;
    const auto inst = instance_or_report(r, kind, k, k == 3);
    if (!inst) return r;
    construction_checks(r, *inst);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw UsageError("cannot create " + out_dir + ": " + ec.message());
    const std::string ks = std::to_string(k);
    const std::string tag = to_string(kind) + " k=" + ks;

    auto graph_file = [&](const std::string& name, const LabelledGraph& lg, const std::string& role) {
        const fs::path path = fs::path(out_dir) / name;
        save_labelled_graph(path.string(), lg, role + ", " + tag);
        r.outputs.push_back(file_artifact(role, path, name));
        r.check("round trip " + name, to_text(load_labelled_graph(path.string())) == to_text(lg));
    };
    graph_file("G" + ks + ".graph", inst->base, "G");
    graph_file("G" + ks + "prime.graph", inst->alt, "G'");

    if (inst->is_explicit()) {
        auto matroid_file = [&](const std::string& name, const ExplicitMatroid& m, const std::string& role) {
            const fs::path path = fs::path(out_dir) / name;
            save_matroid(path.string(), m, role + ", " + tag);
            r.outputs.push_back(file_artifact(role, path, name));
            r.check("round trip " + name, equal(load_matroid(path.string()), m));
        };
        matroid_file("N" + ks + ".matroid", *inst->n_explicit, "N");
        matroid_file("M" + ks + ".matroid", *inst->m_explicit, "M");
        matroid_file("M" + ks + "_contracted.matroid", *inst->m_contracted_explicit, "M/{e1,e2}");
        const int mc = inst->m_contracted_explicit->size();
        r.check("M/{e1,e2} has 4k elements", mc == 4 * k, std::to_string(mc) + " elements");
    }
    return r;
}

RunReport cmd_verify(MatroidKind kind, int k, Level level, const SearchOptions& opt) {
    RunReport r = start("verify");
    family_params(r, kind, k);
    r.parameters["level"] = to_string(level);
    if (level == Level::Full) search_params(r, opt);
    if (level != Level::Facts && k != 3) throw UsageError("levels minors and full run at k = 3 only");
    const auto inst = instance_or_report(r, kind, k, k == 3);
    if (!inst) return r;
    construction_checks(r, *inst);
    for (const auto& c : validate_facts(*inst).checks) r.check("fact: " + c.name, c.passed, c.detail);
    if (level == Level::Facts) return r;

    const auto minors = verify_minors(*inst);
    for (const auto& c : minors.checks) r.check("minor: " + c.name, c.passed, c.detail);
    // One witness line per element: which graph represents each of its two minors.
    std::map<std::string, std::string> via;
    int represented = 0;
    for (const auto& c : minors.checks) {
        if (c.name.size() < 4 || (c.name.rfind("M \\ ", 0) != 0 && c.name.rfind("M / ", 0) != 0)) continue;
        const std::string what = c.name[2] == '/' ? "contraction" : "deletion";
        auto& line = via[c.name.substr(4)];
        line += (line.empty() ? "" : ", ") + what + " " + c.detail + (c.passed ? "" : " FAILED");
    }
    std::string witnesses;
    for (int e : inst->p | inst->q) {
        const std::string& name = inst->n->names()[e];
        witnesses += name + ": " + via[name] + "\n";
        represented += via[name].find("FAILED") == std::string::npos && !via[name].empty();
    }
    r.outputs.push_back(inline_artifact("witnesses for P and Q", witnesses));
    const int want = static_cast<int>((inst->p | inst->q).size());
    r.check("representation witnesses for every element of P and Q", represented == want,
            std::to_string(represented) + " of " + std::to_string(want));
    r.outputs.push_back(inline_artifact("M_P representation (G)", to_text(rep_p(*inst))));
    r.outputs.push_back(inline_artifact("M_Q representation (G')", to_text(rep_q(*inst))));
    if (level == Level::Minors) return r;

    const auto cert = decide(*inst->m_contracted_explicit, kind, opt.decide_options());
    r.certificates.push_back(summarize(cert, "M/{e1,e2}"));
    r.check("M/{e1,e2} is not " + to_string(kind), cert.verdict == Verdict::NotRepresentable, to_string(cert.verdict));
    return r;
}

RunReport cmd_decide(const std::string& matroid_file, MatroidKind kind, const SearchOptions& opt,
                     std::optional<Verdict> expect) {
    RunReport r = start("decide");
    r.parameters["kind"] = to_string(kind);
    search_params(r, opt);
    if (expect) r.parameters["expect"] = to_string(*expect);
    const ExplicitMatroid m = load_matroid(matroid_file);
    r.inputs.push_back({"matroid", matroid_file, file_sha256(matroid_file), {}});
    if (m.size() > ExplicitMatroid::kExhaustiveCheckLimit) throw UsageError("decide takes at most 16 elements");
    const auto cert = decide(m, kind, opt.decide_options());
    r.certificates.push_back(summarize(cert, fs::path(matroid_file).filename().string()));
    r.check("definite verdict", cert.verdict != Verdict::BudgetExceeded, to_string(cert.verdict));
    if (cert.witness) {
        std::string why;
        r.check("witness re-verified", verify_witness(m, kind, *cert.witness, &why), why);
    }
    if (expect) r.check("verdict is " + to_string(*expect), cert.verdict == *expect, to_string(cert.verdict));
    return r;
}

RunReport cmd_crosscheck(const std::string& graph_file, std::optional<MatroidKind> kind) {
    RunReport r = start("crosscheck");
    const LabelledGraph lg = load_labelled_graph(graph_file);
    r.inputs.push_back({"labelled graph", graph_file, file_sha256(graph_file), {}});
    const MatroidKind natural = lg.group() == Group::PositiveRationals ? MatroidKind::Frame : MatroidKind::Lift;
    const MatroidKind use = kind.value_or(natural);
    if (use != natural)
        throw UsageError(to_string(use) + " needs group " + (use == MatroidKind::Frame ? "Q+" : "Z") + ", file has " +
                         to_string(lg.group()));
    r.parameters["kind"] = to_string(use);
    const int m = lg.graph().edge_count();
    if (m > 12) throw UsageError("crosscheck takes at most 12 edges");
    if (!lg.graph().loops().empty()) throw UsageError("crosscheck needs a loopless graph");

    const RationalMatrix a = use == MatroidKind::Frame ? frame_matrix(lg) : lift_matrix(lg);
    std::ostringstream mat;
    write_matrix(mat, a);
    r.outputs.push_back(inline_artifact("matrix", mat.str()));
    const auto oracle = graph_oracle(lg, use);
    const auto mb = bias_matroid(balanced_cycles(lg), use);
    std::string first_diff;
    for (std::uint32_t bits = 0; bits < (1u << m) && first_diff.empty(); ++bits) {
        const ElementSet s(bits);
        const int x = mb.rank(s), y = column_rank(a, s);
        if (x != y || oracle->rank(s) != x)
            first_diff = mb.format(s) + ": graph rank " + std::to_string(x) + ", matrix rank " + std::to_string(y);
    }
    const std::string name = use == MatroidKind::Frame ? "FM" : "LM";
    r.check(name + "(G) equals the column matroid on all " + std::to_string(1u << m) + " subsets", first_diff.empty(),
            first_diff.empty() ? "EQUAL" : first_diff);
    return r;
}

}  // namespace framelift::cli
