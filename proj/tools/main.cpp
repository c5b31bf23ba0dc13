#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "framelift/errors.hpp"

using namespace framelift;
using namespace framelift::cli;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInput = 3 };

struct Output {
    std::string format = "text";
    std::string out;
};

int emit(const RunReport& r, const Output& o) {
    const std::string text = o.format == "structured" ? to_json(r).dump(2) + "\n" : render_text(r);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) throw UsageError("cannot write " + o.out);
        f << text;
    }
    return r.passed() ? kPass : kFail;
}

MatroidKind kind_of(const std::string& s) {
    try {
        return parse_kind(s);
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"framelift: frame and lift matroids, their excluded-minor families, and certified deciders"};
    app.set_version_flag("--version", std::string(FRAMELIFT_VERSION));
    app.require_subcommand(1);

    std::string kind, level = "facts", file, out_dir, strategy = "auto", expect;
    int k = 0;
    SearchOptions search;
    Output output;

    auto add_output = [&](CLI::App* sub, bool with_out) {
        sub->add_option("--format", output.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
        if (with_out) sub->add_option("--out", output.out, "Write the report to this file");
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", search.budget_nodes, "Search node limit per candidate graph");
        sub->add_option("--budget-seconds", search.budget_seconds, "Wall-clock limit, 0 for none");
        sub->add_option("--threads", search.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--strategy", strategy, "auto (star families where licensed) or enumerate")
            ->check(CLI::IsMember({"auto", "enumerate"}));
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--kind,kind", kind, "frame or lift (flag or first positional)");
        sub->add_option("--k,k", k, "odd k >= 3 (flag or second positional)");
    };

    auto* gen = app.add_subcommand("generate", "Write G_k, G'_k and (k = 3) the matroid files");
    add_family(gen);
    gen->add_option("--out", out_dir, "Output directory")->required();
    add_output(gen, false);

    auto* ver = app.add_subcommand("verify", "Validate the construction for kind and k");
    add_family(ver);
    ver->add_option("--level", level, "facts, minors or full")->check(CLI::IsMember({"facts", "minors", "full"}));
    add_search(ver);
    add_output(ver, true);

    auto* dec = app.add_subcommand("decide", "Decide whether a matroid file is frame or lift");
    dec->add_option("file", file, "Matroid file")->required();
    dec->add_option("--kind", kind, "frame or lift")->required();
    dec->add_option("--expect", expect, "Add a check on the verdict")
        ->check(CLI::IsMember({"representable", "not-representable"}));
    add_search(dec);
    add_output(dec, true);

    auto* cross = app.add_subcommand("crosscheck", "Compare FM/LM of a labelled graph with its matrix");
    cross->add_option("file", file, "Labelled graph file")->required();
    cross->add_option("--kind", kind, "frame or lift (default: from the group)");
    add_output(cross, true);

    auto* render = app.add_subcommand("render", "Re-render a structured report after checking its digest");
    render->add_option("file", file, "Structured report")->required();
    add_output(render, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        search.strategy = strategy == "enumerate" ? Strategy::Enumerate : Strategy::Auto;
        RunReport r;
        if (render->parsed()) {
            std::ifstream in(file);
            if (!in) throw UsageError("cannot read " + file);
            return emit(report_from_json(nlohmann::json::parse(in)), output);
        }
        if (gen->parsed() || ver->parsed()) {
            if (kind.empty() || k == 0) throw UsageError("kind and k are required");
            if (gen->parsed()) r = cmd_generate(kind_of(kind), k, out_dir);
            else r = cmd_verify(kind_of(kind), k, parse_level(level), search);
        } else if (dec->parsed()) {
            std::optional<Verdict> want;
            if (expect == "representable") want = Verdict::Representable;
            if (expect == "not-representable") want = Verdict::NotRepresentable;
            r = cmd_decide(file, kind_of(kind), search, want);
        } else {
            std::optional<MatroidKind> kk;
            if (!kind.empty()) kk = kind_of(kind);
            r = cmd_crosscheck(file, kk);
        }
        r.threads = search.threads;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return emit(r, output);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return kInput;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
