// moncat: command-line surface for the string-diagram toolkit.
//
// Subcommands: check, eval, normalize, eq, interpret, synthesize, render,
// selftest. Exit codes follow UNIX conventions: 0 success (or "equal"),
// 1 semantic difference (or failed selftest), 2 usage or parse errors.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#if defined(_WIN32)
#include <io.h>
#define MONCAT_ISATTY _isatty
#define MONCAT_FILENO _fileno
#else
#include <unistd.h>
#define MONCAT_ISATTY isatty
#define MONCAT_FILENO fileno
#endif

#include <CLI11.hpp>

#include "moncat/canonical_game.hpp"
#include "moncat/canonical_rel.hpp"
#include "moncat/diagram.hpp"
#include "moncat/error.hpp"
#include "moncat/fol.hpp"
#include "moncat/json_io.hpp"
#include "moncat/monotone.hpp"
#include "moncat/multirel.hpp"
#include "moncat/parse.hpp"
#include "moncat/render.hpp"
#include "moncat/selftest.hpp"
#include "moncat/strategy.hpp"
#include "moncat/theory.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDifferent = 1;
constexpr int kUsage = 2;

bool use_color(std::FILE* stream) {
    const char* mode = std::getenv("MONCAT_COLOR");
    if (mode != nullptr) {
        std::string m = mode;
        if (m == "always") return true;
        if (m == "never") return false;
        // anything else (including "auto") falls through to the tty check
    }
    return MONCAT_ISATTY(MONCAT_FILENO(stream)) != 0;
}

std::string paint(const std::string& text, const char* code, std::FILE* stream) {
    if (!use_color(stream)) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string green(const std::string& t, std::FILE* s = stdout) { return paint(t, "32", s); }
std::string red(const std::string& t, std::FILE* s = stdout) { return paint(t, "31", s); }

void diagnostic(const std::string& message) {
    std::cerr << red("error: ", stderr) << message << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw moncat::ParseError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// A theory argument is either a built-in name (M, CoM, B, R, D, G) or a path
// to a theory file.
moncat::EquationalTheory load_theory(const std::string& arg) {
    if (moncat::is_builtin_theory_name(arg)) return moncat::builtin_theory(arg);
    return moncat::parse_theory(slurp(arg), arg);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw moncat::ParseError("cannot write file '" + out_path + "'");
    out << text;
}

int cmd_check(const std::string& theory_arg, const std::string& expr) {
    moncat::EquationalTheory th = load_theory(theory_arg);
    moncat::DiagramPtr d = moncat::parse_diagram(th.sig, expr);
    moncat::SliceForm sf = moncat::to_slices(th.sig, *d);
    std::cout << green("ok") << ": " << th.sig.word_to_string(d->src) << " -> "
              << th.sig.word_to_string(d->tgt) << " (" << d->gen_count
              << " generator occurrence" << (d->gen_count == 1 ? "" : "s") << ", "
              << sf.slices.size() << " layer" << (sf.slices.size() == 1 ? "" : "s")
              << ", theory " << th.name << ")\n";
    return kOk;
}

int cmd_eval(const std::string& theory_arg, const std::string& expr) {
    moncat::EquationalTheory th = load_theory(theory_arg);
    moncat::DiagramPtr d = moncat::parse_diagram(th.sig, expr);
    nlohmann::json j;
    if (th.name == "M") {
        j = moncat::monotone_to_json(moncat::eval_monoid(th, *d));
    } else if (th.name == "CoM" || th.name == "B") {
        j = moncat::multirel_to_json(moncat::eval_mrel(th, *d));
    } else if (th.name == "R") {
        j = moncat::rel_to_json(moncat::eval_rel(th, *d));
    } else if (th.name == "G") {
        j = moncat::strategy_to_json(moncat::eval_games(th, *d));
    } else {
        throw moncat::DomainError("no semantic model for theory '" + th.name +
                                  "' (expected M, CoM, B, R, or G)");
    }
    std::cout << j.dump() << "\n";
    return kOk;
}

int cmd_normalize(const std::string& theory_arg, const std::string& expr) {
    moncat::EquationalTheory th = load_theory(theory_arg);
    moncat::DiagramPtr d = moncat::parse_diagram(th.sig, expr);
    moncat::DiagramPtr canonical;
    if (th.name == "B") {
        canonical = moncat::flatten(th, *moncat::canonical_of_mrel(moncat::eval_mrel(th, *d)));
    } else if (th.name == "R") {
        canonical = moncat::flatten(th, *moncat::canonical_of_rel(moncat::eval_rel(th, *d)));
    } else if (th.name == "G") {
        canonical = moncat::flatten(th, *moncat::canonical_of_strategy(moncat::eval_games(th, *d)));
    } else {
        throw moncat::DomainError("no canonical form for theory '" + th.name +
                                  "' (expected B, R, or G)");
    }
    std::cout << moncat::diagram_to_expr(th.sig, *canonical) << "\n";
    return kOk;
}

int cmd_eq(const std::string& theory_arg, const std::string& e1, const std::string& e2) {
    moncat::EquationalTheory th = load_theory(theory_arg);
    moncat::DiagramPtr d1 = moncat::parse_diagram(th.sig, e1);
    moncat::DiagramPtr d2 = moncat::parse_diagram(th.sig, e2);
    nlohmann::json v1, v2;
    if (th.name == "M") {
        v1 = moncat::monotone_to_json(moncat::eval_monoid(th, *d1));
        v2 = moncat::monotone_to_json(moncat::eval_monoid(th, *d2));
    } else if (th.name == "CoM" || th.name == "B") {
        v1 = moncat::multirel_to_json(moncat::eval_mrel(th, *d1));
        v2 = moncat::multirel_to_json(moncat::eval_mrel(th, *d2));
    } else if (th.name == "R") {
        v1 = moncat::rel_to_json(moncat::eval_rel(th, *d1));
        v2 = moncat::rel_to_json(moncat::eval_rel(th, *d2));
    } else if (th.name == "G") {
        v1 = moncat::strategy_to_json(moncat::eval_games(th, *d1));
        v2 = moncat::strategy_to_json(moncat::eval_games(th, *d2));
    } else {
        throw moncat::DomainError("no semantic model for theory '" + th.name +
                                  "' (expected M, CoM, B, R, or G)");
    }
    if (v1 == v2) {
        std::cout << green("equal") << ": " << v1.dump() << "\n";
        return kOk;
    }
    std::cout << red("different") << ":\n  " << v1.dump() << "\n  " << v2.dump() << "\n";
    return kDifferent;
}

int cmd_interpret(const std::string& proof_path) {
    moncat::ProofFile pf = moncat::parse_proof_file(slurp(proof_path));
    moncat::ProofInterpretation out =
        moncat::interpret_proof(*pf.left, *pf.right, *pf.proof);
    std::cout << moncat::strategy_to_json(out.strategy).dump() << "\n";
    return kOk;
}

int cmd_synthesize(const std::string& strategy_path) {
    nlohmann::json j = nlohmann::json::parse(slurp(strategy_path), nullptr, true, true);
    moncat::Strategy s = moncat::strategy_from_json(j);
    moncat::SynthesisResult syn = moncat::synthesize_proof(s);
    std::cout << moncat::proof_file_to_string(*syn.left, *syn.right, *syn.proof);
    return kOk;
}

int cmd_render(const std::string& theory_arg, const std::string& expr,
               const std::string& format, const std::string& out_path) {
    moncat::EquationalTheory th = load_theory(theory_arg);
    moncat::DiagramPtr d = moncat::parse_diagram(th.sig, expr);
    std::string text = format == "svg" ? moncat::render_svg(th.sig, *d)
                                       : moncat::render_ascii(th.sig, *d);
    write_output(text, out_path);
    return kOk;
}

int cmd_selftest(int max_size, int max_moves, bool quick) {
    moncat::AcceptanceOptions opts;
    opts.max_size = max_size;
    opts.max_moves = max_moves;
    opts.quick = quick;
    int failed = moncat::run_acceptance(std::cout, opts);
    return failed == 0 ? kOk : kDifferent;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"string-diagram toolkit: type-check, evaluate, normalize, compare,\n"
                 "interpret and synthesize proofs, render, and self-test"};
    app.require_subcommand(1);

    std::string theory;
    std::string expr, expr2, path, format = "ascii", out_path;
    int max_size = 3, max_moves = 3;
    bool quick = false;

    CLI::App* check = app.add_subcommand(
        "check", "Type-check a diagram expression against a theory");
    check->add_option("theory", theory, "Built-in theory name or theory file")->required();
    check->add_option("diagram", expr, "Diagram expression")->required();

    CLI::App* eval = app.add_subcommand(
        "eval", "Evaluate a diagram in its theory's model, printing JSON");
    eval->add_option("--theory", theory, "M, CoM, B, R, or G")->required();
    eval->add_option("diagram", expr, "Diagram expression")->required();

    CLI::App* normalize = app.add_subcommand(
        "normalize", "Print the canonical diagram with the same semantics");
    normalize->add_option("--theory", theory, "B, R, or G")->required();
    normalize->add_option("diagram", expr, "Diagram expression")->required();

    CLI::App* eq = app.add_subcommand(
        "eq", "Decide semantic equality of two diagrams (exit 0 equal, 1 different)");
    eq->add_option("--theory", theory, "M, CoM, B, R, or G")->required();
    eq->add_option("diagram1", expr, "First diagram expression")->required();
    eq->add_option("diagram2", expr2, "Second diagram expression")->required();

    CLI::App* interpret = app.add_subcommand(
        "interpret", "Interpret a sequent proof file as a strategy, printing JSON");
    interpret->add_option("proof-file", path, "Proof file (left:/right:/proof: sections)")
        ->required();

    CLI::App* synthesize = app.add_subcommand(
        "synthesize", "Synthesize a proof file from a strategy JSON file");
    synthesize->add_option("strategy-file", path, "Strategy JSON file")->required();

    CLI::App* render = app.add_subcommand("render", "Render a diagram as ASCII art or SVG");
    render->add_option("--format", format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--theory", theory, "Theory providing the signature (default B)")
        ->default_val("B");
    render->add_option("diagram", expr, "Diagram expression")->required();
    render->add_option("-o,--output", out_path, "Write to a file instead of stdout");

    CLI::App* selftest = app.add_subcommand(
        "selftest", "Run the acceptance suite (exit 0 if every criterion passes)");
    selftest->add_option("--max-size", max_size, "Boundary bound for the matrix sweeps")
        ->check(CLI::Range(0, 4));
    selftest->add_option("--max-moves", max_moves, "Game-size bound for the strategy sweeps")
        ->check(CLI::Range(0, 5));
    selftest->add_flag("--quick", quick, "Reduce the randomized trial counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*check) return cmd_check(theory, expr);
        if (*eval) return cmd_eval(theory, expr);
        if (*normalize) return cmd_normalize(theory, expr);
        if (*eq) return cmd_eq(theory, expr, expr2);
        if (*interpret) return cmd_interpret(path);
        if (*synthesize) return cmd_synthesize(path);
        if (*render) return cmd_render(theory, expr, format, out_path);
        if (*selftest) return cmd_selftest(max_size, max_moves, quick);
    } catch (const nlohmann::json::exception& e) {
        diagnostic(std::string("invalid JSON: ") + e.what());
        return kUsage;
    } catch (const moncat::Error& e) {
        diagnostic(e.what());
        return kUsage;
    }
    return kUsage;
}
