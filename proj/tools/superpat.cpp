// Command-line front end: generation, construction, scoring, verification,
// search, theorem/claim checks and point plots, with reproducible plain or
// JSON output.
//
// Exit codes: 0 verified/pass, 1 counterexample or failed verification,
// 2 budget exhausted, 64 usage error (including unusable inputs/outputs).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "superpat/constructions.hpp"
#include "superpat/containment.hpp"
#include "superpat/perm.hpp"
#include "superpat/report_json.hpp"
#include "superpat/verify.hpp"
#include "superpat/zigzag.hpp"

namespace {

using superpat::json;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

struct GlobalOptions {
    std::string output = "plain";
    bool canonical = false;
    int workers = 0;
    long long budget_nodes = -1;
    double budget_seconds = -1;
    std::string semantics = "pattern-rotation";

    superpat::CyclicSemantics cyclic_semantics() const {
        return semantics == "word-cyclic" ? superpat::CyclicSemantics::word_cyclic
                                          : superpat::CyclicSemantics::pattern_rotation;
    }
    bool json_output() const { return canonical || output == "json"; }
};

void apply_env_overrides(GlobalOptions& g) {
    if (const char* v = std::getenv("SUPERPAT_WORKERS")) g.workers = std::atoi(v);
    if (const char* v = std::getenv("SUPERPAT_BUDGET_NODES")) g.budget_nodes = std::atoll(v);
    if (const char* v = std::getenv("SUPERPAT_BUDGET_SECONDS")) g.budget_seconds = std::atof(v);
}

// One JSON document per run; the runtime section holds wall times and other
// run-dependent diagnostics and is dropped under --canonical.
void emit_json(const GlobalOptions& g, const std::string& command, json params, json result,
               json runtime) {
    json doc{{"schema", 1}, {"command", command}, {"params", std::move(params)},
             {"result", std::move(result)}};
    if (!g.canonical) doc["runtime"] = std::move(runtime);
    std::cout << superpat::canonical_dump(doc) << "\n";
}

std::vector<std::vector<int>> read_input_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::vector<std::vector<int>> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto values = superpat::parse_int_line(line);
        if (!values.empty()) lines.push_back(std::move(values));
    }
    if (lines.empty()) throw std::invalid_argument("input file has no objects: " + path);
    return lines;
}

std::vector<std::vector<int>> gather_sequences(const std::vector<int>& positional,
                                               const std::string& input_path) {
    if (!positional.empty() && !input_path.empty())
        throw std::invalid_argument("give values either positionally or via --input, not both");
    if (!positional.empty()) return {positional};
    if (!input_path.empty()) return read_input_lines(input_path);
    throw std::invalid_argument("no values given (positional integers or --input FILE)");
}

// ---------------------------------------------------------------- gen ----

struct GenArgs {
    int m = 0;
    int q = 0;
};

int run_gen(const GlobalOptions& g, const GenArgs& a) {
    const superpat::Word w = superpat::zigzag_word(a.m, a.q);
    if (g.json_output()) {
        emit_json(g, "gen", json{{"m", a.m}, {"q", a.q}}, superpat::to_json(w), json::object());
    } else {
        std::cout << superpat::format_ints(w.letters()) << "\n";
    }
    return kExitPass;
}

// ---------------------------------------------------------- construct ----

struct ConstructArgs {
    std::string method;
    int k = 0;
};

superpat::ConstructionResult build(const ConstructArgs& a) {
    if (a.method == "ev") return superpat::ev_linear_superpattern(a.k);
    if (a.method == "zzc") return superpat::zzc_permutation(a.k);
    if (a.method == "circ-from-linear") {
        if (a.k < 2) throw std::invalid_argument("circ-from-linear needs k >= 2");
        if (a.k == 2) return superpat::circular_from_linear(superpat::Permutation::identity(1), 2);
        auto base = superpat::ev_linear_superpattern(a.k - 1);
        return superpat::circular_from_linear(base.permutation, a.k);
    }
    throw std::invalid_argument("unknown method: " + a.method);
}

int run_construct(const GlobalOptions& g, const ConstructArgs& a) {
    const auto result = build(a);
    const auto b = superpat::bounds(std::max(a.k, 2));
    if (g.json_output()) {
        json res = superpat::to_json(result);
        res["bounds"] = superpat::to_json(b);
        emit_json(g, "construct", json{{"method", a.method}, {"k", a.k}}, std::move(res),
                  json::object());
    } else {
        std::cout << "method: " << superpat::to_string(result.method) << "\n"
                  << "claimed k: " << result.claimed_k << "\n"
                  << "length: " << result.length << "\n"
                  << "permutation: " << result.permutation << "\n";
        if (result.source_word) std::cout << "source word: " << *result.source_word << "\n";
        std::cout << "bounds(k=" << b.k << "):";
        if (b.word_alphabet) std::cout << " word-alphabet=" << *b.word_alphabet;
        std::cout << " table-permutation=" << b.table_permutation << " remark=" << b.remark;
        if (b.zzc_length) std::cout << " zzc-length=" << *b.zzc_length;
        std::cout << "\n";
    }
    return kExitPass;
}

// --------------------------------------------------------------- score ----

struct ScoreArgs {
    std::string kind;
    std::vector<int> values;
    std::string input;
};

int run_score(const GlobalOptions& g, const ScoreArgs& a) {
    const auto sequences = gather_sequences(a.values, a.input);
    json results = json::array();
    for (const auto& s : sequences) {
        superpat::ScoreReport report;
        if (a.kind == "linear") report = superpat::score(s);
        else if (a.kind == "circular") report = superpat::circular_score(s);
        else if (a.kind == "shifted") report = superpat::shifted_score(s);
        else throw std::invalid_argument("unknown score kind: " + a.kind);

        if (g.json_output()) {
            json r = superpat::to_json(report);
            r["sequence"] = s;
            results.push_back(std::move(r));
        } else {
            std::cout << "kind: " << superpat::to_string(report.kind) << "\n"
                      << "sequence: " << superpat::format_ints(s) << "\n";
            if (report.initial) std::cout << "initial: " << *report.initial << "\n";
            for (const auto& step : report.steps)
                std::cout << "  C(" << step.x << "," << step.y << ") = " << step.cost << "\n";
            std::cout << "total: " << report.total << "\n";
        }
    }
    if (g.json_output()) {
        emit_json(g, "score", json{{"kind", a.kind}},
                  results.size() == 1 ? results.front() : results, json::object());
    }
    return kExitPass;
}

// -------------------------------------------------------------- verify ----

struct VerifyArgs {
    std::string mode;
    int k = 0;
    std::vector<int> values;
    std::string input;
    bool no_witnesses = false;
};

superpat::Mode parse_mode(const std::string& mode) {
    if (mode == "linear") return superpat::Mode::linear;
    if (mode == "circular") return superpat::Mode::circular;
    throw std::invalid_argument("unknown mode: " + mode);
}

int run_verify(const GlobalOptions& g, const VerifyArgs& a) {
    const auto mode = parse_mode(a.mode);
    const auto hosts = gather_sequences(a.values, a.input);
    superpat::VerifyOptions options;
    options.workers = g.workers;
    options.collect_witnesses = !a.no_witnesses;

    bool all_ok = true;
    json results = json::array();
    json runtime_reports = json::array();
    for (const auto& entries : hosts) {
        const superpat::Permutation host(entries);
        const auto report = mode == superpat::Mode::circular
                                ? superpat::verify_circular_superpattern(host, a.k, options)
                                : superpat::verify_superpattern(host, a.k, options);
        all_ok = all_ok && report.ok();
        if (g.json_output()) {
            results.push_back(superpat::to_json(report, options.collect_witnesses));
            runtime_reports.push_back(json{{"elapsed_ms", report.elapsed_ms}});
        } else {
            std::cout << "host: " << host << " (length " << host.size() << ")\n"
                      << "mode: " << superpat::to_string(report.mode) << " k=" << report.k << "\n"
                      << "patterns: " << report.total_patterns;
            if (report.total_classes) std::cout << "  classes: " << *report.total_classes;
            std::cout << "\n";
            if (report.ok()) {
                std::cout << "verdict: VERIFIED\n";
            } else {
                std::cout << "verdict: COUNTEREXAMPLE (" << report.failures.size()
                          << " pattern(s) missing)\n";
                size_t shown = 0;
                for (const auto& f : report.failures) {
                    if (++shown > 10) {
                        std::cout << "  ...\n";
                        break;
                    }
                    std::cout << "  missing: " << f << "\n";
                }
            }
            std::cout << "elapsed: " << report.elapsed_ms << " ms\n";
        }
    }
    if (g.json_output()) {
        emit_json(g, "verify", json{{"mode", a.mode}, {"k", a.k}},
                  results.size() == 1 ? results.front() : results,
                  json{{"workers", g.workers}, {"reports", runtime_reports}});
    }
    return all_ok ? kExitPass : kExitCounterexample;
}

// -------------------------------------------------------------- search ----

struct SearchArgs {
    std::string mode;
    int k = 0;
    int n_limit = -1;
    bool allow_large = false;
};

int run_search(const GlobalOptions& g, const SearchArgs& a) {
    superpat::SearchOptions options;
    options.workers = g.workers;
    options.max_nodes = g.budget_nodes;
    options.max_seconds = g.budget_seconds;
    options.allow_large = a.allow_large;
    const auto result =
        superpat::min_superpattern_length(a.k, parse_mode(a.mode), a.n_limit, options);

    if (g.json_output()) {
        emit_json(g, "search", json{{"mode", a.mode}, {"k", a.k}, {"n_limit", a.n_limit}},
                  superpat::to_json(result),
                  json{{"workers", g.workers},
                       {"nodes", result.nodes},
                       {"elapsed_ms", result.elapsed_ms},
                       {"budget_nodes", g.budget_nodes},
                       {"budget_seconds", g.budget_seconds}});
    } else {
        std::cout << "search: " << a.mode << " k=" << a.k << "\n";
        for (const auto& [n, count] : result.lengths_refuted)
            std::cout << "refuted: length " << n << " (" << count << " candidates)\n";
        if (result.minimal_length) {
            std::cout << "minimal length: " << *result.minimal_length << "\n"
                      << "example: " << *result.example << "\n";
            if (result.budget_exhausted)
                std::cout << "budget exhausted mid-scan: the example verifies but may not be"
                             " the lexicographically first\n";
        } else if (result.budget_exhausted) {
            std::cout << "budget exhausted at length " << *result.exhausted_at_length
                      << " (partial result)\n";
        } else {
            std::cout << "no superpattern up to the length limit\n";
        }
        std::cout << "nodes: " << result.nodes << "  elapsed: " << result.elapsed_ms << " ms\n";
    }
    if (result.budget_exhausted) return kExitBudget;
    return result.minimal_length ? kExitPass : kExitCounterexample;
}

// --------------------------------------------------------------- check ----

struct CheckArgs {
    std::string suite;
    int k = 0;
};

int run_check(const GlobalOptions& g, const CheckArgs& a) {
    if (a.suite == "identities") {
        const auto report = superpat::check_identities(a.k);
        if (g.json_output()) {
            json res = superpat::to_json(report);
            res["grade"] = "theorem";
            emit_json(g, "check", json{{"suite", a.suite}, {"k", a.k}}, std::move(res),
                      json{{"elapsed_ms", report.elapsed_ms}});
        } else {
            std::cout << "check identities k=" << a.k << ": " << report.total << " permutations\n"
                      << "  lift identity            "
                      << (report.lift_violations.empty() ? "PASS" : "FAIL") << "\n"
                      << "  circular lift identity   "
                      << (report.circular_lift_violations.empty() ? "PASS" : "FAIL") << "\n";
            if (report.oddsum_asserted)
                std::cout << "  odd-k nonvanishing       "
                          << (report.oddsum_violations.empty() ? "PASS" : "FAIL") << "\n";
            else
                std::cout << "  circular zero count      " << report.circular_zero_count
                          << " (not asserted for this k)\n";
            std::cout << "  shifted-score relations  "
                      << (report.shifted_violations.empty() ? "PASS" : "FAIL") << " (cases";
            for (auto c : report.shifted_case_counts) std::cout << " " << c;
            std::cout << ")\n"
                      << "verdict: " << (report.ok() ? "PASS" : "FAIL") << "\n";
        }
        return report.ok() ? kExitPass : kExitCounterexample;
    }
    if (a.suite == "embeddings") {
        const auto report = superpat::check_embedding_theorems(a.k);
        const auto gate = g.cyclic_semantics();
        if (g.json_output()) {
            json res = superpat::to_json(report, gate);
            res["grade"] = "theorem";
            res["gate_semantics"] = g.semantics;
            emit_json(g, "check", json{{"suite", a.suite}, {"k", a.k}}, std::move(res),
                      json{{"elapsed_ms", report.elapsed_ms}});
        } else {
            std::cout << "check embeddings k=" << a.k << ": " << report.total << " permutations\n"
                      << "  (a) exact in zz(k,k+1)            "
                      << (report.exact_counterexamples.empty() ? "PASS" : "FAIL") << "\n";
            if (report.cyclic_checked) {
                std::cout << "  (b) cyclic exact [pattern-rot]    "
                          << (report.cyclic_counterexamples_pattern_rotation.empty() ? "PASS"
                                                                                     : "FAIL")
                          << "\n"
                          << "  (b) cyclic exact [word-cyclic]    "
                          << (report.cyclic_counterexamples_word_cyclic.empty() ? "PASS" : "FAIL")
                          << "\n";
            }
            if (report.circular_iso_checked) {
                std::cout << "  (c) order-isomorphic circular     "
                          << (report.circular_iso_counterexamples.empty() ? "PASS" : "FAIL")
                          << "\n";
            }
            std::cout << "verdict: " << (report.ok(gate) ? "PASS" : "FAIL") << "\n";
        }
        return report.ok(gate) ? kExitPass : kExitCounterexample;
    }
    if (a.suite == "claim-zzc") {
        const auto construction = superpat::zzc_permutation(a.k);
        superpat::VerifyOptions options;
        options.workers = g.workers;
        const auto report =
            superpat::verify_circular_superpattern(construction.permutation, a.k, options);
        if (g.json_output()) {
            json res{{"grade", "claim"},
                     {"construction", superpat::to_json(construction)},
                     {"verification", superpat::to_json(report)}};
            emit_json(g, "check", json{{"suite", a.suite}, {"k", a.k}}, std::move(res),
                      json{{"workers", g.workers}, {"elapsed_ms", report.elapsed_ms}});
        } else {
            std::cout << "check claim-zzc k=" << a.k << " (claim-grade)\n"
                      << "  permutation: " << construction.permutation << " (length "
                      << construction.length << ")\n"
                      << "  circular " << a.k << "-superpattern: "
                      << (report.ok() ? "VERIFIED" : "COUNTEREXAMPLE") << " ("
                      << *report.total_classes << " classes)\n";
            for (const auto& f : report.failures) std::cout << "  missing class: " << f << "\n";
            std::cout << "verdict: " << (report.ok() ? "PASS" : "FAIL") << "\n";
        }
        return report.ok() ? kExitPass : kExitCounterexample;
    }
    throw std::invalid_argument("unknown suite: " + a.suite);
}

// ---------------------------------------------------------------- plot ----

struct PlotArgs {
    int m = 0;
    int q = 0;
    std::string word;
    std::string perm;
    std::string mark;
    std::string format = "text";
    std::string output;
};

std::vector<int> plot_points(const PlotArgs& a, int& height) {
    int sources = 0;
    if (a.m > 0 || a.q > 0) ++sources;
    if (!a.word.empty()) ++sources;
    if (!a.perm.empty()) ++sources;
    if (sources != 1)
        throw std::invalid_argument("plot needs exactly one of --m/--q, --word, --perm");
    std::vector<int> values;
    if (a.m > 0 || a.q > 0) {
        values = superpat::zigzag_word(a.m, a.q).letters();
        height = a.q;
    } else if (!a.word.empty()) {
        values = superpat::Word::from_letters(superpat::parse_int_line(a.word)).letters();
        if (values.empty()) throw std::invalid_argument("empty word");
        height = *std::max_element(values.begin(), values.end());
    } else {
        const superpat::Permutation p(superpat::parse_int_line(a.perm));
        values = p.entries();
        height = p.size();
    }
    return values;
}

std::vector<char> mark_table(const std::vector<int>& values, const std::vector<int>& marks) {
    std::vector<char> marked(values.size() + 1, 0);
    for (int m : marks) {
        if (m < 1 || m > static_cast<int>(values.size()))
            throw std::invalid_argument("mark position out of range: " + std::to_string(m));
        marked[m] = 1;
    }
    return marked;
}

std::string render_text_grid(const std::vector<int>& values, int height,
                             const std::vector<int>& marks) {
    const auto marked = mark_table(values, marks);
    int digits = 1;
    for (int t = std::max(height, static_cast<int>(values.size())); t >= 10; t /= 10) ++digits;
    const int cell = digits + (marks.empty() ? 0 : 2);

    auto pad = [&](const std::string& s) {
        return std::string(cell - std::min<size_t>(cell, s.size()), ' ') + s;
    };
    std::ostringstream out;
    for (int level = height; level >= 1; --level) {
        out << pad(std::to_string(level)) << " |";
        for (size_t i = 0; i < values.size(); ++i) {
            std::string cell_text = ".";
            if (values[i] == level) {
                cell_text = std::to_string(values[i]);
                if (marked[i + 1]) cell_text = "(" + cell_text + ")";
            }
            out << ' ' << pad(cell_text);
        }
        out << "\n";
    }
    out << std::string(cell, ' ') << " +" << std::string(values.size() * (cell + 1), '-') << "\n"
        << std::string(cell, ' ') << " ";
    for (size_t i = 0; i < values.size(); ++i) out << ' ' << pad(std::to_string(i + 1));
    out << "\n";
    return out.str();
}

std::string render_svg(const std::vector<int>& values, int height, const std::vector<int>& marks) {
    const auto marked = mark_table(values, marks);
    const int step = 28;
    const int width = (static_cast<int>(values.size()) + 1) * step;
    const int h = (height + 1) * step;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << h
        << "\">\n";
    for (size_t i = 0; i < values.size(); ++i) {
        const int cx = static_cast<int>(i + 1) * step;
        const int cy = h - values[i] * step;
        if (marked[i + 1])
            out << "  <circle cx=\"" << cx << "\" cy=\"" << cy - 5
                << "\" r=\"11\" fill=\"none\" stroke=\"red\"/>\n";
        out << "  <text x=\"" << cx << "\" y=\"" << cy << "\" text-anchor=\"middle\">" << values[i]
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

int run_plot(const GlobalOptions& g, const PlotArgs& a) {
    int height = 0;
    const auto values = plot_points(a, height);
    std::vector<int> marks;
    if (!a.mark.empty()) marks = superpat::parse_int_line(a.mark);

    std::string rendered;
    if (a.format == "text") rendered = render_text_grid(values, height, marks);
    else if (a.format == "svg") rendered = render_svg(values, height, marks);
    else throw std::invalid_argument("unknown plot format: " + a.format);

    if (a.output.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(a.output);
        if (!out) throw std::invalid_argument("cannot write output path: " + a.output);
        out << rendered;
        out.flush();
        if (!out.good()) throw std::invalid_argument("write failed: " + a.output);
    }
    (void)g;
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Superpattern toolkit: zigzag words, circular superpattern constructions,\n"
                 "parity scores and exhaustive verification"};
    app.require_subcommand(1);

    GlobalOptions g;
    apply_env_overrides(g);

    GenArgs gen_args;
    ConstructArgs construct_args;
    ScoreArgs score_args;
    VerifyArgs verify_args;
    SearchArgs search_args;
    CheckArgs check_args;
    PlotArgs plot_args;

    auto add_global = [&](CLI::App* sub) {
        sub->add_option("--output", g.output, "Output format")
            ->check(CLI::IsMember({"plain", "json"}));
        sub->add_flag("--canonical", g.canonical,
                      "JSON output with the run-dependent runtime section omitted");
        sub->add_option("--workers", g.workers, "Worker threads (0 = auto)");
        sub->add_option("--budget-nodes", g.budget_nodes, "Search node budget (-1 = unlimited)");
        sub->add_option("--budget-seconds", g.budget_seconds,
                        "Search wall-clock budget (-1 = unlimited)");
        sub->add_option("--cyclic-semantics", g.semantics, "Cyclic containment semantics")
            ->check(CLI::IsMember({"pattern-rotation", "word-cyclic"}));
    };

    auto* gen = app.add_subcommand("gen", "Print the zigzag word zz(m,q)");
    gen->add_option("--m", gen_args.m, "Number of runs")->required();
    gen->add_option("--q", gen_args.q, "Alphabet width")->required();
    add_global(gen);

    auto* construct = app.add_subcommand("construct", "Build a superpattern construction");
    construct->add_option("--method", construct_args.method, "ev | circ-from-linear | zzc")
        ->required()
        ->check(CLI::IsMember({"ev", "circ-from-linear", "zzc"}));
    construct->add_option("--k", construct_args.k, "Target pattern length")->required();
    add_global(construct);

    auto* score = app.add_subcommand("score", "Score a sequence of distinct positive integers");
    score->add_option("--kind", score_args.kind, "linear | circular | shifted")
        ->required()
        ->check(CLI::IsMember({"linear", "circular", "shifted"}));
    score->add_option("values", score_args.values, "Sequence values");
    score->add_option("--input", score_args.input, "File with one sequence per line");
    add_global(score);

    auto* verify = app.add_subcommand("verify", "Verify a (circular) superpattern exhaustively");
    verify->add_option("--mode", verify_args.mode, "linear | circular")
        ->required()
        ->check(CLI::IsMember({"linear", "circular"}));
    verify->add_option("--k", verify_args.k, "Pattern length")->required();
    verify->add_option("values", verify_args.values, "Host permutation");
    verify->add_option("--input", verify_args.input, "File with one host per line");
    verify->add_flag("--no-witnesses", verify_args.no_witnesses, "Skip witness collection");
    add_global(verify);

    auto* search = app.add_subcommand("search", "Minimal superpattern length by exhaustive search");
    search->add_option("--mode", search_args.mode, "linear | circular")
        ->required()
        ->check(CLI::IsMember({"linear", "circular"}));
    search->add_option("--k", search_args.k, "Pattern length")->required();
    search->add_option("--n-limit", search_args.n_limit,
                       "Largest host length to try (-1 = construction bound)");
    search->add_flag("--allow-large", search_args.allow_large, "Lift the default k guardrails");
    add_global(search);

    auto* check = app.add_subcommand("check", "Run a theorem or claim suite");
    check->add_option("--suite", check_args.suite, "identities | embeddings | claim-zzc")
        ->required()
        ->check(CLI::IsMember({"identities", "embeddings", "claim-zzc"}));
    check->add_option("--k", check_args.k, "Pattern length")->required();
    add_global(check);

    auto* plot = app.add_subcommand("plot", "Render a word or permutation as a point grid");
    plot->add_option("--m", plot_args.m, "Zigzag runs (with --q)");
    plot->add_option("--q", plot_args.q, "Zigzag alphabet width (with --m)");
    plot->add_option("--word", plot_args.word, "Word letters, e.g. \"1 3 4 2 1 3\"");
    plot->add_option("--perm", plot_args.perm, "Permutation entries");
    plot->add_option("--mark", plot_args.mark, "1-based positions to highlight");
    plot->add_option("--format", plot_args.format, "text | svg")
        ->check(CLI::IsMember({"text", "svg"}));
    plot->add_option("--output", plot_args.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(g, gen_args);
        if (construct->parsed()) return run_construct(g, construct_args);
        if (score->parsed()) return run_score(g, score_args);
        if (verify->parsed()) return run_verify(g, verify_args);
        if (search->parsed()) return run_search(g, search_args);
        if (check->parsed()) return run_check(g, check_args);
        if (plot->parsed()) return run_plot(g, plot_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
