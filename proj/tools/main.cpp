// Copyright 2026 The fibbraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// fibbraid: verify | eval | search | approximate | info
//
// Exit codes: 0 success, 1 verification or convergence failure, 2 usage or
// parse error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fibbraid/approximator.hpp"
#include "fibbraid/gate_analysis.hpp"
#include "fibbraid/identities.hpp"
#include "fibbraid/json_out.hpp"
#include "fibbraid/representation.hpp"
#include "fibbraid/search.hpp"

namespace {

using namespace fibbraid;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Longest word written out letter by letter by --emit-word.
constexpr uint64_t kFlatWordLimit = uint64_t{1} << 20;

int cmd_verify() {
    const auto start = std::chrono::steady_clock::now();
    const VerifyReport report = run_identity_suite();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << report.to_text();
    if (!report.all_passed()) {
        std::cout << "verify: FAILED";
        for (const auto &name : report.failures()) {
            std::cout << " [" << name << "]";
        }
        std::cout << "\n";
        return kFailure;
    }
    std::printf("verify: all identities hold (%.3f s)\n", secs);
    return kOk;
}

int cmd_eval(const std::string &text, int strands, const std::string &backend) {
    BraidWord word;
    try {
        require_supported_strands(strands);
        word = BraidWord::parse(text, strands);
    } catch (const std::invalid_argument &e) {
        std::cerr << "eval: " << e.what() << "\n";
        return kUsage;
    }
    const Representation &rep = standard_representation();
    std::cout << "word: " << (word.empty() ? "(empty)" : word.to_string()) << "\n";
    if (backend == "exact") {
        const ExactMatrix m = rep.evaluate_exact(word);
        std::cout << "matrix (exact, z = exp(i pi/5), s = sqrt(1/phi)):\n" << m.to_symbolic();
        std::cout << "matrix (float):\n" << format_float_matrix(m.to_float());
        if (strands == 6) {
            std::cout << "report: " << classify(m).to_json() << "\n";
        } else {
            std::cout << "report: {\"unitary\":" << (m.is_unitary() ? "true" : "false") << "}\n";
        }
    } else {
        const FloatMatrix m = rep.evaluate_float(word);
        std::cout << "matrix (float):\n" << format_float_matrix(m);
        if (strands == 6) {
            std::cout << "report: " << classify(m).to_json() << "\n";
        } else {
            std::cout << "report: {\"unitarity_residual\":" << format_double(unitarity_residual(m)) << "}\n";
        }
    }
    return kOk;
}

int cmd_search(SearchConfig cfg) {
    const auto start = std::chrono::steady_clock::now();
    const SearchResult result = run_search(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!result.complete) {
        std::fprintf(stderr, "search: stopped after the shard limit; continue with --resume\n");
        return kOk;
    }
    if (cfg.output_path.empty()) {
        write_results(result, std::cout);
    } else {
        std::cout << result.summary.to_json() << "\n";
    }
    std::fprintf(stderr, "search: %llu words, %zu distinct leakage-free gates, %llu entangling, %.1f s\n",
                 static_cast<unsigned long long>(result.summary.total_visited()), result.records.size(),
                 static_cast<unsigned long long>(result.summary.total_entangling()), secs);
    return kOk;
}

void write_trace(const std::string &path, const std::vector<IterationState> &trace) {
    if (path.empty()) {
        return;
    }
    std::ofstream out(path);
    for (const auto &st : trace) {
        out << st.to_json() << "\n";
    }
    if (!out) {
        throw std::runtime_error("cannot write trace file " + path);
    }
}

int cmd_approximate(double tol, size_t max_iter, const std::string &word_path, const std::string &trace_path) {
    CompileOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    CompileResult r;
    try {
        r = compile_entangler(opts);
    } catch (const NonConvergenceError &e) {
        write_trace(trace_path, e.trace);
        std::cerr << "approximate: " << e.what() << "\n";
        return kFailure;
    } catch (const PreconditionError &e) {
        std::cerr << "approximate: " << e.what() << "\n";
        return kFailure;
    }
    write_trace(trace_path, r.trace);
    const IterationState &last = r.trace.back();
    std::cout << "{\"iterations\":" << last.k << ",\"b\":" << format_double(last.b)
              << ",\"theta\":" << format_double(r.theta) << ",\"epsilon\":" << format_double(r.bound.epsilon)
              << ",\"word_len\":" << r.word.length() << ",\"lambda\":[";
    for (size_t i = 0; i < 4; i++) {
        std::cout << (i ? "," : "") << json_string(format_complex(r.lambda[i]));
    }
    std::cout << "],\"entangling_gap\":" << format_double(r.entangling_gap)
              << ",\"diagonal_entangling\":" << (r.diagonal_entangling ? "true" : "false")
              << ",\"report\":" << r.report.to_json() << "}\n";
    std::cout << "gate:\n" << format_float_matrix(r.gate);
    if (!word_path.empty()) {
        std::ofstream out(word_path);
        if (r.word.length() <= kFlatWordLimit) {
            out << r.word.expand().to_string() << "\n";
        } else {
            r.word.write_grammar(out);
        }
        if (!out) {
            throw std::runtime_error("cannot write word file " + word_path);
        }
    }
    const bool ok = r.report.leakage_free && r.diagonal_entangling;
    return ok ? kOk : kFailure;
}

int cmd_info() {
    const Representation &rep = standard_representation();
    std::cout << "fibbraid 0.1.0\n"
              << "field: Q(z)(s), z = exp(i pi/5) with z^4 - z^3 + z^2 - z + 1 = 0, s^2 = 1/phi\n"
              << "R1 = " << rep.data().R1.to_symbolic() << ", Rtau = " << rep.data().Rtau.to_symbolic() << "\n"
              << "F:\n"
              << rep.data().F.to_symbolic()
              << "six-anyon basis: 0 NC, 1 |11>, 2 |1tau>, 3 |tau1>, 4 |tautau>\n"
              << "V = {NC, tautau}, V_perp = {11, 1tau, tau1}\n"
              << "tolerances: leakage " << format_double(kLeakageTolerance) << ", entangling "
              << format_double(kEntanglingTolerance) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fibonacci-anyon braiding gates: exact evaluation, search and compilation"};
    app.require_subcommand(1);

    auto *verify = app.add_subcommand("verify", "Run the exact identity suite");

    auto *eval = app.add_subcommand("eval", "Evaluate a braid word and classify the gate");
    std::vector<std::string> eval_tokens;
    int strands = 6;
    std::string backend = "exact";
    eval->add_option("word", eval_tokens, "Word such as \"3 2 1 -1 2\" (negative letters are inverses)")
        ->required()
        ->allow_extra_args();
    eval->add_option("--strands", strands, "Number of strands")->check(CLI::IsMember({3, 6}));
    eval->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));

    auto *search = app.add_subcommand("search", "Exhaustive search for leakage-free gates");
    SearchConfig cfg;
    bool exact_only = false;
    search->add_option("--max-len", cfg.max_length, "Maximum word length")->required()->check(CLI::Range(1, 16));
    search->add_flag("--exact-only", exact_only, "Skip the float pre-filter");
    search->add_option("--shards", cfg.shards, "Worker threads over first-letter shards")->check(CLI::Range(1, 64));
    search->add_flag("--normalize-commuting", cfg.normalize_commuting,
                     "Skip words with adjacent far-commuting letters out of order");
    search->add_flag("--resume", cfg.resume, "Resume from <out>.ckpt");
    search->add_option("--shard-limit", cfg.shard_limit, "Stop after this many shards and keep the checkpoint");
    search->add_option("--out", cfg.output_path, "JSON-lines output file");

    auto *approximate = app.add_subcommand("approximate", "Compile the leakage-free entangling gate");
    double tol = 1e-10;
    size_t max_iter = 40;
    std::string word_path, trace_path;
    approximate->add_option("--tol", tol, "Stop once the off-diagonal is below this")->check(CLI::PositiveNumber);
    approximate->add_option("--max-iter", max_iter, "Iteration limit");
    approximate->add_option("--emit-word", word_path, "Write the braid word (grammar form if long)");
    approximate->add_option("--trace", trace_path, "Write the convergence trace as JSON lines");

    auto *info = app.add_subcommand("info", "Print representation data and tolerances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify();
        }
        if (eval->parsed()) {
            std::string text;
            for (const auto &t : eval_tokens) {
                text += (text.empty() ? "" : " ") + t;
            }
            return cmd_eval(text, strands, backend);
        }
        if (search->parsed()) {
            cfg.policy = exact_only ? BackendPolicy::ExactOnly : BackendPolicy::FloatFilterThenExact;
            return cmd_search(cfg);
        }
        if (approximate->parsed()) {
            return cmd_approximate(tol, max_iter, word_path, trace_path);
        }
        if (info->parsed()) {
            return cmd_info();
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "fibbraid: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "fibbraid: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
