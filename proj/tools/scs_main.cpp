#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "scs/errors.hpp"
#include "scs/io.hpp"
#include "scs/normalizer.hpp"
#include "scs/reduction.hpp"
#include "scs/solver.hpp"
#include "scs/verify.hpp"
#include "scs/word.hpp"

namespace {

using ojson = nlohmann::ordered_json;

/// Uniform command output: "key: value" lines, or one JSON object with --json.
class Report {
  public:
    explicit Report(bool as_json) : as_json_(as_json) {}

    void kv(const std::string& key, const std::string& value) {
        if (as_json_) {
            j_[key] = value;
        } else {
            std::cout << key << ": " << value << "\n";
        }
    }
    void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
    void kv(const std::string& key, std::uint64_t value) {
        if (as_json_) {
            j_[key] = value;
        } else {
            std::cout << key << ": " << value << "\n";
        }
    }
    void kv(const std::string& key, bool value) {
        if (as_json_) {
            j_[key] = value;
        } else {
            std::cout << key << ": " << (value ? "true" : "false") << "\n";
        }
    }
    void kv(const std::string& key, double value) {
        if (as_json_) {
            j_[key] = value;
        } else {
            std::cout << key << ": " << value << "\n";
        }
    }
    void kv(const std::string& key, const std::vector<std::size_t>& values) {
        if (as_json_) {
            j_[key] = values;
        } else {
            std::cout << key << ":";
            for (std::size_t v : values) std::cout << ' ' << v;
            std::cout << "\n";
        }
    }

    void finish() {
        if (as_json_) std::cout << j_.dump(2) << "\n";
    }

  private:
    bool as_json_;
    ojson j_ = ojson::object();
};

std::string hex_digest(std::uint64_t d) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(d));
    return buf;
}

scs::Word read_single_word_file(const std::string& path) {
    const std::vector<scs::Word> words = scs::read_words_file(path);
    if (words.size() != 1) {
        throw scs::ParseError(path + ": expected exactly one word, found " +
                              std::to_string(words.size()));
    }
    return words.front();
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto b = token.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = token.find_last_not_of(" \t");
        token = token.substr(b, e - b + 1);
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw scs::ParseError("invalid vertex \"" + token + "\" in cover list");
        }
    }
    return out;
}

std::string join_vertices(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(vs[i]);
    }
    return out;
}

int cmd_solve(const std::string& words_path, const std::string& mode, std::uint64_t max_states,
              std::uint64_t max_len, Report& report) {
    const std::vector<scs::Word> words = scs::read_words_file(words_path);
    report.kv("input", words_path);
    report.kv("input_digest", hex_digest(scs::file_digest(words_path)));
    report.kv("words", static_cast<std::uint64_t>(words.size()));
    report.kv("mode", mode);

    scs::SolverResult result;
    if (mode == "exact") {
        result = scs::scs_exact(words, scs::SearchBudget{max_states, max_len});
    } else if (mode == "pairwise") {
        if (words.size() != 2)
            throw scs::PreconditionError("pairwise mode needs exactly two words, got " +
                                         std::to_string(words.size()));
        result = scs::scs_pairwise(words[0], words[1]);
    } else {
        result = scs::scs_majority_merge(words);
    }

    report.kv("length", static_cast<std::uint64_t>(result.length));
    report.kv("supersequence", result.supersequence.str());
    report.kv("optimal", result.optimal);
    report.kv("states_expanded", result.states_expanded);
    report.kv("elapsed_seconds", result.elapsed_seconds);
    report.finish();

    // Exact mode promises a proof of optimality; say so in the exit status
    // when the budget ran out before one was found.
    if (mode == "exact" && !result.optimal) return 1;
    return 0;
}

int cmd_check(const std::string& words_path, const scs::Word& sup, bool trace, Report& report) {
    const std::vector<scs::Word> words = scs::read_words_file(words_path);
    report.kv("input", words_path);
    report.kv("input_digest", hex_digest(scs::file_digest(words_path)));
    report.kv("supersequence_length", static_cast<std::uint64_t>(sup.size()));

    std::size_t covered = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto embedding = scs::leftmost_embedding(words[i], sup);
        if (embedding) ++covered;
        report.kv("word_" + std::to_string(i + 1) + "_covered", embedding.has_value());
        if (trace && embedding) {
            report.kv("word_" + std::to_string(i + 1) + "_embedding", embedding->targets);
        }
    }
    const bool ok = covered == words.size();
    report.kv("covered", static_cast<std::uint64_t>(covered));
    report.kv("of", static_cast<std::uint64_t>(words.size()));
    report.kv("ok", ok);
    report.finish();
    return ok ? 0 : 1;
}

int cmd_normalize(const std::string& words_path, const scs::Word& sup, bool trace,
                  const std::string& out_path, Report& report) {
    const std::vector<scs::Word> words = scs::read_words_file(words_path);
    scs::RewriteTrace rewrites;
    const scs::Word result = scs::normalize(sup, words, &rewrites);

    report.kv("input", words_path);
    report.kv("input_digest", hex_digest(scs::file_digest(words_path)));
    report.kv("input_length", static_cast<std::uint64_t>(sup.size()));
    report.kv("output_length", static_cast<std::uint64_t>(result.size()));
    report.kv("steps", static_cast<std::uint64_t>(rewrites.steps.size()));
    if (trace) {
        for (std::size_t i = 0; i < rewrites.steps.size(); ++i) {
            const scs::RewriteStep& s = rewrites.steps[i];
            std::string line = std::string(scs::rule_name(s.rule)) + " at " +
                               std::to_string(s.pos) + ", length " +
                               std::to_string(s.before_len) + " -> " +
                               std::to_string(s.after_len);
            report.kv("step_" + std::to_string(i + 1), line);
        }
    }
    report.kv("output", result.str());
    if (!out_path.empty()) {
        scs::write_words_file(out_path, {result});
        report.kv("out", out_path);
    }
    report.finish();
    return 0;
}

int cmd_reduce(const std::string& graph_path, int k, const std::string& out_path,
               Report& report) {
    const scs::Graph graph = scs::read_graph_file(graph_path);
    const scs::ReductionInstance inst = scs::build_gadgets(graph);
    const std::uint64_t bound = scs::threshold(graph.n, k);

    std::ofstream out(out_path);
    if (!out) throw scs::ParseError(out_path + ": cannot open for writing");
    out << "# reduction of " << graph_path << " (n = " << graph.n << ", m = " << graph.m()
        << ", k = " << k << ")\n";
    out << "# decision threshold: " << bound << "\n";
    out << "# words: " << inst.word_count() << "\n";
    inst.for_each_word([&](std::size_t, const scs::Word& w) { out << w.str() << '\n'; });
    out.close();

    report.kv("graph", graph_path);
    report.kv("graph_digest", hex_digest(scs::file_digest(graph_path)));
    report.kv("n", static_cast<std::uint64_t>(graph.n));
    report.kv("m", static_cast<std::uint64_t>(graph.m()));
    report.kv("k", static_cast<std::uint64_t>(k));
    report.kv("threshold", bound);
    report.kv("word_count", static_cast<std::uint64_t>(inst.word_count()));
    report.kv("out", out_path);
    report.kv("out_digest", hex_digest(scs::file_digest(out_path)));
    report.finish();
    return 0;
}

int cmd_witness(const std::string& graph_path, const std::string& cover_text,
                const std::string& out_path, Report& report) {
    const scs::Graph graph = scs::read_graph_file(graph_path);
    scs::VertexCover cover{parse_vertex_list(cover_text)};
    const scs::Word witness = scs::witness_from_cover(graph, cover);

    report.kv("graph", graph_path);
    report.kv("graph_digest", hex_digest(scs::file_digest(graph_path)));
    report.kv("cover", join_vertices(cover.vertices));
    report.kv("cover_size", static_cast<std::uint64_t>(cover.size()));
    report.kv("witness_length", static_cast<std::uint64_t>(witness.size()));
    report.kv("threshold", scs::threshold(graph.n, static_cast<int>(cover.size())));
    if (out_path.empty()) {
        report.kv("witness", witness.str());
    } else {
        scs::write_words_file(out_path, {witness});
        report.kv("out", out_path);
        report.kv("out_digest", hex_digest(scs::file_digest(out_path)));
    }
    report.finish();
    return 0;
}

int cmd_extract(const std::string& graph_path, const std::string& witness_path, int k,
                Report& report) {
    const scs::Graph graph = scs::read_graph_file(graph_path);
    const scs::Word witness = read_single_word_file(witness_path);
    const scs::VertexCover cover = scs::extract_cover(witness, graph, k);

    report.kv("graph", graph_path);
    report.kv("graph_digest", hex_digest(scs::file_digest(graph_path)));
    report.kv("witness", witness_path);
    report.kv("witness_digest", hex_digest(scs::file_digest(witness_path)));
    report.kv("witness_length", static_cast<std::uint64_t>(witness.size()));
    report.kv("k", static_cast<std::uint64_t>(k));
    report.kv("cover", join_vertices(cover.vertices));
    report.kv("cover_size", static_cast<std::uint64_t>(cover.size()));
    report.finish();
    return 0;
}

int cmd_verify(const std::string& scope, bool verbose, bool as_json) {
    const std::vector<scs::CheckGroup> groups = scs::run_scope(scope);
    bool all_pass = true;

    if (as_json) {
        ojson out = ojson::array();
        for (const scs::CheckGroup& g : groups) {
            ojson jg;
            jg["id"] = g.id;
            jg["title"] = g.title;
            jg["pass"] = g.pass();
            jg["elapsed_seconds"] = g.elapsed_seconds;
            ojson checks = ojson::array();
            for (const scs::CheckResult& c : g.checks) {
                checks.push_back({{"name", c.name},
                                  {"expected", c.expected},
                                  {"observed", c.observed},
                                  {"pass", c.pass}});
            }
            jg["checks"] = std::move(checks);
            out.push_back(std::move(jg));
            all_pass = all_pass && g.pass();
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const scs::CheckGroup& g : groups) {
            const bool pass = g.pass();
            all_pass = all_pass && pass;
            std::printf("[%s] C%d %s (%zu checks, %.2f s)\n", pass ? "PASS" : "FAIL", g.id,
                        g.title.c_str(), g.checks.size(), g.elapsed_seconds);
            for (const scs::CheckResult& c : g.checks) {
                if (verbose || !c.pass) {
                    std::printf("  %s %s: expected %s, observed %s\n", c.pass ? "ok  " : "FAIL",
                                c.name.c_str(), c.expected.c_str(), c.observed.c_str());
                }
            }
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shortest common supersequence toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object instead of key: value lines");

    std::string solve_words, solve_mode = "exact";
    scs::SearchBudget default_budget;
    std::uint64_t solve_states = default_budget.max_states;
    std::uint64_t solve_maxlen = default_budget.max_length;
    auto* solve = app.add_subcommand("solve", "shortest common supersequence of a word set");
    solve->add_option("words", solve_words, "words file")->required()->check(CLI::ExistingFile);
    solve->add_option("--mode", solve_mode, "exact, pairwise, or majority")
        ->check(CLI::IsMember({"exact", "pairwise", "majority"}));
    solve->add_option("--max-states", solve_states, "search budget in expanded states");
    solve->add_option("--max-len", solve_maxlen, "longest solution considered");

    std::string check_words, check_sup, check_sup_file;
    bool check_trace = false;
    auto* check = app.add_subcommand("check", "test a supersequence candidate against a word set");
    check->add_option("words", check_words, "words file")->required()->check(CLI::ExistingFile);
    auto* cs = check->add_option("--sup", check_sup, "candidate word");
    auto* csf = check->add_option("--sup-file", check_sup_file, "file with exactly one word")
                    ->check(CLI::ExistingFile);
    cs->excludes(csf);
    check->add_flag("--trace", check_trace, "print the embedding of every covered word");

    std::string norm_words, norm_sup, norm_sup_file, norm_out;
    bool norm_trace = false;
    auto* norm = app.add_subcommand("normalize", "rewrite a supersequence into 0202/1 form");
    norm->add_option("words", norm_words, "words file")->required()->check(CLI::ExistingFile);
    auto* ns = norm->add_option("--sup", norm_sup, "supersequence to normalize");
    auto* nsf = norm->add_option("--sup-file", norm_sup_file, "file with exactly one word")
                    ->check(CLI::ExistingFile);
    ns->excludes(nsf);
    norm->add_flag("--trace", norm_trace, "print every rewrite step");
    norm->add_option("--out", norm_out, "write the result as a words file");

    std::string reduce_graph, reduce_out;
    int reduce_k = 0;
    auto* reduce = app.add_subcommand("reduce", "build the word set encoding a vertex-cover question");
    reduce->add_option("graph", reduce_graph, "graph file")->required()->check(CLI::ExistingFile);
    reduce->add_option("-k,--k", reduce_k, "cover size bound")->required();
    reduce->add_option("--out", reduce_out, "output words file")->required();

    std::string witness_graph, witness_cover, witness_out;
    auto* witness = app.add_subcommand("witness", "supersequence certifying a vertex cover");
    witness->add_option("graph", witness_graph, "graph file")->required()->check(CLI::ExistingFile);
    witness->add_option("--cover", witness_cover, "comma-separated vertex list, e.g. 1,3");
    witness->add_option("--out", witness_out, "write the witness as a words file");

    std::string extract_graph, extract_witness;
    int extract_k = 0;
    auto* extract = app.add_subcommand("extract", "recover a vertex cover from a supersequence");
    extract->add_option("graph", extract_graph, "graph file")->required()->check(CLI::ExistingFile);
    extract->add_option("witness", extract_witness, "file with exactly one word")
        ->required()
        ->check(CLI::ExistingFile);
    extract->add_option("-k,--k", extract_k, "cover size bound")->required();

    std::string verify_scope = "all";
    bool verify_verbose = false;
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--scope", verify_scope,
                       "intro, family, reduction, normalizer, solver, or all");
    verify->add_flag("-v,--verbose", verify_verbose, "print every check, not only failures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Report report(as_json);
        if (solve->parsed()) {
            return cmd_solve(solve_words, solve_mode, solve_states, solve_maxlen, report);
        }
        if (check->parsed()) {
            if (check_sup.empty() && check_sup_file.empty())
                throw scs::PreconditionError("check: give --sup or --sup-file");
            const scs::Word sup = check_sup_file.empty() ? scs::Word(check_sup)
                                                         : read_single_word_file(check_sup_file);
            return cmd_check(check_words, sup, check_trace, report);
        }
        if (norm->parsed()) {
            if (norm_sup.empty() && norm_sup_file.empty())
                throw scs::PreconditionError("normalize: give --sup or --sup-file");
            const scs::Word sup = norm_sup_file.empty() ? scs::Word(norm_sup)
                                                        : read_single_word_file(norm_sup_file);
            return cmd_normalize(norm_words, sup, norm_trace, norm_out, report);
        }
        if (reduce->parsed()) {
            return cmd_reduce(reduce_graph, reduce_k, reduce_out, report);
        }
        if (witness->parsed()) {
            return cmd_witness(witness_graph, witness_cover, witness_out, report);
        }
        if (extract->parsed()) {
            return cmd_extract(extract_graph, extract_witness, extract_k, report);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_scope, verify_verbose, as_json);
        }
    } catch (const scs::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const scs::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const scs::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
