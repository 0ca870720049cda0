#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gramlab/bridge.hpp"
#include "gramlab/compressors.hpp"
#include "gramlab/experiment.hpp"
#include "gramlab/families.hpp"
#include "gramlab/io.hpp"
#include "gramlab/oracle.hpp"
#include "gramlab/reference.hpp"

using namespace gramlab;

namespace {

struct Common {
    std::string format = "char";
    std::size_t length_cap = default_length_cap;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GrammarError(Errc::parse, "cannot write '" + path + "'");
    return out;
}

Algorithm resolve(const std::string& name, const std::string& variant) {
    Algorithm a = parse_algorithm(name);
    if (a == Algorithm::repair) a = repair_algorithm(parse_repair_variant(variant));
    return a;
}

// ---------------------------------------------------------------------------

struct CompressArgs {
    std::string input;
    std::string algorithm = "repair";
    std::string variant = "maximal";
    std::string output;
    std::string trace;
};

int cmd_compress(const CompressArgs& a, const Common& c) {
    auto file = io::load_words(a.input, io::parse_word_format(c.format));
    if (file.words.size() > 1 && (!a.output.empty() || !a.trace.empty())) {
        throw GrammarError(Errc::precondition, "--output and --trace need an input file with a single word");
    }
    const Algorithm alg = resolve(a.algorithm, a.variant);
    int status = 0;
    for (std::size_t i = 0; i < file.words.size(); ++i) {
        const Word& w = file.words[i];
        Slp g;
        RepairTrace trace;
        if (alg == Algorithm::repair || alg == Algorithm::repair_digram) {
            auto r = repair(w, alg == Algorithm::repair ? RepairVariant::maximal_string : RepairVariant::digram);
            g = std::move(r.grammar);
            trace = std::move(r.trace);
        } else {
            g = run_compressor(alg, w);
        }
        // Round trip through the text format before reporting.
        auto back = io::grammar_from_string(io::grammar_to_string(g));
        const bool ok = validate(back.slp).ok() && expand(back.slp, c.length_cap) == w;
        std::cout << "word " << i + 1 << ": n=" << w.size() << " size=" << g.size()
                  << " roundtrip=" << (ok ? "ok" : "MISMATCH") << '\n';
        if (!ok) {
            status = 3;
            continue;
        }
        if (!a.output.empty()) io::save_grammar(a.output, g);
        if (!a.trace.empty()) {
            auto out = open_out(a.trace);
            write_trace_csv(out, trace);
        }
    }
    if (status) std::cerr << "error (round_trip): a grammar did not reproduce its input\n";
    return status;
}

// ---------------------------------------------------------------------------

struct FamilyArgs {
    std::string family;
    std::size_t k = 0;
    std::optional<std::size_t> m;
    std::string word_out;
    std::string grammar_out;
    std::string stats_out;
};

int cmd_family(const FamilyArgs& a, const Common& c) {
    const auto fam = families::parse_family(a.family);
    experiment::Instance inst{a.k, a.m};
    const auto len = experiment::predicted_length(fam, inst);
    if (len > c.length_cap) {
        throw GrammarError(Errc::length_limit,
                           "word length " + std::to_string(len) + " exceeds --length-cap " + std::to_string(c.length_cap));
    }
    auto fi = experiment::make_instance(fam, inst);
    const auto format = io::parse_word_format(c.format);
    if (!a.word_out.empty()) io::save_words(a.word_out, {fi.word}, format, fi.alphabet);
    if (!a.grammar_out.empty()) io::save_grammar(a.grammar_out, fi.witness);

    std::string stats = "family,k,m,n,witness_size,factor_count,block_length,count_asserted\n";
    stats += std::string(families::to_string(fam)) + ',' + std::to_string(fi.k) + ',' +
             (fi.m ? std::to_string(*fi.m) : "") + ',' + std::to_string(fi.word.size()) + ',' +
             std::to_string(fi.witness.size()) + ',' + std::to_string(fi.predicted.factor_count) + ',' +
             std::to_string(fi.predicted.block_length) + ',' + (fi.predicted.count_asserted ? "1" : "0") + '\n';
    if (!a.stats_out.empty()) {
        auto out = open_out(a.stats_out);
        out << stats;
    }
    std::cout << stats;
    if (a.word_out.empty() && fi.word.size() <= 4096) {
        std::cout << (format == io::WordFormat::chars ? to_string(fi.word, fi.alphabet) : to_int_string(fi.word))
                  << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct ExperimentArgs {
    std::string family;
    std::vector<std::size_t> ks;
    std::vector<std::size_t> ms;
    bool m_log = false;
    std::vector<std::string> compressors;
    std::string variant = "maximal";
    std::string csv;
    std::string json;
    int jobs = 0;
};

int cmd_experiment(const ExperimentArgs& a, const Common& c) {
    experiment::Config cfg;
    cfg.family = families::parse_family(a.family);
    cfg.jobs = a.jobs;
    cfg.length_cap = c.length_cap;
    for (auto k : a.ks) {
        if (cfg.family != families::Family::lz78) {
            cfg.grid.push_back({k, std::nullopt});
        } else if (a.m_log) {
            std::size_t m = std::max<std::size_t>(families::ceil_log2(k), 1);
            if (m % 2) ++m;
            cfg.grid.push_back({k, m});
        } else {
            if (a.ms.empty()) throw GrammarError(Errc::precondition, "lz78 experiments need --m or --m-log");
            for (auto m : a.ms) cfg.grid.push_back({k, m});
        }
    }
    std::vector<std::string> names = a.compressors;
    if (names.empty()) {
        switch (cfg.family) {
        case families::Family::bisection:
        case families::Family::bisection_binary: names = {"bisection"}; break;
        case families::Family::lz78: names = {"lz78"}; break;
        case families::Family::repair: names = {"repair"}; break;
        case families::Family::incompressible: names = {"bisection", "lz78", "repair"}; break;
        }
    }
    for (const auto& n : names) cfg.compressors.push_back(resolve(n, a.variant));

    auto result = experiment::run(cfg);
    if (a.csv.empty() || a.csv == "-") {
        experiment::write_csv(std::cout, result);
    } else {
        auto out = open_out(a.csv);
        experiment::write_csv(out, result);
    }
    if (!a.json.empty()) {
        auto out = open_out(a.json);
        experiment::write_json(out, result);
    }
    for (const auto& t : result.truncated) std::cerr << "truncated: " << t << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
    std::string input;
    std::string word;
    bool exact = false;
    std::uint64_t budget = oracle::default_budget;
    std::vector<std::string> compressors{"bisection", "lz78", "repair"};
    std::string csv;
    std::string witness_dir;
    std::optional<std::size_t> prop2_k;
    std::size_t n_max = oracle::prop2_max_length;
    std::optional<std::size_t> cross_validate;
};

int cmd_prop2(const OracleArgs& a) {
    auto rep = oracle::verify_prop2(*a.prop2_k, a.n_max);
    std::cout << "n,words,incompressible,example\n";
    for (const auto& r : rep.rows) {
        std::cout << r.n << ',' << r.words << ',' << r.incompressible << ',';
        for (auto s : r.example) std::cout << s;
        std::cout << '\n';
    }
    std::cout << "# k=" << rep.k << " n_k=" << rep.n_k << " boundary " << (rep.boundary_holds ? "holds" : "FAILS")
              << '\n';
    return rep.boundary_holds ? 0 : 1;
}

int cmd_oracle(const OracleArgs& a, const Common& c) {
    if (a.prop2_k) return cmd_prop2(a);
    if (a.cross_validate) {
        auto chk = oracle::cross_validate_predicate(2, *a.cross_validate);
        std::cout << "words " << chk.words << " mismatches " << chk.mismatches << '\n';
        return chk.mismatches == 0 ? 0 : 1;
    }
    const auto format = io::parse_word_format(c.format);
    io::WordFile file;
    if (!a.word.empty()) {
        std::istringstream in(a.word);
        file = io::read_words(in, format);
    } else if (!a.input.empty()) {
        file = io::load_words(a.input, format);
    } else {
        throw GrammarError(Errc::precondition, "oracle needs an input file or --word");
    }
    std::vector<Algorithm> algs;
    for (const auto& n : a.compressors) algs.push_back(parse_algorithm(n));

    std::ostringstream rows;
    rows << "word,lower,upper,exact,witness\n";
    for (std::size_t i = 0; i < file.words.size(); ++i) {
        const Word& w = file.words[i];
        std::optional<std::uint64_t> budget;
        if (a.exact) budget = a.budget;
        auto b = oracle::g_bounds(w, algs, nullptr, budget);
        std::string witness_path;
        if (!a.witness_dir.empty()) {
            std::filesystem::create_directories(a.witness_dir);
            witness_path = (std::filesystem::path(a.witness_dir) / ("witness_" + std::to_string(i + 1) + ".gram")).string();
            io::save_grammar(witness_path, b.upper_witness);
        }
        rows << (format == io::WordFormat::chars ? to_string(w, file.alphabet) : to_int_string(w)) << ',' << b.lower
             << ',' << b.upper << ',' << (b.exact ? std::to_string(*b.exact) : "") << ',' << witness_path << '\n';
    }
    if (a.csv.empty() || a.csv == "-") {
        std::cout << rows.str();
    } else {
        auto out = open_out(a.csv);
        out << rows.str();
    }
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& only, bool list) {
    if (list) {
        for (const auto& n : reference::check_names()) std::cout << n << '\n';
        return 0;
    }
    int failed = 0;
    for (const auto& r : reference::run_checks(only)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) std::cout << ": " << r.detail;
        std::cout << '\n';
        failed += r.passed ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " check(s) failed" : std::string("all checks passed")) << '\n';
    return failed ? 1 : 0;
}

// ---------------------------------------------------------------------------

int cmd_encode(const std::string& input, const std::string& output) {
    auto file = io::load_grammar(input);
    require_valid(file.slp);
    std::vector<symbol_t> remap = terminals_used(file.slp);
    std::vector<symbol_t> dense(remap.empty() ? 0 : remap.back() + 1, 0);
    for (std::size_t i = 0; i < remap.size(); ++i) dense[remap[i]] = static_cast<symbol_t>(i);
    Slp g = rename_terminals(prune(file.slp), dense);
    if (!file.remap.empty()) {
        for (auto& r : remap) r = file.remap.at(r);
    }
    Slp b = bridge::encode_slp(g, remap.size());
    std::cout << "k=" << remap.size() << " size " << g.size() << " -> " << b.size() << '\n';
    if (!output.empty()) io::save_grammar(output, b, remap);
    return 0;
}

int cmd_decode(const std::string& input, const std::string& output, std::optional<std::size_t> k) {
    auto file = io::load_grammar(input);
    std::size_t kk = k ? *k : file.remap.size();
    if (kk == 0) throw GrammarError(Errc::precondition, "decode needs map lines in the grammar file or --k");
    Slp g = bridge::decode_slp(file.slp, kk);
    if (!file.remap.empty()) g = rename_terminals(g, file.remap);
    std::cout << "k=" << kk << " size " << file.slp.size() << " -> " << g.size() << '\n';
    if (!output.empty()) io::save_grammar(output, g);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gramlab: grammar-based compression laboratory"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "word format")->check(CLI::IsMember({"char", "int"}));
    app.add_option("--length-cap", common.length_cap, "largest word length to build or expand");

    CompressArgs ca;
    auto* compress = app.add_subcommand("compress", "compress the words of a file");
    compress->add_option("input", ca.input, "word file")->required();
    compress->add_option("-a,--algorithm", ca.algorithm)->check(CLI::IsMember({"bisection", "lz78", "repair", "repair-digram"}));
    compress->add_option("--variant", ca.variant)->check(CLI::IsMember({"maximal", "digram"}));
    compress->add_option("-o,--output", ca.output, "grammar file");
    compress->add_option("--trace", ca.trace, "RePair trace CSV");

    FamilyArgs fa;
    auto* family = app.add_subcommand("family", "generate a family word and its witness grammar");
    family->add_option("family", fa.family)->required()->check(
        CLI::IsMember({"bisection", "bisection-binary", "lz78", "repair", "incompressible"}));
    family->add_option("-k", fa.k)->required();
    family->add_option("-m", fa.m);
    family->add_option("--word-out", fa.word_out);
    family->add_option("--grammar-out", fa.grammar_out);
    family->add_option("--stats-out", fa.stats_out);

    ExperimentArgs ea;
    auto* exper = app.add_subcommand("experiment", "ratio experiment over a parameter grid");
    exper->add_option("family", ea.family)->required()->check(
        CLI::IsMember({"bisection", "bisection-binary", "lz78", "repair", "incompressible"}));
    exper->add_option("-k", ea.ks)->required()->delimiter(',');
    exper->add_option("-m", ea.ms)->delimiter(',');
    exper->add_flag("--m-log", ea.m_log, "m = ceil(log2 k) rounded up to even");
    exper->add_option("-c,--compressors", ea.compressors)->delimiter(',');
    exper->add_option("--variant", ea.variant)->check(CLI::IsMember({"maximal", "digram"}));
    exper->add_option("--csv", ea.csv);
    exper->add_option("--json", ea.json);
    exper->add_option("-j,--jobs", ea.jobs);

    OracleArgs oa;
    auto* orc = app.add_subcommand("oracle", "bounds on the smallest grammar size");
    orc->add_option("input", oa.input, "word file");
    orc->add_option("-w,--word", oa.word, "a single word");
    orc->add_flag("--exact", oa.exact, "run the exhaustive search (length <= 13)");
    orc->add_option("--budget", oa.budget);
    orc->add_option("-c,--compressors", oa.compressors)->delimiter(',');
    orc->add_option("--csv", oa.csv);
    orc->add_option("--witness-dir", oa.witness_dir);
    orc->add_option("--prop2", oa.prop2_k, "sweep all words over k in {1,2} letters");
    orc->add_option("--n-max", oa.n_max);
    orc->add_option("--cross-validate", oa.cross_validate, "compare exact search and predicate up to this length");

    std::string only;
    bool list = false;
    auto* verify = app.add_subcommand("verify-paper", "run the worked examples");
    verify->add_option("--only", only);
    verify->add_flag("--list", list);

    std::string enc_in, enc_out;
    auto* encode = app.add_subcommand("encode", "transcode a grammar to the binary alphabet");
    encode->add_option("input", enc_in)->required();
    encode->add_option("-o,--output", enc_out);

    std::string dec_in, dec_out;
    std::optional<std::size_t> dec_k;
    auto* decode = app.add_subcommand("decode", "transcode a binary grammar back");
    decode->add_option("input", dec_in)->required();
    decode->add_option("-o,--output", dec_out);
    decode->add_option("-k", dec_k);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compress) return cmd_compress(ca, common);
        if (*family) return cmd_family(fa, common);
        if (*exper) return cmd_experiment(ea, common);
        if (*orc) return cmd_oracle(oa, common);
        if (*verify) return cmd_verify(only, list);
        if (*encode) return cmd_encode(enc_in, enc_out);
        if (*decode) return cmd_decode(dec_in, dec_out, dec_k);
    } catch (const GrammarError& e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
