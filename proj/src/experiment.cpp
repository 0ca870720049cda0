#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <tuple>

#include <omp.h>

#include "json.hpp"

#include "gramlab/experiment.hpp"

namespace gramlab::experiment {

using families::Family;

const char* const csv_header =
    "family,k,m,n,compressor,variant,slp_size,witness_size,factor_lb,ratio_vs_witness,normalized";

double growth_law(Family f, double n) {
    const double l = std::log2(n);
    switch (f) {
    case Family::bisection:
    case Family::bisection_binary: return std::sqrt(n / l);
    case Family::lz78: return std::pow(n / l, 2.0 / 3.0);
    case Family::repair: return l / std::log2(l);
    case Family::incompressible: break;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::uint64_t predicted_length(Family f, const Instance& inst) {
    const std::uint64_t k = inst.k;
    switch (f) {
    case Family::bisection:
    case Family::bisection_binary: {
        const std::uint64_t m = families::bisection_m(inst.k);
        const std::uint64_t c = families::ceil_log2(k);
        const std::uint64_t len = (m + 1) * k * (m + c);
        return f == Family::bisection ? len : 2 * len;
    }
    case Family::lz78: {
        if (!inst.m) throw GrammarError(Errc::precondition, "lz78 instances need m");
        const std::uint64_t m = *inst.m;
        const std::uint64_t u = k * (m * (k + 2 * m + 2) + 2 * (k + m + 1)) + k;
        const std::uint64_t v = k * k * (m * (m + 1) / 2 + m * k);
        return k * (k + 1) / 2 + m * (2 * m + 1) + u + v;
    }
    case Family::repair: return families::repair_word_length(inst.k);
    case Family::incompressible: return 2 * k * k + 2 * k + 1;
    }
    return 0;
}

families::FamilyInstance make_instance(Family f, const Instance& inst) {
    switch (f) {
    case Family::bisection: return families::bisection_hard(inst.k);
    case Family::bisection_binary: return families::bisection_hard_binary(inst.k);
    case Family::lz78:
        if (!inst.m) throw GrammarError(Errc::precondition, "lz78 instances need m");
        return families::lz78_hard(*inst.m, inst.k);
    case Family::repair: return families::repair_hard(inst.k);
    case Family::incompressible: return families::incompressible_word(inst.k);
    }
    throw GrammarError(Errc::precondition, "unknown family");
}

std::vector<RatioReport> measure(const families::FamilyInstance& inst, const std::vector<Algorithm>& compressors) {
    std::vector<RatioReport> rows;
    const std::size_t lb = distinct_factor_lower_bound(inst.word, 8);
    const double law = growth_law(inst.family, static_cast<double>(inst.word.size()));
    for (auto a : compressors) {
        RatioReport r;
        r.family = families::to_string(inst.family);
        r.k = inst.k;
        r.m = inst.m;
        r.n = inst.word.size();
        if (a == Algorithm::lz78) {
            auto f = lz78_factorize(inst.word);
            r.slp_size = lz78(f).size();
            if (inst.family == Family::lz78) {
                r.lz78_factors = f.nonempty_count();
                r.predicted_factors = inst.predicted.factor_count;
            }
        } else {
            r.slp_size = run_compressor(a, inst.word).size();
        }
        r.compressor = a == Algorithm::repair_digram ? "repair" : to_string(a);
        if (a == Algorithm::repair) r.variant = "maximal";
        if (a == Algorithm::repair_digram) r.variant = "digram";
        r.witness_size = inst.witness.size();
        r.factor_lb = lb;
        r.ratio_vs_witness = static_cast<double>(r.slp_size) / static_cast<double>(r.witness_size);
        r.normalized = r.ratio_vs_witness / law;
        rows.push_back(std::move(r));
    }
    return rows;
}

Result run(const Config& cfg) {
    Result result;
    std::vector<Instance> todo;
    for (const auto& inst : cfg.grid) {
        const auto len = predicted_length(cfg.family, inst);
        if (len > cfg.length_cap) {
            std::string line = std::string(families::to_string(cfg.family)) + " k=" + std::to_string(inst.k);
            if (inst.m) line += " m=" + std::to_string(*inst.m);
            line += ": length " + std::to_string(len) + " exceeds cap " + std::to_string(cfg.length_cap);
            result.truncated.push_back(std::move(line));
        } else {
            todo.push_back(inst);
        }
    }

    std::vector<std::vector<RatioReport>> per(todo.size());
    std::vector<std::string> errors(todo.size());
    const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < todo.size(); ++i) {
        try {
            per[i] = measure(make_instance(cfg.family, todo[i]), cfg.compressors);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors) {
        if (!e.empty()) throw GrammarError(Errc::precondition, "experiment instance failed: " + e);
    }
    for (auto& rows : per) {
        for (auto& r : rows) result.rows.push_back(std::move(r));
    }
    std::sort(result.rows.begin(), result.rows.end(), [](const RatioReport& a, const RatioReport& b) {
        return std::tie(a.family, a.k, a.m, a.compressor, a.variant) <
               std::tie(b.family, b.k, b.m, b.compressor, b.variant);
    });
    return result;
}

namespace {

std::string fmt(double v) {
    if (std::isnan(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

void write_csv(std::ostream& out, const Result& r) {
    out << csv_header << '\n';
    for (const auto& row : r.rows) {
        out << row.family << ',' << row.k << ',' << (row.m ? std::to_string(*row.m) : "") << ',' << row.n << ','
            << row.compressor << ',' << row.variant << ',' << row.slp_size << ',' << row.witness_size << ','
            << row.factor_lb << ',' << fmt(row.ratio_vs_witness) << ',' << fmt(row.normalized) << '\n';
    }
    for (const auto& t : r.truncated) out << "# truncated: " << t << '\n';
}

void write_json(std::ostream& out, const Result& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json j{{"family", row.family},
                         {"k", row.k},
                         {"m", row.m ? nlohmann::json(*row.m) : nlohmann::json(nullptr)},
                         {"n", row.n},
                         {"compressor", row.compressor},
                         {"variant", row.variant},
                         {"slp_size", row.slp_size},
                         {"witness_size", row.witness_size},
                         {"factor_lb", row.factor_lb},
                         {"ratio_vs_witness", row.ratio_vs_witness},
                         {"normalized", std::isnan(row.normalized) ? nlohmann::json(nullptr)
                                                                   : nlohmann::json(row.normalized)}};
        if (row.lz78_factors) {
            j["lz78_factors"] = *row.lz78_factors;
            j["predicted_factors"] = *row.predicted_factors;
        }
        rows.push_back(std::move(j));
    }
    nlohmann::json doc{{"rows", rows}, {"truncated", r.truncated}};
    out << doc.dump(2) << '\n';
}

} // namespace gramlab::experiment
