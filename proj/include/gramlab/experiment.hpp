#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gramlab/compressors.hpp"
#include "gramlab/families.hpp"

namespace gramlab::experiment {

struct RatioReport {
    std::string family;
    std::size_t k = 0;
    std::optional<std::size_t> m;
    std::size_t n = 0;
    std::string compressor;
    /// maximal / digram for RePair, empty otherwise.
    std::string variant;
    std::size_t slp_size = 0;
    std::size_t witness_size = 0;
    std::size_t factor_lb = 0;
    double ratio_vs_witness = 0;
    /// ratio_vs_witness divided by the family's growth law at n; NaN when the family has none.
    double normalized = 0;
    /// lz78 only: nonempty factor count next to its closed form.
    std::optional<std::size_t> lz78_factors;
    std::optional<std::size_t> predicted_factors;
};

/// sqrt(n / log2 n), (n / log2 n)^(2/3), log2 n / log2 log2 n; NaN for incompressible words.
double growth_law(families::Family f, double n);

struct Instance {
    std::size_t k = 0;
    std::optional<std::size_t> m;
};

struct Config {
    families::Family family = families::Family::bisection;
    std::vector<Instance> grid;
    std::vector<Algorithm> compressors;
    /// Instances whose word would be longer are skipped and reported as truncated.
    std::size_t length_cap = std::size_t{1} << 27;
    /// 0 = OpenMP default.
    int jobs = 0;
};

struct Result {
    std::vector<RatioReport> rows;
    /// One line per skipped instance.
    std::vector<std::string> truncated;
};

/// Length of the family word for an instance, computed without building it.
std::uint64_t predicted_length(families::Family f, const Instance& inst);

families::FamilyInstance make_instance(families::Family f, const Instance& inst);

/// Rows for one instance, one per compressor.
std::vector<RatioReport> measure(const families::FamilyInstance& inst, const std::vector<Algorithm>& compressors);

/// Runs every instance of the grid in parallel; rows come back sorted.
Result run(const Config& cfg);

extern const char* const csv_header;

void write_csv(std::ostream& out, const Result& r);
void write_json(std::ostream& out, const Result& r);

} // namespace gramlab::experiment
