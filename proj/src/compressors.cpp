#include "gramlab/compressors.hpp"

namespace gramlab {

const char* to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::bisection: return "bisection";
    case Algorithm::lz78: return "lz78";
    case Algorithm::repair: return "repair";
    case Algorithm::repair_digram: return "repair-digram";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "bisection") return Algorithm::bisection;
    if (name == "lz78") return Algorithm::lz78;
    if (name == "repair") return Algorithm::repair;
    if (name == "repair-digram" || name == "repair_digram") return Algorithm::repair_digram;
    throw GrammarError(Errc::parse, "unknown compressor '" + name + "' (expected bisection, lz78, repair or repair-digram)");
}

Algorithm repair_algorithm(RepairVariant v) noexcept {
    return v == RepairVariant::digram ? Algorithm::repair_digram : Algorithm::repair;
}

Slp run_compressor(Algorithm a, const Word& w) {
    switch (a) {
    case Algorithm::bisection: return bisection(w);
    case Algorithm::lz78: return lz78(w);
    case Algorithm::repair: return repair(w, RepairVariant::maximal_string).grammar;
    case Algorithm::repair_digram: return repair(w, RepairVariant::digram).grammar;
    }
    throw GrammarError(Errc::precondition, "unknown compressor");
}

} // namespace gramlab
