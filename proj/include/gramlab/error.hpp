#pragma once

#include <stdexcept>
#include <string>

namespace gramlab {

enum class Errc {
    invalid_slp,
    cap_exceeded,
    length_overflow,
    empty_word,
    precondition,
    out_of_range,
    parse,
    not_in_image,
    budget_exceeded,
    length_limit,
    round_trip,
};

const char* to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` tells callers what went wrong.
class GrammarError : public std::runtime_error {
public:
    GrammarError(Errc code, const std::string& what)
        : std::runtime_error(what), m_code(code) {}

    Errc code() const noexcept { return m_code; }

private:
    Errc m_code;
};

} // namespace gramlab
