#include <bit>
#include <unordered_map>

#include "gramlab/compressors.hpp"

namespace gramlab {

namespace {

class Bisector {
public:
    explicit Bisector(const Word& w) : m_word(w) {}

    Token build(std::size_t lo, std::size_t len) {
        if (len == 1) return T(m_word[lo]);
        // |w1| = 2^j with 2^j < |w| <= 2^(j+1)
        const std::size_t half = std::bit_floor(len - 1);
        Token left = build(lo, half);
        Token right = build(lo + half, len - half);
        const std::uint64_t key = (std::uint64_t{left.raw()} << 32) | right.raw();
        auto [it, inserted] = m_memo.try_emplace(key, m_next);
        if (inserted) {
            m_rules[m_next] = Rhs{left, right};
            ++m_next;
        }
        return N(it->second);
    }

    Slp finish(Token top) {
        return canonicalize(Slp(top.id(), std::move(m_rules)));
    }

private:
    const Word& m_word;
    std::unordered_map<std::uint64_t, nt_t> m_memo;
    std::map<nt_t, Rhs> m_rules;
    nt_t m_next = 0;
};

} // namespace

Slp bisection(const Word& w) {
    if (w.empty()) throw GrammarError(Errc::empty_word, "bisection of the empty word");
    if (w.size() == 1) return trivial(w);
    Bisector b(w);
    Token top = b.build(0, w.size());
    return b.finish(top);
}

} // namespace gramlab
