#ifndef LDIAG_ZETA_HPP
#define LDIAG_ZETA_HPP

#include <map>
#include <utility>
#include <vector>

#include "ldiag/words.hpp"

namespace ldiag {

// Nested sum over strictly decreasing index chains N >= i1 > i2 > ... > in >= 1
// of prod_k sigma_k^{i_k} / i_k^{s_k}.  Converges (as N -> infinity) exactly
// when s1 >= 2 or sigma1 = -1.
struct ZetaWord {
    std::vector<unsigned> s;  // exponents, s_k >= 1
    std::vector<int> sigma;   // signs, each +1 or -1
    bool operator==(const ZetaWord&) const = default;
};

ZetaWord make_zeta_word(std::vector<unsigned> s, std::vector<int> sigma);
bool is_convergent(const ZetaWord& z);

// Degree sequence of a code, all signs +1: letter i contributes s_i = |m_i|.
// Throws on the empty code.
ZetaWord zeta_word_of(const Word& code);

struct ZetaValue {
    double value = 0;
    unsigned long long truncation = 0;
    // Bound on |exact - value|.  Rigorous whenever s1 >= 2 (any signs);
    // for alternating words with s1 = 1 it is the same formula used as an
    // estimate only (no proven bound is attempted there).
    double tail_bound = 0;
};

// Truncated evaluation by one dynamic-programming sweep per nesting level,
// O(n * N) time.  The outermost level is accumulated in descending index
// order so the small terms are added first.  Throws on divergent words and
// when N is smaller than the chain length.
ZetaValue zeta_eval(const ZetaWord& z, unsigned long long N);

// zeta_eval with a cache keyed by the (s, sigma) sequences; repeated words
// across a family of identities are only evaluated once.
class ZetaEvaluator {
public:
    explicit ZetaEvaluator(unsigned long long N) : N_(N) {}
    unsigned long long truncation() const { return N_; }
    const ZetaValue& eval(const ZetaWord& z);

private:
    unsigned long long N_;
    std::map<std::pair<std::vector<unsigned>, std::vector<int>>, ZetaValue> cache_;
};

// Numerical check of the multiplication rule: the product of the values of
// two convergent codes equals the value sum of their unshifted twist product
// at qc = qs = 1 (all signs positive).  Passes when the two sides agree
// within tol at truncation N.
bool stuffle_check(const Word& w1, const Word& w2, unsigned long long N, double tol);
bool stuffle_check(const Word& w1, const Word& w2, ZetaEvaluator& ev, double tol);

}  // namespace ldiag

#endif
