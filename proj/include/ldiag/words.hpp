#ifndef LDIAG_WORDS_HPP
#define LDIAG_WORDS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ldiag {

// Commutative monomial in variables x1, x2, ...  Stored as a sorted vector of
// (variable index, exponent) pairs with all exponents positive, so structural
// equality is monomial equality.  The empty vector is the unit monomial; it
// never appears as a letter of a diagram code but is allowed transiently.
class Monomial {
public:
    using Factor = std::pair<unsigned, unsigned>;  // (variable >= 1, exponent >= 1)

    Monomial() = default;
    // Sorts, merges repeated variables, validates indices/exponents >= 1.
    explicit Monomial(std::vector<Factor> factors);
    static Monomial var(unsigned index, unsigned exponent = 1);

    bool is_unit() const { return f_.empty(); }
    unsigned long long degree() const;
    unsigned min_var() const { return f_.empty() ? 0u : f_.front().first; }
    unsigned max_var() const { return f_.empty() ? 0u : f_.back().first; }
    unsigned exponent_of(unsigned var) const;
    const std::vector<Factor>& factors() const { return f_; }

    // Superposition: exponents of like variables add.
    Monomial times(const Monomial& o) const;
    // Image under the alphabet shift x_i -> x_{i+p}.
    Monomial translated(unsigned p) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> f_;
};

// Entrywise order used everywhere a monomial order is needed: lexicographic
// on the sorted factor list, so x1 < x1*x2 < x1^2 < x2.
bool monomial_less(const Monomial& a, const Monomial& b);

// A word of monomials.  Codes of diagrams are exactly the compact words.
using Word = std::vector<Monomial>;

unsigned long long weight(const Word& w);
// Largest / smallest variable index occurring in w; 0 when w uses none.
unsigned max_index(const Word& w);
unsigned min_index(const Word& w);
// Sorted list of the variable indices occurring in w.
std::vector<unsigned> index_alphabet(const Word& w);
// True when the indices of w are exactly {1, ..., k} with no holes.
bool is_compact(const Word& w);
// Re-indexes the variables by the unique strictly increasing map onto
// {1, ..., k}.  Idempotent; the identity on compact words.
Word compact(const Word& w);
// Applies x_i -> x_{i+p} to every letter.
Word translate(const Word& w, unsigned p);
// w1 followed by w2 with w2's variables shifted past those of w1.  Associative
// with the empty word as unit; compact words are closed under it.
Word shifted_concat(const Word& w1, const Word& w2);
// Overlap between the alphabets of w[1..t] and w[t+1..]:
//   max(Ind(prefix)) - min(Ind(suffix)) + 1, clamped at 0.
// Requires 1 <= t < w.size().  Cut points of a code are the zeros.
unsigned overlap_gauge(const Word& w, std::size_t t);
// Splits a compact word at the zeros of the gauge and compacts each piece.
// The pieces are the irreducible codes whose shifted concatenation gives w
// back; the factorization is unique.  Requires w compact.
std::vector<Word> factorize(const Word& w);
// Letters at the given 1-based positions, in increasing position order.
// Positions must be in range and pairwise distinct (any input order).
Word subword(const Word& w, std::vector<unsigned> positions);

// Canonical order on words: heavier-than-longer first (length descending),
// then entrywise by monomial_less.  Used for printing and as map order.
bool word_less(const Word& a, const Word& b);
struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

// Text forms: "x1^2*x5" for monomials, "[x1^2*x5, x2]" for words.
std::string to_string(const Monomial& m);
std::string to_string(const Word& w);
Monomial parse_monomial(const std::string& text);
Word parse_word(const std::string& text);

}  // namespace ldiag

#endif
