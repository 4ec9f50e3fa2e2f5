#ifndef LDIAG_ELEMENT_HPP
#define LDIAG_ELEMENT_HPP

#include <map>
#include <utility>

#include "ldiag/coeffpoly.hpp"
#include "ldiag/words.hpp"

namespace ldiag {

// Finite Z[qc,qs]-linear combination of monomial words.  Terms are collected
// in the canonical word order and zero coefficients dropped, so structural
// equality is equality in the free module.  Elements supported on compact
// words are the diagram-algebra elements proper; products enforce that.
class Element {
public:
    Element() = default;  // zero
    static Element unit() { return of(Word{}); }
    static Element of(Word w, CoeffPoly c = CoeffPoly(1));

    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, const CoeffPoly& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { a += b; return a; }
    friend Element operator-(Element a, const Element& b) { a -= b; return a; }
    Element scaled(const CoeffPoly& c) const;

    // Coefficient of w (zero if absent).
    CoeffPoly coeff(const Word& w) const;
    // Substitutes polynomials for qc/qs in every coefficient.
    Element subst(const CoeffPoly& qc_val, const CoeffPoly& qs_val) const;
    bool supports_compact() const;

    const std::map<Word, CoeffPoly, WordLess>& terms() const { return terms_; }
    bool operator==(const Element&) const = default;

private:
    std::map<Word, CoeffPoly, WordLess> terms_;
};

// Ordered pair of words, i.e. a basis tensor of the tensor square.
using WordPair = std::pair<Word, Word>;
struct WordPairLess {
    bool operator()(const WordPair& a, const WordPair& b) const {
        if (word_less(a.first, b.first)) return true;
        if (word_less(b.first, a.first)) return false;
        return word_less(a.second, b.second);
    }
};

// Linear combination of basis tensors; same collection discipline as Element.
class TensorElement {
public:
    TensorElement() = default;
    static TensorElement of(Word left, Word right, CoeffPoly c = CoeffPoly(1));

    bool is_zero() const { return terms_.empty(); }
    void add_term(const WordPair& p, const CoeffPoly& c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { a += b; return a; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { a -= b; return a; }
    TensorElement scaled(const CoeffPoly& c) const;

    CoeffPoly coeff(const WordPair& p) const;
    TensorElement subst(const CoeffPoly& qc_val, const CoeffPoly& qs_val) const;

    const std::map<WordPair, CoeffPoly, WordPairLess>& terms() const { return terms_; }
    bool operator==(const TensorElement&) const = default;

private:
    std::map<WordPair, CoeffPoly, WordPairLess> terms_;
};

}  // namespace ldiag

#endif
