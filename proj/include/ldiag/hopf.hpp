#ifndef LDIAG_HOPF_HPP
#define LDIAG_HOPF_HPP

#include <string>
#include <vector>

#include "ldiag/deform.hpp"

namespace ldiag {

// Black-spot coproduct on a code: sum over all splittings of the letter
// positions into two complementary sets I, J (2^p terms) of
// compact(w[I]) (x) compact(w[J]).  This is the coproduct of the undeformed
// algebra; it is comultiplicative for the product only at qc = qs = 0.
TensorElement coproduct0(const Word& code);
TensorElement coproduct0(const Element& e);

// Deconcatenation of a code into compacted prefix/suffix pairs: the
// generator value of the qt = 1 coproduct.  Exposed for oracle checks.
TensorElement deconcat(const Word& code);

// The deformed coproduct at fixed parameters.  Values are prescribed on the
// irreducible codes - the free generators of the algebra - as the black-spot
// splitting (qt = 0) or the row deconcatenation with each leg transported
// through the free-generator basis change from the (1,1) endpoint (qt = 1),
// and extended to products as an algebra morphism into the tensor square
// (componentwise products, no braiding).  On a reducible code w = w1...wk the extension is
// computed through the basis change B(w) = w1 * ... * wk = w + (corrections
// with strictly fewer irreducible factors), which pins the value down by
// induction.  At qc = qs = 0 (qt = 0) this collapses to coproduct0, and at
// qc = qs = 1 (qt = 1) to plain deconcatenation, on every code.
// Results are memoized per instance; instances are cheap to create.
class Coproduct {
public:
    explicit Coproduct(DeformParams p) : params_(std::move(p)) {}
    const DeformParams& params() const { return params_; }

    // The Word form hands back a reference into the instance cache; it stays
    // valid for the lifetime of the Coproduct object.
    const TensorElement& operator()(const Word& code) const;
    TensorElement operator()(const Element& e) const;

private:
    TensorElement generator_value(const Word& code) const;
    // Image of a basis code of the (1,1) endpoint algebra under the inverse
    // of the free-generator transport into this algebra's parameters.
    Element pullback(const Word& code) const;
    DeformParams params_;
    mutable std::map<Word, TensorElement, WordLess> cache_;
    mutable std::map<Word, Element, WordLess> pull_cache_;
};

// One-shot conveniences over a fresh Coproduct instance.
TensorElement coproduct(const Word& code, const DeformParams& p);
TensorElement coproduct(const Element& e, const DeformParams& p);
// The qt = 1 coproduct regardless of p.qt (p supplies qc, qs).
TensorElement coproduct1(const Word& code, const DeformParams& p);

// Coefficient of the empty code.
CoeffPoly counit(const Element& e);

// Antipode of the undeformed (qc = qs = 0, qt = 0) Hopf algebra in closed
// form: sum over ordered splittings of the letter positions into r nonempty
// sets of (-1)^r times the shifted concatenation of the compacted pieces.
Element antipode_explicit(const Word& code);

// Antipode at arbitrary parameters via the graded recursion
//   S([]) = [],  S(w) = -w - sum S(w') * w''
// over the reduced coproduct, with the deformed product.  Memoized.
class Antipode {
public:
    explicit Antipode(DeformParams p) : cop_(std::move(p)) {}
    // As with Coproduct, the Word form returns a cache reference.
    const Element& operator()(const Word& code) const;
    Element operator()(const Element& e) const;
    const Coproduct& coproduct() const { return cop_; }

private:
    Coproduct cop_;
    mutable std::map<Word, Element, WordLess> cache_;
};

Element antipode(const Element& e, const DeformParams& p);

// Group-like-up-to-grading primitives: coproduct(w) = w (x) [] + [] (x) w.
// Throws on the empty code (it is group-like, not primitive).
bool is_gpe(const Word& code, const DeformParams& p);

// Maximum number of lines at a single white spot (column sum).
unsigned long long level_of(const Word& code);

// The k-th one-black-spot generator [x1 x2 ... xk]: one row, k columns of
// one line each.  Products of these span the level <= 1 subalgebra.
Word lbell_generator(unsigned k);

// Empirical verification of the bialgebra/Hopf axioms at fixed parameters
// over all codes (and pairs) with at most max_lines lines.
struct AxiomCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample, or a short summary
};
struct HopfReport {
    DeformParams params;
    unsigned max_lines = 0;
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
    std::string str() const;  // one PASS/FAIL line per axiom
};
// bound caps max_lines; symbolic runs get expensive past 4-5 lines.
HopfReport verify_hopf(const DeformParams& p, unsigned max_lines, unsigned bound = 5);

}  // namespace ldiag

#endif
