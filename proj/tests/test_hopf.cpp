#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldiag/diagrams.hpp"
#include "ldiag/hopf.hpp"

using namespace ldiag;

namespace {

std::vector<Word> codes_up_to(unsigned max_lines) {
    std::vector<Word> out{Word{}};
    for (unsigned n = 1; n <= max_lines; ++n)
        for (const Word& w : enumerate_codes(n)) out.push_back(w);
    return out;
}

TensorElement swap_legs(const TensorElement& t) {
    TensorElement out;
    for (const auto& [pair, c] : t.terms()) out.add_term({pair.second, pair.first}, c);
    return out;
}

// Triple tensors keyed by printed legs; enough structure for coassociativity.
using Triple = std::map<std::string, CoeffPoly>;

void add_triple(Triple& t, const Word& a, const Word& b, const Word& c,
                const CoeffPoly& k) {
    if (k.is_zero()) return;
    CoeffPoly& slot = t[to_string(a) + " " + to_string(b) + " " + to_string(c)];
    slot += k;
    if (slot.is_zero()) t.erase(to_string(a) + " " + to_string(b) + " " + to_string(c));
}

// (eps (x) Id) and (Id (x) eps) contractions of a coproduct value.
Element contract_left(const TensorElement& t) {
    Element out;
    for (const auto& [pair, c] : t.terms())
        if (pair.first.empty()) out.add_term(pair.second, c);
    return out;
}
Element contract_right(const TensorElement& t) {
    Element out;
    for (const auto& [pair, c] : t.terms())
        if (pair.second.empty()) out.add_term(pair.first, c);
    return out;
}

TensorElement tensor(const char* l, const char* r, CoeffPoly c = CoeffPoly(1)) {
    return TensorElement::of(parse_word(l), parse_word(r), c);
}

}  // namespace

TEST_CASE("black-spot coproduct splits letter positions") {
    TensorElement d1 = tensor("[]", "[x1]") + tensor("[x1]", "[]");
    CHECK(coproduct0(parse_word("[x1]")) == d1);

    TensorElement d2 = tensor("[x1, x2]", "[]") + tensor("[x1]", "[x1]", CoeffPoly(2)) +
                       tensor("[]", "[x1, x2]");
    CHECK(coproduct0(parse_word("[x1, x2]")) == d2);

    CHECK(coproduct0(Word{}) == tensor("[]", "[]"));
    CHECK_THROWS_AS(coproduct0(parse_word("[x2]")), std::invalid_argument);
}

TEST_CASE("black-spot coproduct is cocommutative") {
    for (const Word& w : codes_up_to(4)) {
        const TensorElement d = coproduct0(w);
        CHECK(swap_legs(d) == d);
    }
}

TEST_CASE("black-spot coproduct is coassociative") {
    for (const Word& w : codes_up_to(4)) {
        Triple left, right;
        const TensorElement d = coproduct0(w);
        for (const auto& [pair, c] : d.terms()) {
            const TensorElement dl = coproduct0(pair.first);
            for (const auto& [lp, k] : dl.terms())
                add_triple(left, lp.first, lp.second, pair.second, c * k);
            const TensorElement dr = coproduct0(pair.second);
            for (const auto& [rp, k] : dr.terms())
                add_triple(right, pair.first, rp.first, rp.second, c * k);
        }
        CHECK(left == right);
    }
}

TEST_CASE("black-spot coproduct is a morphism at the origin") {
    const DeformParams origin = DeformParams::at(0, 0);
    const std::vector<Word> pool = codes_up_to(3);
    for (const Word& u : pool)
        for (const Word& v : pool)
            CHECK(coproduct0(shifted_concat(u, v)) ==
                  tensor_square_product(coproduct0(u), coproduct0(v), origin));
}

TEST_CASE("deconcatenation coproduct on an irreducible code") {
    const Word w = parse_word("[x2, x1*x2]");
    REQUIRE(factorize(w).size() == 1);
    const TensorElement expect =
        tensor("[]", "[x2, x1*x2]") + tensor("[x1]", "[x1*x2]") + tensor("[x2, x1*x2]", "[]");
    CHECK(deconcat(w) == expect);
    // All three legs are irreducible, so the same value holds at any
    // parameters, not only at the (1,1) endpoint.
    CHECK(coproduct1(w, DeformParams::matrix_quasi()) == expect);
    CHECK(coproduct1(w, DeformParams::symbolic(true)) == expect);

    const TensorElement single = tensor("[]", "[x1]") + tensor("[x1]", "[]");
    CHECK(deconcat(parse_word("[x1]")) == single);
    CHECK_THROWS_AS(deconcat(parse_word("[x2]")), std::invalid_argument);
}

TEST_CASE("deconcatenation extension collapses at the endpoint") {
    // At (1,1) the multiplicative extension over products of irreducibles
    // agrees with plain deconcatenation on every code, not only generators.
    const Coproduct cop(DeformParams::matrix_quasi());
    for (const Word& w : codes_up_to(4)) CHECK(cop(w) == deconcat(w));
}

TEST_CASE("coproduct dispatch by qt") {
    const Word w = parse_word("[x1, x2]");
    CHECK(coproduct(w, DeformParams::at(0, 0, false)) == coproduct0(w));
    CHECK(coproduct(w, DeformParams::at(1, 1, true)) == deconcat(w));

    // Away from the endpoints the extension deforms the middle coefficient.
    const TensorElement sym0 = coproduct(w, DeformParams::symbolic(false));
    CHECK(sym0.coeff({parse_word("[x1]"), parse_word("[x1]")}) ==
          CoeffPoly(2) - CoeffPoly::term(2, 1, 0));
    const TensorElement sym1 = coproduct(w, DeformParams::symbolic(true));
    CHECK(sym1.coeff({parse_word("[x1]"), parse_word("[x1]")}) ==
          CoeffPoly(2) - CoeffPoly::qc());
    CHECK(sym0.coeff({w, Word{}}) == CoeffPoly(1));
    CHECK(sym0.coeff({Word{}, w}) == CoeffPoly(1));
}

TEST_CASE("generator legs are transported through the basis change") {
    // For [x1, x2, x1] the deconcatenation cut at t = 2 has the reducible
    // prefix [x1, x2]; rewriting that leg in free generators leaves
    // correction terms that vanish at the (1,1) endpoint.
    const Word w = parse_word("[x1, x2, x1]");
    REQUIRE(factorize(w).size() == 1);
    const TensorElement sym1 = coproduct(w, DeformParams::symbolic(true));
    CHECK(sym1.coeff({parse_word("[x2, x1]"), parse_word("[x1]")}) ==
          CoeffPoly::qc() - CoeffPoly(1));
    CHECK(sym1.coeff({parse_word("[x1*x2]"), parse_word("[x1]")}) ==
          CoeffPoly::qs() - CoeffPoly(1));
    CHECK(apply_params(sym1, DeformParams::matrix_quasi()) == deconcat(w));
}

TEST_CASE("counit picks the empty-code coefficient") {
    CHECK(counit(Element::unit()) == CoeffPoly(1));
    CHECK(counit(Element::of(parse_word("[x1]"))) == CoeffPoly(0));
    Element e = Element::unit().scaled(CoeffPoly(3));
    e += Element::of(parse_word("[x1]"), CoeffPoly::qc());
    CHECK(counit(e) == CoeffPoly(3));
}

TEST_CASE("counit laws hold for both coproducts") {
    const DeformParams regimes[] = {
        DeformParams::classical(), DeformParams::matrix_quasi(),
        DeformParams::symbolic(false), DeformParams::symbolic(true)};
    for (const DeformParams& p : regimes) {
        const Coproduct cop(p);
        for (const Word& w : codes_up_to(3)) {
            CHECK(contract_left(cop(w)) == Element::of(w));
            CHECK(contract_right(cop(w)) == Element::of(w));
        }
    }
}

TEST_CASE("explicit antipode over ordered set compositions") {
    CHECK(antipode_explicit(parse_word("[x1]")) ==
          Element::of(parse_word("[x1]"), CoeffPoly(-1)));
    CHECK(antipode_explicit(parse_word("[x1, x2]")) == Element::of(parse_word("[x1, x2]")));
    CHECK(antipode_explicit(Word{}) == Element::unit());
}

TEST_CASE("recursive antipode matches the explicit formula at the origin") {
    const Antipode anti(DeformParams::classical());
    for (const Word& w : codes_up_to(4)) CHECK(anti(w) == antipode_explicit(w));
}

TEST_CASE("single-letter codes are primitive everywhere") {
    const Word x1 = parse_word("[x1]");
    const DeformParams regimes[] = {
        DeformParams::classical(), DeformParams::matrix_quasi(),
        DeformParams::symbolic(false), DeformParams::symbolic(true),
        DeformParams::at(2, 3, false)};
    for (const DeformParams& p : regimes)
        CHECK(antipode(Element::of(x1), p) == Element::of(x1, CoeffPoly(-1)));
}

TEST_CASE("antipode convolution annihilates positive grades") {
    const DeformParams regimes[] = {
        DeformParams::classical(), DeformParams::matrix_quasi(),
        DeformParams::symbolic(false), DeformParams::symbolic(true)};
    for (const DeformParams& p : regimes) {
        const Coproduct cop(p);
        const Antipode anti(p);
        for (const Word& w : codes_up_to(3)) {
            Element left, right;
            for (const auto& [pair, c] : cop(w).terms()) {
                left += deformed_product(anti(pair.first), Element::of(pair.second), p)
                            .scaled(c);
                right += deformed_product(Element::of(pair.first), anti(pair.second), p)
                             .scaled(c);
            }
            const Element expected = Element::unit().scaled(counit(Element::of(w)));
            CHECK(left == expected);
            CHECK(right == expected);
        }
    }
}

TEST_CASE("group-like-primitive codes are the one-row codes") {
    const DeformParams p0 = DeformParams::classical();
    CHECK(is_gpe(parse_word("[x1*x2^2]"), p0));
    CHECK(!is_gpe(parse_word("[x1, x1]"), p0));
    CHECK(is_gpe(parse_word("[x1]"), p0));
    CHECK_THROWS_AS(is_gpe(Word{}, p0), std::invalid_argument);

    for (const DeformParams& p :
         {DeformParams::classical(), DeformParams::symbolic(false)})
        for (const Word& w : codes_up_to(4)) {
            if (w.empty()) continue;
            CHECK(is_gpe(w, p) == (w.size() == 1));
        }
}

TEST_CASE("level is the maximal white-spot degree") {
    CHECK(level_of(parse_word("[x1, x2]")) == 1);
    CHECK(level_of(parse_word("[x1^2]")) == 2);
    CHECK(level_of(parse_word("[x2^2*x3, x1*x2*x3^3, x3*x4^2]")) == 5);
    CHECK(level_of(Word{}) == 0);
}

TEST_CASE("level subalgebras are closed under the product") {
    for (unsigned l : {1u, 2u}) {
        std::vector<Word> level_pool;
        for (const Word& w : codes_up_to(3))
            if (level_of(w) <= l) level_pool.push_back(w);
        for (const Word& u : level_pool)
            for (const Word& v : level_pool) {
                const Element prod = deformed_product(Element::of(u), Element::of(v));
                for (const auto& [m, c] : prod.terms()) CHECK(level_of(m) <= l);
            }
    }
}

TEST_CASE("one-black-spot generators and their concatenations") {
    CHECK(lbell_generator(1) == parse_word("[x1]"));
    CHECK(lbell_generator(3) == parse_word("[x1*x2*x3]"));
    CHECK_THROWS_AS(lbell_generator(0), std::invalid_argument);

    const Word d132 = shifted_concat(shifted_concat(lbell_generator(1), lbell_generator(3)),
                                     lbell_generator(2));
    CHECK(d132 == parse_word("[x1, x2*x3*x4, x5*x6]"));

    // Distinct index sequences give distinct concatenations (free monoid).
    std::set<Word, WordLess> seen;
    std::size_t sequences = 0;
    auto rec = [&](auto&& self, const Word& acc, unsigned left) -> void {
        ++sequences;
        seen.insert(acc);
        for (unsigned k = 1; k <= left; ++k)
            self(self, shifted_concat(acc, lbell_generator(k)), left - k);
    };
    rec(rec, Word{}, 5);
    CHECK(seen.size() == sequences);
}

TEST_CASE("axiom suite passes in every shipped regime") {
    const HopfReport classical = verify_hopf(DeformParams::classical(), 4);
    CHECK(classical.all_pass());
    CHECK(verify_hopf(DeformParams::matrix_quasi(), 3).all_pass());
    CHECK(verify_hopf(DeformParams::symbolic(false), 3).all_pass());
    CHECK(verify_hopf(DeformParams::symbolic(true), 3).all_pass());

    // The report prints one line per axiom under a parameter header.
    const std::string text = classical.str();
    CHECK(text.find("(qc=0, qs=0, qt=0)") != std::string::npos);
    CHECK(text.find("coassociativity") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(classical.checks.size() == 7);

    CHECK_THROWS_AS(verify_hopf(DeformParams::classical(), 6), std::invalid_argument);
}
