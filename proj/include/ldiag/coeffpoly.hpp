#ifndef LDIAG_COEFFPOLY_HPP
#define LDIAG_COEFFPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "ldiag/bigint.hpp"

namespace ldiag {

// Element of Z[qc,qs], the coefficient ring of the deformed diagram algebra.
// Sparse map (qc exponent, qs exponent) -> coefficient; zero coefficients are
// never stored, so map equality is ring equality and iteration order is the
// canonical term order (ascending lexicographic on the exponent pair).
class CoeffPoly {
public:
    using Exponents = std::pair<unsigned, unsigned>;

    CoeffPoly() = default;
    CoeffPoly(int c) : CoeffPoly(BigInt(c)) {}
    CoeffPoly(long long c) : CoeffPoly(BigInt(c)) {}
    explicit CoeffPoly(BigInt c);

    static CoeffPoly term(BigInt c, unsigned qc_exp, unsigned qs_exp);
    static CoeffPoly qc(unsigned e = 1) { return term(1, e, 0); }
    static CoeffPoly qs(unsigned e = 1) { return term(1, 0, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly operator-() const;
    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { a += b; return a; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { a -= b; return a; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    CoeffPoly& operator*=(const CoeffPoly& o) { *this = *this * o; return *this; }

    bool operator==(const CoeffPoly&) const = default;

    // Evaluation at rational parameter values (a ring homomorphism).
    Rational eval(const Rational& qc_val, const Rational& qs_val) const;
    // Composition: substitute polynomials for qc and qs.  Used to specialize
    // symbolic results at concrete parameter values without recomputation.
    CoeffPoly subst(const CoeffPoly& qc_val, const CoeffPoly& qs_val) const;

    const std::map<Exponents, BigInt>& terms() const { return terms_; }

    // Canonical text form, e.g. "1+qc", "-2*qc^2*qs", "qs^6+qc^2".
    std::string str() const;
    // Inverse of str(); accepts redundant whitespace and any factor order.
    // Throws std::invalid_argument on malformed input.
    static CoeffPoly parse(const std::string& text);

private:
    std::map<Exponents, BigInt> terms_;
};

}  // namespace ldiag

#endif
