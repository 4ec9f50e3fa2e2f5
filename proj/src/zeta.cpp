#include "ldiag/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include "ldiag/deform.hpp"

namespace ldiag {

ZetaWord make_zeta_word(std::vector<unsigned> s, std::vector<int> sigma) {
    if (s.size() != sigma.size()) throw std::invalid_argument("exponent/sign length mismatch");
    for (unsigned e : s)
        if (e == 0) throw std::invalid_argument("exponents must be positive");
    for (int g : sigma)
        if (g != 1 && g != -1) throw std::invalid_argument("signs must be +1 or -1");
    return ZetaWord{std::move(s), std::move(sigma)};
}

bool is_convergent(const ZetaWord& z) {
    if (z.s.empty()) return true;  // empty product, value 1
    return z.s.front() >= 2 || z.sigma.front() == -1;
}

ZetaWord zeta_word_of(const Word& code) {
    if (code.empty()) throw std::invalid_argument("the empty code has no index chain");
    ZetaWord z;
    for (const auto& m : code) {
        unsigned long long d = m.degree();
        if (d == 0) throw std::invalid_argument("code letters must be non-unit");
        z.s.push_back(static_cast<unsigned>(d));
        z.sigma.push_back(1);
    }
    return z;
}

namespace {

inline double inv_pow(unsigned long long m, unsigned s) {
    double inv = 1.0 / static_cast<double>(m);
    double r = 1.0;
    for (unsigned k = 0; k < s; ++k) r *= inv;
    return r;
}

inline double sign_pow(int sigma, unsigned long long m) {
    return sigma == 1 ? 1.0 : (m % 2 ? -1.0 : 1.0);
}

}  // namespace

ZetaValue zeta_eval(const ZetaWord& z, unsigned long long N) {
    const size_t n = z.s.size();
    if (!is_convergent(z)) throw std::invalid_argument("divergent index chain");
    if (N < n) throw std::invalid_argument("truncation shorter than the chain");
    if (n == 0) return ZetaValue{1.0, N, 0.0};

    // level[m] = sum over chains m >= i_k > ... > i_n >= 1; start with the
    // empty inner chain, then fold the levels inward from the deepest one.
    std::vector<double> level(static_cast<size_t>(N) + 1, 1.0);
    std::vector<double> next(static_cast<size_t>(N) + 1, 0.0);
    double inner_abs_max = 1.0;  // max_k H_{s_k}(N), harmonic-style majorant
    for (size_t k = n; k-- > 1;) {
        next[0] = 0.0;
        double habs = 0.0;
        for (unsigned long long m = 1; m <= N; ++m) {
            const double p = inv_pow(m, z.s[k]);
            next[m] = next[m - 1] + sign_pow(z.sigma[k], m) * p * level[m - 1];
            habs += p;
        }
        inner_abs_max = std::max(inner_abs_max, habs);
        std::swap(level, next);
    }
    double value = 0.0;
    for (unsigned long long m = N; m >= 1; --m)
        value += sign_pow(z.sigma[0], m) * inv_pow(m, z.s[0]) * level[m - 1];

    // Tail estimate: for i > N the inner factor is at most
    // prod_{k>=2} H_{s_k}(i) <= (A + ln(i/N))^{n-1} with A = max_k H_{s_k}(N),
    // and sum_{i>N} i^{-2} (A + t)^{n-1} integrates to (1/N) E[(A+T)^j],
    // T ~ Exp(1); an extra f(N) covers the sum/integral gap.
    const unsigned j = static_cast<unsigned>(n - 1);
    const double A = inner_abs_max;
    double expect = 0.0;    // sum_m C(j,m) A^{j-m} m!
    double cjm = 1.0;       // C(j,m) * m!
    double apow = std::pow(A, static_cast<double>(j));
    for (unsigned m = 0; m <= j; ++m) {
        expect += cjm * apow;
        cjm *= static_cast<double>(j - m);  // C(j,m) m! -> C(j,m+1) (m+1)!
        if (A > 0) apow /= A;
    }
    const double dN = static_cast<double>(N);
    ZetaValue out;
    out.value = value;
    out.truncation = N;
    out.tail_bound = expect / dN + std::pow(A, static_cast<double>(j)) / (dN * dN);
    return out;
}

const ZetaValue& ZetaEvaluator::eval(const ZetaWord& z) {
    auto key = std::make_pair(z.s, z.sigma);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), zeta_eval(z, N_)).first;
    return it->second;
}

bool stuffle_check(const Word& w1, const Word& w2, ZetaEvaluator& ev, double tol) {
    const ZetaWord z1 = zeta_word_of(w1), z2 = zeta_word_of(w2);
    if (!is_convergent(z1) || !is_convergent(z2))
        throw std::invalid_argument("stuffle check requires convergent factors");
    const double lhs = ev.eval(z1).value * ev.eval(z2).value;
    double rhs = 0.0;
    // Unshifted twist product at qc = qs = 1 is exactly the index-chain
    // multiplication rule; every term of a convergent pair is convergent.
    Element prod = apply_params(twist_product(w1, w2), DeformParams::at(CoeffPoly(1), CoeffPoly(1)));
    for (const auto& [w, c] : prod.terms()) {
        const Rational k = c.eval(1, 1);
        rhs += static_cast<double>(numerator(k)) * ev.eval(zeta_word_of(w)).value;
    }
    return std::fabs(lhs - rhs) <= tol;
}

bool stuffle_check(const Word& w1, const Word& w2, unsigned long long N, double tol) {
    ZetaEvaluator ev(N);
    return stuffle_check(w1, w2, ev, tol);
}

}  // namespace ldiag
