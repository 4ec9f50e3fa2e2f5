#include "ldiag/coeffpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ldiag {

CoeffPoly::CoeffPoly(BigInt c) {
    if (c != 0) terms_[{0u, 0u}] = std::move(c);
}

CoeffPoly CoeffPoly::term(BigInt c, unsigned qc_exp, unsigned qs_exp) {
    CoeffPoly p;
    if (c != 0) p.terms_[{qc_exp, qs_exp}] = std::move(c);
    return p;
}

bool CoeffPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0u, 0u} &&
           terms_.begin()->second == 1;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    CoeffPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            CoeffPoly::Exponents e{ea.first + eb.first, ea.second + eb.second};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                BigInt c = ca * cb;
                if (c != 0) r.terms_.emplace(e, std::move(c));
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Rational CoeffPoly::eval(const Rational& qc_val, const Rational& qs_val) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (unsigned i = 0; i < e.first; ++i) t *= qc_val;
        for (unsigned i = 0; i < e.second; ++i) t *= qs_val;
        sum += t;
    }
    return sum;
}

CoeffPoly CoeffPoly::subst(const CoeffPoly& qc_val, const CoeffPoly& qs_val) const {
    // Powers are memoized per exponent; exponents stay small in practice.
    std::vector<CoeffPoly> qc_pow{CoeffPoly(1)}, qs_pow{CoeffPoly(1)};
    auto power = [](std::vector<CoeffPoly>& cache, const CoeffPoly& base,
                    unsigned e) -> const CoeffPoly& {
        while (cache.size() <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    CoeffPoly r;
    for (const auto& [e, c] : terms_)
        r += power(qc_pow, qc_val, e.first) * power(qs_pow, qs_val, e.second) * CoeffPoly(c);
    return r;
}

std::string CoeffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        bool need_star = false;
        if (mag != 1 || (e.first == 0 && e.second == 0)) {
            os << mag;
            need_star = true;
        }
        if (e.first > 0) {
            if (need_star) os << '*';
            os << "qc";
            if (e.first > 1) os << '^' << e.first;
            need_star = true;
        }
        if (e.second > 0) {
            if (need_star) os << '*';
            os << "qs";
            if (e.second > 1) os << '^' << e.second;
        }
    }
    return os.str();
}

namespace {

[[noreturn]] void bad_poly(const std::string& text) {
    throw std::invalid_argument("bad coefficient polynomial: '" + text + "'");
}

// Reads an optional "^<digits>" at s[i]; defaults to 1.
unsigned parse_exponent(const std::string& s, size_t& i, const std::string& whole) {
    if (i >= s.size() || s[i] != '^') return 1;
    ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) bad_poly(whole);
    unsigned long e = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        e = e * 10 + static_cast<unsigned long>(s[i] - '0');
        if (e > 1000000ul) bad_poly(whole);
        ++i;
    }
    return static_cast<unsigned>(e);
}

}  // namespace

CoeffPoly CoeffPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) bad_poly(text);

    CoeffPoly result;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        if (i >= s.size()) bad_poly(text);
        // One term: integer and/or qc/qs powers joined by '*'.
        BigInt coeff = 1;
        unsigned qc_e = 0, qs_e = 0;
        bool saw_int = false, saw_qc = false, saw_qs = false, saw_factor = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (saw_factor) {
                if (s[i] != '*') bad_poly(text);
                ++i;
                if (i >= s.size()) bad_poly(text);
            }
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                if (saw_int || saw_qc || saw_qs) bad_poly(text);
                size_t start = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                coeff = BigInt(s.substr(start, i - start));
                saw_int = true;
            } else if (s.compare(i, 2, "qc") == 0) {
                if (saw_qc) bad_poly(text);
                i += 2;
                qc_e = parse_exponent(s, i, text);
                saw_qc = true;
            } else if (s.compare(i, 2, "qs") == 0) {
                if (saw_qs) bad_poly(text);
                i += 2;
                qs_e = parse_exponent(s, i, text);
                saw_qs = true;
            } else {
                bad_poly(text);
            }
            saw_factor = true;
        }
        if (!saw_factor) bad_poly(text);
        result += term(sign < 0 ? BigInt(-coeff) : coeff, qc_e, qs_e);
    }
    return result;
}

}  // namespace ldiag
