#include "ldiag/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ldiag {

/* ---------------- Monomial ---------------- */

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [v, e] : factors) {
        if (v == 0) throw std::invalid_argument("variable indices start at 1");
        if (e == 0) throw std::invalid_argument("monomial exponents must be positive");
        if (!f_.empty() && f_.back().first == v)
            f_.back().second += e;
        else
            f_.emplace_back(v, e);
    }
}

Monomial Monomial::var(unsigned index, unsigned exponent) {
    return Monomial({{index, exponent}});
}

unsigned long long Monomial::degree() const {
    unsigned long long d = 0;
    for (const auto& [v, e] : f_) d += e;
    return d;
}

unsigned Monomial::exponent_of(unsigned var) const {
    for (const auto& [v, e] : f_)
        if (v == var) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first))
            r.f_.push_back(*a++);
        else if (a == f_.end() || b->first < a->first)
            r.f_.push_back(*b++);
        else {
            r.f_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return r;
}

Monomial Monomial::translated(unsigned p) const {
    Monomial r = *this;
    for (auto& [v, e] : r.f_) v += p;
    return r;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.factors().begin(), a.factors().end(),
                                        b.factors().begin(), b.factors().end());
}

/* ---------------- Words ---------------- */

unsigned long long weight(const Word& w) {
    unsigned long long s = 0;
    for (const auto& m : w) s += m.degree();
    return s;
}

unsigned max_index(const Word& w) {
    unsigned mx = 0;
    for (const auto& m : w) mx = std::max(mx, m.max_var());
    return mx;
}

unsigned min_index(const Word& w) {
    unsigned mn = 0;
    for (const auto& m : w)
        if (!m.is_unit()) mn = mn == 0 ? m.min_var() : std::min(mn, m.min_var());
    return mn;
}

std::vector<unsigned> index_alphabet(const Word& w) {
    std::vector<unsigned> idx;
    for (const auto& m : w)
        for (const auto& [v, e] : m.factors()) idx.push_back(v);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

bool is_compact(const Word& w) {
    auto idx = index_alphabet(w);
    for (size_t i = 0; i < idx.size(); ++i)
        if (idx[i] != i + 1) return false;
    return true;
}

Word compact(const Word& w) {
    auto idx = index_alphabet(w);
    std::map<unsigned, unsigned> rank;
    for (size_t i = 0; i < idx.size(); ++i) rank[idx[i]] = static_cast<unsigned>(i + 1);
    Word r;
    r.reserve(w.size());
    for (const auto& m : w) {
        std::vector<Monomial::Factor> fs;
        for (const auto& [v, e] : m.factors()) fs.emplace_back(rank[v], e);
        r.push_back(Monomial(std::move(fs)));
    }
    return r;
}

Word translate(const Word& w, unsigned p) {
    Word r;
    r.reserve(w.size());
    for (const auto& m : w) r.push_back(m.translated(p));
    return r;
}

Word shifted_concat(const Word& w1, const Word& w2) {
    Word r = w1;
    Word t = translate(w2, max_index(w1));
    r.insert(r.end(), t.begin(), t.end());
    return r;
}

unsigned overlap_gauge(const Word& w, std::size_t t) {
    if (t < 1 || t >= w.size())
        throw std::invalid_argument("overlap gauge position out of range");
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(t), w.end());
    long long g = static_cast<long long>(max_index(prefix)) -
                  static_cast<long long>(min_index(suffix)) + 1;
    return g > 0 ? static_cast<unsigned>(g) : 0u;
}

std::vector<Word> factorize(const Word& w) {
    if (!is_compact(w)) throw std::invalid_argument("factorize requires a compact word");
    std::vector<Word> factors;
    size_t start = 0;
    for (size_t t = 1; t <= w.size(); ++t) {
        if (t == w.size() || overlap_gauge(w, t) == 0) {
            factors.push_back(compact(Word(w.begin() + static_cast<std::ptrdiff_t>(start),
                                           w.begin() + static_cast<std::ptrdiff_t>(t))));
            start = t;
        }
    }
    return factors;  // empty word -> no factors
}

Word subword(const Word& w, std::vector<unsigned> positions) {
    std::sort(positions.begin(), positions.end());
    Word r;
    r.reserve(positions.size());
    unsigned prev = 0;
    for (unsigned p : positions) {
        if (p < 1 || p > w.size()) throw std::invalid_argument("subword position out of range");
        if (p == prev) throw std::invalid_argument("subword positions must be distinct");
        prev = p;
        r.push_back(w[p - 1]);
    }
    return r;
}

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (monomial_less(a[i], b[i])) return true;
        if (monomial_less(b[i], a[i])) return false;
    }
    return false;
}

/* ---------------- Text forms ---------------- */

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) os << '*';
        first = false;
        os << 'x' << v;
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

std::string to_string(const Word& w) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ", ";
        os << to_string(w[i]);
    }
    os << ']';
    return os.str();
}

namespace {

[[noreturn]] void bad_word(const std::string& text) {
    throw std::invalid_argument("bad monomial word: '" + text + "'");
}

unsigned parse_uint(const std::string& s, size_t& i, const std::string& whole) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) bad_word(whole);
    unsigned long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<unsigned long>(s[i] - '0');
        if (v > 1000000ul) bad_word(whole);
        ++i;
    }
    return static_cast<unsigned>(v);
}

Monomial parse_monomial_at(const std::string& s, size_t& i, const std::string& whole) {
    std::vector<Monomial::Factor> fs;
    while (true) {
        if (i >= s.size() || s[i] != 'x') bad_word(whole);
        ++i;
        unsigned v = parse_uint(s, i, whole);
        unsigned e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            e = parse_uint(s, i, whole);
        }
        fs.emplace_back(v, e);
        if (i < s.size() && s[i] == '*')
            ++i;
        else
            break;
    }
    return Monomial(std::move(fs));
}

std::string strip_spaces(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    return s;
}

}  // namespace

Monomial parse_monomial(const std::string& text) {
    std::string s = strip_spaces(text);
    size_t i = 0;
    Monomial m = parse_monomial_at(s, i, text);
    if (i != s.size()) bad_word(text);
    return m;
}

Word parse_word(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') bad_word(text);
    Word w;
    size_t i = 1;
    const size_t end = s.size() - 1;
    if (i == end) return w;  // "[]"
    while (true) {
        size_t j = i;
        Monomial m = parse_monomial_at(s, j, text);
        w.push_back(std::move(m));
        i = j;
        if (i == end) break;
        if (s[i] != ',') bad_word(text);
        ++i;
        if (i == end) bad_word(text);  // trailing comma
    }
    return w;
}

}  // namespace ldiag
