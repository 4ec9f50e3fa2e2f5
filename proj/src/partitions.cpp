#include "ldiag/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ldiag {

/* ---------------- Set partitions ---------------- */

SetPartition make_partition(unsigned n, std::vector<std::vector<unsigned>> blocks) {
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty partition block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<bool> seen(n + 1, false);
    unsigned count = 0;
    for (const auto& b : blocks)
        for (unsigned x : b) {
            if (x < 1 || x > n || seen[x])
                throw std::invalid_argument("blocks must partition {1..n}");
            seen[x] = true;
            ++count;
        }
    if (count != n) throw std::invalid_argument("blocks must cover {1..n}");
    return SetPartition{n, std::move(blocks)};
}

std::vector<SetPartition> enumerate_partitions(unsigned n, unsigned bound) {
    if (n > bound) throw std::invalid_argument("partition ground set exceeds bound");
    // Insert elements 1..n in order: each goes into an existing block or a
    // new one.  Blocks stay sorted and ordered by minimum by construction.
    std::vector<SetPartition> out;
    std::vector<std::vector<unsigned>> blocks;
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (next > n) {
            out.push_back(SetPartition{n, blocks});
            return;
        }
        // Index loop: the recursive call grows `blocks` transiently, which
        // can reallocate and would invalidate a range-for's iterator.
        const size_t present = blocks.size();
        for (size_t i = 0; i < present; ++i) {
            blocks[i].push_back(next);
            self(self, next + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({next});
        self(self, next + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
    return out;
}

MultiIndex partition_type(const SetPartition& p) {
    MultiIndex t;
    for (const auto& b : p.blocks) ++t[static_cast<unsigned>(b.size())];
    return t;
}

Diagram incidence(const SetPartition& p1, const SetPartition& p2) {
    if (p1.n != p2.n) throw std::invalid_argument("incidence requires partitions of one set");
    if (p1.n == 0) return Diagram();
    std::vector<unsigned> block_of(p1.n + 1, 0);  // element -> column block
    for (size_t j = 0; j < p2.blocks.size(); ++j)
        for (unsigned x : p2.blocks[j]) block_of[x] = static_cast<unsigned>(j);
    std::vector<unsigned> e(p1.blocks.size() * p2.blocks.size(), 0u);
    for (size_t i = 0; i < p1.blocks.size(); ++i)
        for (unsigned x : p1.blocks[i]) ++e[i * p2.blocks.size() + block_of[x]];
    return Diagram(p1.blocks.size(), p2.blocks.size(), std::move(e));
}

std::map<UnlabeledDiagram, BigInt> diagram_multiplicities(unsigned n, unsigned bound) {
    auto parts = enumerate_partitions(n, bound);
    // Canonicalization dominates, so collect raw incidence matrices first;
    // distinct pairs often produce literally equal matrices.
    std::map<Diagram, BigInt, decltype(&diagram_less)> raw(&diagram_less);
    for (const auto& p1 : parts)
        for (const auto& p2 : parts) ++raw[incidence(p1, p2)];
    std::map<UnlabeledDiagram, BigInt> out;
    for (const auto& [d, c] : raw) out[forget_labels(d)] += c;
    return out;
}

/* ---------------- Generating polynomials ---------------- */

GenPoly::GenPoly(BigInt c) {
    if (c != 0) terms_[{}] = std::move(c);
}

GenPoly GenPoly::L(unsigned k) {
    GenPoly p;
    p.terms_[{{{0u, k}, 1u}}] = 1;
    return p;
}

GenPoly GenPoly::V(unsigned k) {
    GenPoly p;
    p.terms_[{{{1u, k}, 1u}}] = 1;
    return p;
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
    GenPoly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            // Merge the two sorted factor lists, adding exponents.
            GenPoly::Mono m;
            auto i = ma.begin();
            auto j = mb.begin();
            while (i != ma.end() || j != mb.end()) {
                if (j == mb.end() || (i != ma.end() && i->first < j->first))
                    m.push_back(*i++);
                else if (i == ma.end() || j->first < i->first)
                    m.push_back(*j++);
                else {
                    m.emplace_back(i->first, i->second + j->second);
                    ++i, ++j;
                }
            }
            auto it = r.terms_.find(m);
            if (it == r.terms_.end())
                r.terms_.emplace(std::move(m), ca * cb);
            else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

std::string GenPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        bool need_star = false;
        if (mag != 1 || m.empty()) {
            os << mag;
            need_star = true;
        }
        for (const auto& [v, e] : m) {
            if (need_star) os << '*';
            os << (v.first == 0 ? 'L' : 'V') << v.second;
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

/* ---------------- Product formula expansion ---------------- */

namespace {

// b[m] = m-th complete Bell polynomial in the variables a[1..m]:
// b[0] = 1, b[m+1] = sum_j C(m,j) a[j+1] b[m-j].
std::vector<GenPoly> bell_polynomials(unsigned n, const std::vector<GenPoly>& a) {
    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
    for (unsigned i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (unsigned j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : BigInt(0));
    }
    std::vector<GenPoly> b(n + 1);
    b[0] = GenPoly(1);
    for (unsigned m = 1; m <= n; ++m) {
        GenPoly s;
        for (unsigned j = 0; j < m; ++j)
            s += GenPoly(binom[m - 1][j]) * a[j + 1] * b[m - 1 - j];
        b[m] = s;
    }
    return b;
}

}  // namespace

HadamardCheck hadamard_expansion_check(unsigned n, unsigned bound) {
    if (n == 0 || n > bound) throw std::invalid_argument("hadamard check size out of range");
    std::vector<GenPoly> Ls(n + 1), Vs(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
        Ls[k] = GenPoly::L(k);
        Vs[k] = GenPoly::V(k);
    }
    HadamardCheck r;
    r.lhs = bell_polynomials(n, Ls)[n] * bell_polynomials(n, Vs)[n];
    for (const auto& [ud, mult] : diagram_multiplicities(n, bound)) {
        SpotTypes t = spot_types(ud.canon);
        GenPoly term(mult);
        for (const auto& [k, cnt] : t.alpha)
            for (unsigned long long c = 0; c < cnt; ++c) term = term * GenPoly::L(k);
        for (const auto& [k, cnt] : t.beta)
            for (unsigned long long c = 0; c < cnt; ++c) term = term * GenPoly::V(k);
        r.rhs += term;
    }
    r.equal = r.lhs == r.rhs;
    return r;
}

}  // namespace ldiag
