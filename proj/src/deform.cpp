#include "ldiag/deform.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ldiag {

std::string DeformParams::str() const {
    std::ostringstream os;
    os << "(qc=" << (qc ? qc->str() : "sym") << ", qs=" << (qs ? qs->str() : "sym")
       << ", qt=" << (qt ? 1 : 0) << ")";
    return os.str();
}

Element apply_params(const Element& e, const DeformParams& p) {
    if (p.is_symbolic()) return e;
    return e.subst(p.qc ? *p.qc : CoeffPoly::qc(), p.qs ? *p.qs : CoeffPoly::qs());
}

TensorElement apply_params(const TensorElement& t, const DeformParams& p) {
    if (p.is_symbolic()) return t;
    return t.subst(p.qc ? *p.qc : CoeffPoly::qc(), p.qs ? *p.qs : CoeffPoly::qs());
}

namespace {

// Iterative expansion of the twist recursion
//   au || bv = a (u || bv) + qc^{|au||b|} b (au || v) + qc^{|u||b|} qs^{|a||b|} (ab)(u || v).
// A state records the next letter of each factor, the letter this state
// contributes, and the accumulated coefficient.  Depth-first order lets all
// states share one prefix buffer: a state writes its letter at pop time, and
// everything popped until its siblings run only writes deeper slots.  Each
// branch consumes a letter, so the agenda drains without recursion.
Element twist_expand(const Word& w1, const Word& w2, bool with_superposition) {
    auto suffix_weights = [](const Word& w) {
        std::vector<unsigned long long> s(w.size() + 1, 0);
        for (size_t i = w.size(); i-- > 0;) s[i] = s[i + 1] + w[i].degree();
        return s;
    };
    const auto sw1 = suffix_weights(w1);

    struct State {
        size_t i, j;     // suffix positions in w1, w2
        size_t depth;    // letters emitted before this state's letter
        Monomial letter; // written to the prefix when popped (depth 0: none)
        CoeffPoly coeff;
    };
    Element out;
    std::vector<Monomial> prefix(w1.size() + w2.size());
    std::vector<State> agenda{{0, 0, 0, Monomial(), CoeffPoly(1)}};
    while (!agenda.empty()) {
        State s = std::move(agenda.back());
        agenda.pop_back();
        if (s.depth > 0) prefix[s.depth - 1] = std::move(s.letter);
        if (s.i == w1.size() || s.j == w2.size()) {
            Word word(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(s.depth));
            for (size_t k = s.i; k < w1.size(); ++k) word.push_back(w1[k]);
            for (size_t k = s.j; k < w2.size(); ++k) word.push_back(w2[k]);
            out.add_term(word, s.coeff);
            continue;
        }
        const Monomial& a = w1[s.i];
        const Monomial& b = w2[s.j];
        const unsigned long long wb = b.degree();
        // a goes first: no twisting cost.
        agenda.push_back({s.i + 1, s.j, s.depth + 1, a, s.coeff});
        // b jumps over the whole remaining left factor au.
        agenda.push_back({s.i, s.j + 1, s.depth + 1, b,
                          s.coeff * CoeffPoly::term(1, static_cast<unsigned>(sw1[s.i] * wb), 0)});
        // a and b superpose into one letter.
        if (with_superposition)
            agenda.push_back(
                {s.i + 1, s.j + 1, s.depth + 1, a.times(b),
                 s.coeff * CoeffPoly::term(1, static_cast<unsigned>(sw1[s.i + 1] * wb),
                                           static_cast<unsigned>(a.degree() * wb))});
    }
    return out;
}

}  // namespace

Element twist_product(const Word& w1, const Word& w2) { return twist_expand(w1, w2, true); }

Element quantum_shuffle(const Word& w1, const Word& w2) { return twist_expand(w1, w2, false); }

Element shifted_twist(const Word& w1, const Word& w2) {
    return twist_product(w1, translate(w2, max_index(w1)));
}

Element deformed_product(const Element& e1, const Element& e2, const DeformParams& p) {
    if (!e1.supports_compact() || !e2.supports_compact())
        throw std::invalid_argument("deformed_product requires compact codes");
    Element out;
    for (const auto& [w1, c1] : e1.terms())
        for (const auto& [w2, c2] : e2.terms()) out += shifted_twist(w1, w2).scaled(c1 * c2);
    return apply_params(out, p);
}

TensorElement tensor_square_product(const TensorElement& t1, const TensorElement& t2,
                                    const DeformParams& p) {
    TensorElement out;
    for (const auto& [p1, c1] : t1.terms())
        for (const auto& [p2, c2] : t2.terms()) {
            Element left = shifted_twist(p1.first, p2.first);
            Element right = shifted_twist(p1.second, p2.second);
            const CoeffPoly cc = c1 * c2;
            for (const auto& [lw, lc] : left.terms())
                for (const auto& [rw, rc] : right.terms())
                    out.add_term({lw, rw}, cc * lc * rc);
        }
    return apply_params(out, p);
}

}  // namespace ldiag
