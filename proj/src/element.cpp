#include "ldiag/element.hpp"

namespace ldiag {

Element Element::of(Word w, CoeffPoly c) {
    Element e;
    e.add_term(std::move(w), c);
    return e;
}

void Element::add_term(const Word& w, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element Element::scaled(const CoeffPoly& c) const {
    Element r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.add_term(w, k * c);
    return r;
}

CoeffPoly Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? CoeffPoly() : it->second;
}

Element Element::subst(const CoeffPoly& qc_val, const CoeffPoly& qs_val) const {
    Element r;
    for (const auto& [w, c] : terms_) r.add_term(w, c.subst(qc_val, qs_val));
    return r;
}

bool Element::supports_compact() const {
    for (const auto& [w, c] : terms_)
        if (!is_compact(w)) return false;
    return true;
}

TensorElement TensorElement::of(Word left, Word right, CoeffPoly c) {
    TensorElement t;
    t.add_term({std::move(left), std::move(right)}, c);
    return t;
}

void TensorElement::add_term(const WordPair& p, const CoeffPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

TensorElement TensorElement::scaled(const CoeffPoly& c) const {
    TensorElement r;
    if (c.is_zero()) return r;
    for (const auto& [p, k] : terms_) r.add_term(p, k * c);
    return r;
}

CoeffPoly TensorElement::coeff(const WordPair& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? CoeffPoly() : it->second;
}

TensorElement TensorElement::subst(const CoeffPoly& qc_val, const CoeffPoly& qs_val) const {
    TensorElement r;
    for (const auto& [p, c] : terms_) r.add_term(p, c.subst(qc_val, qs_val));
    return r;
}

}  // namespace ldiag
