#ifndef LDIAG_DEFORM_HPP
#define LDIAG_DEFORM_HPP

#include <optional>
#include <string>

#include "ldiag/element.hpp"

namespace ldiag {

// Deformation parameters.  qc/qs left empty mean "keep formal": results stay
// polynomial in the corresponding variable.  qt switches the coproduct
// between the black-spot form (false) and the deconcatenation form (true);
// only those two values make the structure work, hence the bool.
struct DeformParams {
    std::optional<CoeffPoly> qc;
    std::optional<CoeffPoly> qs;
    bool qt = false;

    static DeformParams symbolic(bool qt = false) { return {std::nullopt, std::nullopt, qt}; }
    static DeformParams at(CoeffPoly qc_val, CoeffPoly qs_val, bool qt = false) {
        return {std::move(qc_val), std::move(qs_val), qt};
    }
    static DeformParams classical() { return at(CoeffPoly(0), CoeffPoly(0), false); }
    static DeformParams matrix_quasi() { return at(CoeffPoly(1), CoeffPoly(1), true); }

    bool is_symbolic() const { return !qc && !qs; }
    std::string str() const;
};

// Substitutes the concrete parameter values (if any) into every coefficient.
Element apply_params(const Element& e, const DeformParams& p);
TensorElement apply_params(const TensorElement& t, const DeformParams& p);

// Twist product on plain words (no alphabet shift), fully symbolic:
//   w || [] = [] || w = w
//   au || bv = a (u || bv) + qc^{|au||b|} b (au || v) + qc^{|u||b|} qs^{|a||b|} (ab)(u || v)
// Associative, graded by weight, with the empty word as unit.
Element twist_product(const Word& w1, const Word& w2);

// Twist product with the qs (superposition) branch removed: the quantum
// shuffle with braiding factor qc^{weight*weight}.  Coincides with setting
// qs = 0 in twist_product, term by term.
Element quantum_shuffle(const Word& w1, const Word& w2);

// Deformed diagram product on codes: w1 || translate(w2, max index of w1),
// symbolic in qc and qs.  Compact words are closed under it.
Element shifted_twist(const Word& w1, const Word& w2);

// Bilinear extension of shifted_twist with the parameter substitution
// applied to the result.  Requires both supports to be compact codes.
Element deformed_product(const Element& e1, const Element& e2,
                         const DeformParams& p = DeformParams::symbolic());

// Componentwise product on the tensor square (no braiding twist):
//   (a (x) b) (c (x) d) = (a*c) (x) (b*d), both factors via deformed_product.
TensorElement tensor_square_product(const TensorElement& t1, const TensorElement& t2,
                                    const DeformParams& p);

}  // namespace ldiag

#endif
