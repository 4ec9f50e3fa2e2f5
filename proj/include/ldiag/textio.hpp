#ifndef LDIAG_TEXTIO_HPP
#define LDIAG_TEXTIO_HPP

#include <string>

#include <json.hpp>

#include "ldiag/element.hpp"
#include "ldiag/hopf.hpp"

namespace ldiag {

// One term per line, canonical order (heavier words first, then entrywise):
//   "<poly> * [code]"            e.g. "1+qc * [x1, x1]"
//   "<poly> * [left] (x) [right]" for tensors.
// The zero element prints as the empty string.
std::string format_element(const Element& e);
std::string format_tensor(const TensorElement& t);

// Structured forms.  Elements are arrays of {"coeff": "...", "word": [...]}
// with each letter a monomial string; tensors carry "left"/"right" words.
nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j);
nlohmann::json tensor_to_json(const TensorElement& t);
nlohmann::json report_to_json(const HopfReport& r);

}  // namespace ldiag

#endif
