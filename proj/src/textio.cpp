#include "ldiag/textio.hpp"

#include <sstream>

namespace ldiag {

std::string format_element(const Element& e) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) os << '\n';
        first = false;
        os << c.str() << " * " << to_string(w);
    }
    return os.str();
}

std::string format_tensor(const TensorElement& t) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : t.terms()) {
        if (!first) os << '\n';
        first = false;
        os << c.str() << " * " << to_string(p.first) << " (x) " << to_string(p.second);
    }
    return os.str();
}

namespace {

nlohmann::json word_to_json(const Word& w) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& m : w) a.push_back(to_string(m));
    return a;
}

Word word_from_json(const nlohmann::json& a) {
    Word w;
    for (const auto& m : a) w.push_back(parse_monomial(m.get<std::string>()));
    return w;
}

}  // namespace

nlohmann::json element_to_json(const Element& e) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [w, c] : e.terms())
        a.push_back({{"coeff", c.str()}, {"word", word_to_json(w)}});
    return a;
}

Element element_from_json(const nlohmann::json& j) {
    Element e;
    for (const auto& t : j)
        e.add_term(word_from_json(t.at("word")), CoeffPoly::parse(t.at("coeff").get<std::string>()));
    return e;
}

nlohmann::json tensor_to_json(const TensorElement& t) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [p, c] : t.terms())
        a.push_back({{"coeff", c.str()},
                     {"left", word_to_json(p.first)},
                     {"right", word_to_json(p.second)}});
    return a;
}

nlohmann::json report_to_json(const HopfReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"axiom", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"params", r.params.str()},
            {"max_lines", r.max_lines},
            {"all_pass", r.all_pass()},
            {"checks", checks}};
}

}  // namespace ldiag
