// ldiag - command-line front end for the deformed diagram algebra library.
//
// Subcommands: product, coproduct, antipode, verify, enumerate, factorize,
// code, zeta.  Exit codes: 0 success, 1 validation/usage error, 2 a
// verification subcommand ran fine but the checked identity failed.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldiag/deform.hpp"
#include "ldiag/diagrams.hpp"
#include "ldiag/hopf.hpp"
#include "ldiag/partitions.hpp"
#include "ldiag/textio.hpp"
#include "ldiag/zeta.hpp"

namespace {

using namespace ldiag;

// "sym" keeps the parameter formal; anything else must parse as a
// coefficient polynomial (usually just a number).
std::optional<CoeffPoly> parse_param(const std::string& text) {
    if (text == "sym") return std::nullopt;
    return CoeffPoly::parse(text);
}

DeformParams make_params(const std::string& qc, const std::string& qs, int qt) {
    DeformParams p;
    p.qc = parse_param(qc);
    p.qs = parse_param(qs);
    p.qt = qt != 0;
    return p;
}

// A diagram argument is one of: a code literal ("[x1, x1^2*x2]"), the path
// of a matrix file, or inline matrix text with ';' or newlines between rows.
Word read_word_arg(const std::string& arg) {
    std::string text = arg;
    if (!text.empty() && text.front() == '[') {
        Word w = parse_word(text);
        if (!is_compact(w))
            throw std::invalid_argument("code is not compact: " + text);
        return w;
    }
    if (std::ifstream in(arg); in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return code_of(parse_diagram(text));
}

void check_size(const Word& w, long long max_lines) {
    if (max_lines >= 0 && weight(w) > static_cast<unsigned long long>(max_lines))
        throw std::invalid_argument("input has more lines than --max-lines allows");
}

void print_text(const std::string& body) {
    if (!body.empty()) std::cout << body << '\n';
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<int> parse_signs(const std::string& text, std::size_t want) {
    std::vector<int> sigma;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok == "+" || tok == "+1" || tok == "1")
            sigma.push_back(+1);
        else if (tok == "-" || tok == "-1")
            sigma.push_back(-1);
        else
            throw std::invalid_argument("bad sign token: " + tok);
    }
    if (sigma.size() != want)
        throw std::invalid_argument("sign list length does not match the code length");
    return sigma;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deformed algebra of labeled Feynman-like diagrams"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_out = false;
    unsigned long long seed = 20140905;  // accepted for reproducible scripting; dispatch is deterministic
    long long global_max = -1;
    app.add_flag("--json", json_out, "structured output instead of plain text");
    app.add_option("--seed", seed, "seed for randomized drivers (accepted globally)");
    app.add_option("--max-lines", global_max, "refuse inputs with more lines than this");

    // --- product ------------------------------------------------------
    std::string pa, pb, p_qc = "0", p_qs = "0";
    bool unshifted = false;
    auto* prod = app.add_subcommand("product", "multiply two diagrams");
    prod->add_option("A", pa, "first diagram (code literal, file, or matrix text)")->required();
    prod->add_option("B", pb, "second diagram")->required();
    prod->add_option("--qc", p_qc, "crossing parameter, a polynomial or 'sym'");
    prod->add_option("--qs", p_qs, "superposition parameter, a polynomial or 'sym'");
    prod->add_flag("--unshifted", unshifted, "twist the raw labels instead of stacking alphabets");

    // --- coproduct / antipode -----------------------------------------
    std::string c_in, c_qc = "0", c_qs = "0";
    int c_qt = 0;
    auto* cop = app.add_subcommand("coproduct", "coproduct of a diagram");
    cop->add_option("input", c_in, "diagram (code literal, file, or matrix text)")->required();
    cop->add_option("--qt", c_qt, "coproduct switch, 0 or 1")->check(CLI::Range(0, 1));
    cop->add_option("--qc", c_qc, "crossing parameter");
    cop->add_option("--qs", c_qs, "superposition parameter");

    std::string a_in, a_qc = "0", a_qs = "0";
    int a_qt = 0;
    auto* anti = app.add_subcommand("antipode", "antipode of a diagram");
    anti->add_option("input", a_in, "diagram (code literal, file, or matrix text)")->required();
    anti->add_option("--qt", a_qt, "coproduct switch, 0 or 1")->check(CLI::Range(0, 1));
    anti->add_option("--qc", a_qc, "crossing parameter");
    anti->add_option("--qs", a_qs, "superposition parameter");

    // --- verify ---------------------------------------------------------
    std::string v_qc = "0", v_qs = "0";
    int v_qt = 0;
    unsigned v_max = 3;
    auto* verify = app.add_subcommand("verify", "check the bialgebra axioms over all small diagrams");
    verify->add_option("--qc", v_qc, "crossing parameter, a polynomial or 'sym'");
    verify->add_option("--qs", v_qs, "superposition parameter, a polynomial or 'sym'");
    verify->add_option("--qt", v_qt, "coproduct switch, 0 or 1")->check(CLI::Range(0, 1));
    auto* v_max_opt = verify->add_option("--max-lines", v_max, "check diagrams with up to this many lines (default 3)");

    // --- enumerate ------------------------------------------------------
    unsigned e_n = 0;
    auto* enumerate = app.add_subcommand("enumerate", "packed diagrams of n lines with product multiplicities");
    enumerate->add_option("n", e_n, "number of lines")->required();

    // --- factorize / code ----------------------------------------------
    std::string f_in;
    auto* fact = app.add_subcommand("factorize", "split a code into irreducible factors");
    fact->add_option("input", f_in, "diagram (code literal, file, or matrix text)")->required();

    std::string k_in;
    auto* conv = app.add_subcommand("code", "convert between matrix and code forms");
    conv->add_option("input", k_in, "diagram (code literal, file, or matrix text)")->required();

    // --- zeta -----------------------------------------------------------
    std::string z_code, z_signs, z_other;
    unsigned long long z_n = 1000000;
    double z_tol = 1e-5;
    auto* zeta = app.add_subcommand("zeta", "truncated nested-sum value of a diagram");
    zeta->add_option("--code", z_code, "diagram code, e.g. \"[x1^2, x1]\"")->required();
    zeta->add_option("--signs", z_signs, "comma-separated signs, e.g. \"+,-\" (default all +)");
    zeta->add_option("--truncate", z_n, "summation cutoff N");
    zeta->add_option("--check-stuffle", z_other, "second code: check value(A)*value(B) against the unshifted (1,1)-product");
    zeta->add_option("--tol", z_tol, "tolerance for --check-stuffle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // any parse failure is a validation error
    }

    try {
        if (*prod) {
            Word a = read_word_arg(pa), b = read_word_arg(pb);
            check_size(a, global_max);
            check_size(b, global_max);
            DeformParams params = make_params(p_qc, p_qs, 0);
            Element r = unshifted ? apply_params(twist_product(a, b), params)
                                  : deformed_product(Element::of(a), Element::of(b), params);
            if (json_out)
                print_json(element_to_json(r));
            else
                print_text(format_element(r));
        } else if (*cop) {
            Word w = read_word_arg(c_in);
            check_size(w, global_max);
            TensorElement t = coproduct(w, make_params(c_qc, c_qs, c_qt));
            if (json_out)
                print_json(tensor_to_json(t));
            else
                print_text(format_tensor(t));
        } else if (*anti) {
            Word w = read_word_arg(a_in);
            check_size(w, global_max);
            Element r = antipode(Element::of(w), make_params(a_qc, a_qs, a_qt));
            if (json_out)
                print_json(element_to_json(r));
            else
                print_text(format_element(r));
        } else if (*verify) {
            unsigned ml = v_max_opt->count() ? v_max : (global_max >= 0 ? static_cast<unsigned>(global_max) : 3);
            HopfReport r = verify_hopf(make_params(v_qc, v_qs, v_qt), ml);
            if (json_out)
                print_json(report_to_json(r));
            else
                print_text(r.str());
            return r.all_pass() ? 0 : 2;
        } else if (*enumerate) {
            auto classes = diagram_multiplicities(e_n);
            if (json_out) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& [u, mult] : classes) {
                    nlohmann::json rows = nlohmann::json::array();
                    for (std::size_t i = 0; i < u.canon.rows(); ++i) {
                        nlohmann::json row = nlohmann::json::array();
                        for (std::size_t j = 0; j < u.canon.cols(); ++j) row.push_back(u.canon(i, j));
                        rows.push_back(row);
                    }
                    arr.push_back({{"mult", mult.convert_to<unsigned long long>()}, {"matrix", rows}});
                }
                print_json(arr);
            } else {
                for (const auto& [u, mult] : classes)
                    std::cout << mult << '\t' << to_string(u.canon, ';') << '\n';
            }
        } else if (*fact) {
            Word w = read_word_arg(f_in);
            check_size(w, global_max);
            if (json_out) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& piece : factorize(w)) {
                    nlohmann::json ws = nlohmann::json::array();
                    for (const auto& m : piece) ws.push_back(to_string(m));
                    arr.push_back(ws);
                }
                print_json(arr);
            } else {
                for (const auto& piece : factorize(w)) std::cout << to_string(piece) << '\n';
            }
        } else if (*conv) {
            Word w = read_word_arg(k_in);
            check_size(w, global_max);
            Diagram d = diagram_of(w);
            if (json_out) {
                nlohmann::json rows = nlohmann::json::array();
                for (std::size_t i = 0; i < d.rows(); ++i) {
                    nlohmann::json row = nlohmann::json::array();
                    for (std::size_t j = 0; j < d.cols(); ++j) row.push_back(d(i, j));
                    rows.push_back(row);
                }
                print_json({{"code", element_to_json(Element::of(w))[0]["word"]}, {"matrix", rows}});
            } else if (!k_in.empty() && k_in.front() == '[') {
                print_text(to_string(d));  // code in, matrix out
            } else {
                print_text(to_string(w));  // matrix in, code out
            }
        } else if (*zeta) {
            Word w = read_word_arg(z_code);
            check_size(w, global_max);
            ZetaWord zw = zeta_word_of(w);
            if (!z_signs.empty()) zw = make_zeta_word(zw.s, parse_signs(z_signs, zw.s.size()));
            ZetaValue v = zeta_eval(zw, z_n);
            // Run the stuffle comparison before printing anything so a bad
            // second factor errors out without a half-written report.
            bool stuffle_pass = true;
            if (!z_other.empty()) stuffle_pass = stuffle_check(w, read_word_arg(z_other), z_n, z_tol);
            if (json_out) {
                nlohmann::json j = {{"value", v.value},
                                    {"truncation", v.truncation},
                                    {"tail_bound", v.tail_bound}};
                if (!z_other.empty()) j["stuffle_pass"] = stuffle_pass;
                print_json(j);
            } else {
                std::cout << "value = " << std::setprecision(12) << v.value << '\n'
                          << "truncation = " << v.truncation << '\n'
                          << "tail_bound = " << v.tail_bound << '\n';
                if (!z_other.empty())
                    std::cout << "stuffle = " << (stuffle_pass ? "PASS" : "FAIL") << '\n';
            }
            return stuffle_pass ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
