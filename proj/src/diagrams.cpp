#include "ldiag/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ldiag {

/* ---------------- Diagram basics ---------------- */

Diagram::Diagram(std::size_t rows, std::size_t cols, std::vector<unsigned> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if ((rows_ == 0) != (cols_ == 0))
        throw std::invalid_argument("diagram must be empty or have both rows and columns");
    if (e_.size() != rows_ * cols_) throw std::invalid_argument("diagram entry count mismatch");
}

Diagram Diagram::from_rows(const std::vector<std::vector<unsigned>>& rows) {
    if (rows.empty()) return Diagram();
    std::size_t cols = rows.front().size();
    std::vector<unsigned> e;
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged diagram rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    if (cols == 0) throw std::invalid_argument("diagram rows must be non-empty");
    return Diagram(rows.size(), cols, std::move(e));
}

unsigned long long Diagram::lines() const {
    unsigned long long s = 0;
    for (unsigned v : e_) s += v;
    return s;
}

bool Diagram::is_packed() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        unsigned long long s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
        if (s == 0) return false;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        unsigned long long s = 0;
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
        if (s == 0) return false;
    }
    return true;
}

bool diagram_less(const Diagram& a, const Diagram& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    return a.entries() < b.entries();
}

/* ---------------- Code correspondence ---------------- */

Word code_of(const Diagram& d) {
    if (!d.is_packed()) throw std::invalid_argument("code_of requires a packed diagram");
    Word w;
    w.reserve(d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i) {
        std::vector<Monomial::Factor> fs;
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (d(i, j) > 0) fs.emplace_back(static_cast<unsigned>(j + 1), d(i, j));
        w.push_back(Monomial(std::move(fs)));
    }
    return w;
}

Diagram diagram_of(const Word& w) {
    if (!is_compact(w)) throw std::invalid_argument("diagram_of requires a compact word");
    std::size_t cols = max_index(w);
    std::vector<unsigned> e(w.size() * cols, 0u);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_unit()) throw std::invalid_argument("code letters must be non-unit");
        for (const auto& [v, x] : w[i].factors()) e[i * cols + (v - 1)] = x;
    }
    return Diagram(w.size(), cols, std::move(e));
}

Diagram concat_labeled(const Diagram& d1, const Diagram& d2) {
    if (d1.rows() == 0) return d2;
    if (d2.rows() == 0) return d1;
    std::size_t rows = d1.rows() + d2.rows(), cols = d1.cols() + d2.cols();
    std::vector<unsigned> e(rows * cols, 0u);
    for (std::size_t i = 0; i < d1.rows(); ++i)
        for (std::size_t j = 0; j < d1.cols(); ++j) e[i * cols + j] = d1(i, j);
    for (std::size_t i = 0; i < d2.rows(); ++i)
        for (std::size_t j = 0; j < d2.cols(); ++j)
            e[(d1.rows() + i) * cols + (d1.cols() + j)] = d2(i, j);
    return Diagram(rows, cols, std::move(e));
}

Diagram restrict_rows(const Diagram& d, std::vector<unsigned> rows) {
    std::sort(rows.begin(), rows.end());
    unsigned prev = 0;
    for (unsigned r : rows) {
        if (r < 1 || r > d.rows()) throw std::invalid_argument("row restriction out of range");
        if (r == prev) throw std::invalid_argument("row restriction indices must be distinct");
        prev = r;
    }
    // Keep columns that are nonzero on the kept rows.
    std::vector<std::size_t> keep_cols;
    for (std::size_t j = 0; j < d.cols(); ++j) {
        unsigned long long s = 0;
        for (unsigned r : rows) s += d(r - 1, j);
        if (s > 0) keep_cols.push_back(j);
    }
    if (rows.empty() || keep_cols.empty()) return Diagram();
    std::vector<unsigned> e;
    e.reserve(rows.size() * keep_cols.size());
    for (unsigned r : rows)
        for (std::size_t j : keep_cols) e.push_back(d(r - 1, j));
    return Diagram(rows.size(), keep_cols.size(), std::move(e));
}

/* ---------------- Canonical form ---------------- */

bool operator<(const UnlabeledDiagram& a, const UnlabeledDiagram& b) {
    return diagram_less(a.canon, b.canon);
}

namespace {

// Row-major entry list of the matrix with rows in the given content order and
// columns sorted lexicographically (as top-to-bottom tuples).  For a fixed
// row order this is the smallest row-major reading over column permutations.
std::vector<unsigned> sorted_cols_reading(const std::vector<std::vector<unsigned>>& rows) {
    const std::size_t p = rows.size(), q = rows.front().size();
    std::vector<std::vector<unsigned>> cols(q, std::vector<unsigned>(p));
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t i = 0; i < p; ++i) cols[j][i] = rows[i][j];
    std::sort(cols.begin(), cols.end());
    std::vector<unsigned> flat;
    flat.reserve(p * q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) flat.push_back(cols[j][i]);
    return flat;
}

}  // namespace

UnlabeledDiagram forget_labels(const Diagram& d) {
    if (!d.is_packed()) throw std::invalid_argument("forget_labels requires a packed diagram");
    if (d.rows() == 0) return UnlabeledDiagram{Diagram()};
    std::vector<std::vector<unsigned>> rows(d.rows(), std::vector<unsigned>(d.cols()));
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) rows[i][j] = d(i, j);
    // Minimize over row arrangements (distinct multiset permutations) with
    // columns re-sorted for each arrangement; the combined minimum is the
    // row-major lexicographic minimum over the whole permutation orbit.
    std::sort(rows.begin(), rows.end());
    std::vector<unsigned> best;
    do {
        std::vector<unsigned> flat = sorted_cols_reading(rows);
        if (best.empty() || flat < best) best = std::move(flat);
    } while (std::next_permutation(rows.begin(), rows.end()));
    return UnlabeledDiagram{Diagram(d.rows(), d.cols(), std::move(best))};
}

SpotTypes spot_types(const Diagram& d) {
    if (!d.is_packed()) throw std::invalid_argument("spot_types requires a packed diagram");
    SpotTypes t;
    for (std::size_t j = 0; j < d.cols(); ++j) {
        unsigned long long s = 0;
        for (std::size_t i = 0; i < d.rows(); ++i) s += d(i, j);
        ++t.alpha[static_cast<unsigned>(s)];
    }
    for (std::size_t i = 0; i < d.rows(); ++i) {
        unsigned long long s = 0;
        for (std::size_t j = 0; j < d.cols(); ++j) s += d(i, j);
        ++t.beta[static_cast<unsigned>(s)];
    }
    t.lines = d.lines();
    return t;
}

/* ---------------- Enumeration ---------------- */

namespace {

// All non-unit monomials of the given degree over variables 1..max_var.
void gen_monomials(unsigned degree, unsigned max_var, unsigned first_var,
                   std::vector<Monomial::Factor>& cur, std::vector<Monomial>& out) {
    if (degree == 0) {
        out.push_back(Monomial(cur));
        return;
    }
    for (unsigned v = first_var; v <= max_var; ++v)
        for (unsigned e = 1; e <= degree; ++e) {
            cur.emplace_back(v, e);
            gen_monomials(degree - e, max_var, v + 1, cur, out);
            cur.pop_back();
        }
}

void gen_words(unsigned remaining, unsigned max_var,
               const std::vector<std::vector<Monomial>>& mono_by_deg, Word& cur,
               std::vector<Word>& out) {
    if (remaining == 0) {
        if (is_compact(cur)) out.push_back(cur);
        return;
    }
    for (unsigned d = 1; d <= remaining; ++d)
        for (const auto& m : mono_by_deg[d]) {
            cur.push_back(m);
            gen_words(remaining - d, max_var, mono_by_deg, cur, out);
            cur.pop_back();
        }
}

}  // namespace

std::vector<Word> enumerate_codes(unsigned n) {
    if (n == 0) return {Word{}};
    // A compact word of weight n uses variable indices <= n, since every
    // index in the alphabet consumes at least one unit of weight.
    std::vector<std::vector<Monomial>> mono_by_deg(n + 1);
    for (unsigned d = 1; d <= n; ++d) {
        std::vector<Monomial::Factor> cur;
        gen_monomials(d, n, 1, cur, mono_by_deg[d]);
    }
    std::vector<Word> out;
    Word cur;
    gen_words(n, n, mono_by_deg, cur, out);
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

/* ---------------- Text forms ---------------- */

std::string to_string(const Diagram& d, char row_sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        if (i) os << row_sep;
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (j) os << ' ';
            os << d(i, j);
        }
    }
    return os.str();
}

Diagram parse_diagram(const std::string& text) {
    std::vector<std::vector<unsigned>> rows;
    std::string line;
    auto flush = [&](const std::string& ln) {
        std::istringstream is(ln);
        std::vector<unsigned> row;
        std::string tok;
        while (is >> tok) {
            // Reject signs and non-digits explicitly; stoul would accept "-1".
            for (char ch : tok)
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw std::invalid_argument("bad matrix entry: '" + tok + "'");
            unsigned long v = std::stoul(tok);
            if (v > 1000000ul) throw std::invalid_argument("matrix entry too large");
            row.push_back(static_cast<unsigned>(v));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    };
    std::string cur;
    for (char ch : text) {
        if (ch == '\n' || ch == ';') {
            flush(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    flush(cur);
    Diagram d = Diagram::from_rows(rows);  // validates rectangular
    if (d.rows() > 0 && !d.is_packed())
        throw std::invalid_argument("matrix has a zero row or zero column");
    return d;
}

}  // namespace ldiag
