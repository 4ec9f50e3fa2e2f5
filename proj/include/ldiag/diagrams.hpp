#ifndef LDIAG_DIAGRAMS_HPP
#define LDIAG_DIAGRAMS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ldiag/words.hpp"

namespace ldiag {

// Finitely supported multiplicity vector: index >= 1 -> positive count.
using MultiIndex = std::map<unsigned, unsigned long long>;

// Labeled diagram: a rows x cols matrix of nonnegative integers.  Row i is
// the i-th black spot, column j the j-th white spot, entry (i,j) the number
// of lines between them.  A diagram proper is packed: no zero row or column.
// The class stores any nonnegative matrix so that validation failures can be
// reported where they matter; packedness is enforced by the operations below.
class Diagram {
public:
    Diagram() = default;  // empty 0 x 0 diagram
    Diagram(std::size_t rows, std::size_t cols, std::vector<unsigned> entries);
    static Diagram from_rows(const std::vector<std::vector<unsigned>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<unsigned>& entries() const { return e_; }

    // Total number of lines (sum of all entries).
    unsigned long long lines() const;
    bool is_packed() const;

    bool operator==(const Diagram&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<unsigned> e_;
};

// Deterministic total order: by (rows, cols), then entries lexicographically.
bool diagram_less(const Diagram& a, const Diagram& b);

// Code of a packed diagram: one monomial per row, m_i = prod_j x_j^{d(i,j)}.
// The result is a compact word; throws if d is not packed.
Word code_of(const Diagram& d);
// Inverse of code_of on compact words; throws if w is not compact.
Diagram diagram_of(const Word& w);
// Block-diagonal concatenation: d1's spots first, then d2's.  Matches
// shifted concatenation of codes: code_of(concat) = shifted_concat of codes.
Diagram concat_labeled(const Diagram& d1, const Diagram& d2);
// Keeps the given 1-based rows (in increasing order) and deletes the columns
// that become all zero.  The restriction of a packed diagram stays packed.
Diagram restrict_rows(const Diagram& d, std::vector<unsigned> rows);

// Unlabeled diagram: the canonical representative of the orbit of a packed
// diagram under independent row and column permutations.  The representative
// is the row-major lexicographically smallest matrix in the orbit.
struct UnlabeledDiagram {
    Diagram canon;
    bool operator==(const UnlabeledDiagram&) const = default;
};
bool operator<(const UnlabeledDiagram& a, const UnlabeledDiagram& b);
UnlabeledDiagram forget_labels(const Diagram& d);

// White-spot type alpha (column sums), black-spot type beta (row sums), both
// as multiplicity vectors "alpha_k = number of columns/rows with sum k".
// Invariant under forget_labels.
struct SpotTypes {
    MultiIndex alpha, beta;
    unsigned long long lines = 0;
};
SpotTypes spot_types(const Diagram& d);

// All codes with exactly n lines (equivalently all packed diagrams with n
// lines, via diagram_of).  n = 0 gives the empty code only.
std::vector<Word> enumerate_codes(unsigned n);

// Matrix text: one row per line (or per ';'), entries space-separated,
// blank rows ignored.  parse_diagram validates rectangularity and packedness.
std::string to_string(const Diagram& d, char row_sep = '\n');
Diagram parse_diagram(const std::string& text);

}  // namespace ldiag

#endif
