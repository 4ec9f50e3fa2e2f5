#ifndef LDIAG_PARTITIONS_HPP
#define LDIAG_PARTITIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "ldiag/bigint.hpp"
#include "ldiag/diagrams.hpp"

namespace ldiag {

// Default ceiling on the ground-set size for the enumerative operations;
// beyond this the orbit counts stop being desk-checkable anyway.
inline constexpr unsigned kPartitionBound = 7;

// Set partition of {1..n}.  Blocks are sorted internally and ordered by
// their minimal element, so equal partitions compare equal structurally.
struct SetPartition {
    unsigned n = 0;
    std::vector<std::vector<unsigned>> blocks;
    bool operator==(const SetPartition&) const = default;
};

// Canonicalizes (sorts blocks and block lists) and validates that blocks
// partition {1..n} with no empty block.
SetPartition make_partition(unsigned n, std::vector<std::vector<unsigned>> blocks);

// All set partitions of {1..n}; Bell(n) of them.  Requires n <= bound.
std::vector<SetPartition> enumerate_partitions(unsigned n, unsigned bound = kPartitionBound);

// Type of a partition: type[k] = number of blocks of size k.
MultiIndex partition_type(const SetPartition& p);

// Incidence diagram of two partitions of the same set: rows are the blocks
// of p1, columns the blocks of p2 (both in block-minimum order), entries the
// intersection sizes.  Always packed, with n lines in total.
Diagram incidence(const SetPartition& p1, const SetPartition& p2);

// Multiplicity of each unlabeled diagram class among the Bell(n)^2 incidence
// diagrams of ordered partition pairs.  Requires n <= bound.
std::map<UnlabeledDiagram, BigInt> diagram_multiplicities(unsigned n,
                                                          unsigned bound = kPartitionBound);

// Exact polynomial in the commuting families L1, L2, ... and V1, V2, ...,
// used to compare the two expansions of the product formula coefficients.
class GenPoly {
public:
    // A variable is (family, index): family 0 = L, family 1 = V.
    using Var = std::pair<unsigned, unsigned>;
    using Mono = std::vector<std::pair<Var, unsigned>>;  // sorted, exponents > 0

    GenPoly() = default;
    GenPoly(int c) : GenPoly(BigInt(c)) {}
    explicit GenPoly(BigInt c);
    static GenPoly L(unsigned k);
    static GenPoly V(unsigned k);

    bool is_zero() const { return terms_.empty(); }
    GenPoly& operator+=(const GenPoly& o);
    friend GenPoly operator+(GenPoly a, const GenPoly& b) { a += b; return a; }
    friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
    bool operator==(const GenPoly&) const = default;

    const std::map<Mono, BigInt>& terms() const { return terms_; }
    std::string str() const;  // e.g. "L1^2*V3" terms joined with +/-

private:
    std::map<Mono, BigInt> terms_;
};

// Both sides of the degree-n coefficient of the product formula:
//   lhs: the n-th exponential Bell polynomial in the L's times the one in
//        the V's (one per factor of the functional product);
//   rhs: sum over unlabeled diagram classes of multiplicity times
//        L^(white-spot type) * V^(black-spot type).
// The check passes when they agree as exact polynomials.
struct HadamardCheck {
    GenPoly lhs, rhs;
    bool equal = false;
};
HadamardCheck hadamard_expansion_check(unsigned n, unsigned bound = kPartitionBound);

}  // namespace ldiag

#endif
