#pragma once

#include "xsq/intmatrix.hpp"

#include <optional>
#include <vector>

namespace xsq {

// Sublattice of Z^n, kept as a column-style HNF basis so that equal lattices
// have identical representations.
class Lattice {
public:
    explicit Lattice(long ambientDim) : dim_(ambientDim), basis_(ambientDim, 0) {}

    static Lattice fromColumns(const IntMat& gens);
    static Lattice full(long n) { return fromColumns(IntMat::identity(n)); }
    static Lattice zero(long n) { return Lattice(n); }

    long ambientDim() const { return dim_; }
    long rank() const { return basis_.cols(); }
    const IntMat& basis() const { return basis_; }

    bool member(const std::vector<mpz_class>& v) const;
    bool contains(const Lattice& other) const;
    bool operator==(const Lattice& other) const { return basis_ == other.basis_; }

    Lattice sum(const Lattice& other) const;
    Lattice intersect(const Lattice& other) const;

    // Solve basis * x = v over Z.
    std::optional<std::vector<mpz_class>> solve(const std::vector<mpz_class>& v) const;

    std::string str() const { return basis_.str(); }

private:
    long dim_;
    IntMat basis_;  // HNF, zero columns dropped
};

// { v in Z^cols : A v = 0 mod modulus } as a full-rank-friendly lattice.
Lattice congruenceLattice(const IntMat& a, const mpz_class& modulus);

// { v : A v in span(B) } (integer preimage of a column span).
Lattice preimageLattice(const IntMat& a, const IntMat& b);

// Presentation of the quotient L1 / L2 (requires L2 contained in L1):
// generators are the columns of L1's basis, relations express L2 in them.
struct QuotientPresentation {
    IntMat gens;       // basis of L1 (columns, in Z^n coordinates)
    IntMat relations;  // columns: coefficients of L2 generators in gens
};
QuotientPresentation quotientPresentation(const Lattice& l1, const Lattice& l2);

}  // namespace xsq
