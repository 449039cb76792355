#include "xsq/lattice.hpp"

#include <stdexcept>

namespace xsq {

Lattice Lattice::fromColumns(const IntMat& gens) {
    Lattice l(gens.rows());
    HnfResult r = hermiteNormalForm(gens);
    long nz = 0;
    for (long c = 0; c < r.h.cols(); ++c) {
        bool zero = true;
        for (long i = 0; i < r.h.rows(); ++i)
            if (r.h.at(i, c) != 0) { zero = false; break; }
        if (!zero) ++nz;
    }
    l.basis_ = r.h.subCols(0, nz);
    return l;
}

std::optional<std::vector<mpz_class>> Lattice::solve(const std::vector<mpz_class>& v) const {
    // basis is in column HNF: solve by forward elimination on pivot rows
    std::vector<mpz_class> x(basis_.cols(), mpz_class(0));
    std::vector<mpz_class> rem = v;
    long row = 0;
    for (long c = 0; c < basis_.cols(); ++c) {
        // pivot row of column c: first nonzero entry
        while (row < dim_ && basis_.at(row, c) == 0) {
            if (rem[row] != 0) return std::nullopt;
            ++row;
        }
        if (row == dim_) return std::nullopt;
        const mpz_class& piv = basis_.at(row, c);
        if (rem[row] % piv != 0) return std::nullopt;
        x[c] = rem[row] / piv;
        for (long i = row; i < dim_; ++i) rem[i] -= x[c] * basis_.at(i, c);
        ++row;
    }
    for (long i = 0; i < dim_; ++i)
        if (rem[i] != 0) return std::nullopt;
    return x;
}

bool Lattice::member(const std::vector<mpz_class>& v) const { return solve(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
    for (long c = 0; c < other.basis_.cols(); ++c) {
        std::vector<mpz_class> v(dim_);
        for (long i = 0; i < dim_; ++i) v[i] = other.basis_.at(i, c);
        if (!member(v)) return false;
    }
    return true;
}

Lattice Lattice::sum(const Lattice& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("lattice dim mismatch");
    return fromColumns(IntMat::hcat(basis_, other.basis_));
}

Lattice Lattice::intersect(const Lattice& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("lattice dim mismatch");
    if (basis_.cols() == 0 || other.basis_.cols() == 0) return Lattice(dim_);
    // kernel of [B1 | -B2]; the B1-part of each kernel vector gives a point
    // in the intersection
    IntMat neg = other.basis_;
    for (long i = 0; i < neg.rows(); ++i)
        for (long j = 0; j < neg.cols(); ++j) neg.at(i, j) = -neg.at(i, j);
    IntMat paired = IntMat::hcat(basis_, neg);
    IntMat k = kernelBasis(paired);
    IntMat pts(dim_, k.cols());
    for (long c = 0; c < k.cols(); ++c) {
        std::vector<mpz_class> coeff(basis_.cols());
        for (long i = 0; i < basis_.cols(); ++i) coeff[i] = k.at(i, c);
        std::vector<mpz_class> p = basis_.mulVec(coeff);
        for (long i = 0; i < dim_; ++i) pts.at(i, c) = p[i];
    }
    return fromColumns(pts);
}

Lattice congruenceLattice(const IntMat& a, const mpz_class& modulus) {
    // v with A v = modulus * w for some integer w: kernel of [A | -modulus*I],
    // then project onto the v part.
    const long n = a.cols(), k = a.rows();
    IntMat paired(k, n + k);
    for (long i = 0; i < k; ++i) {
        for (long j = 0; j < n; ++j) paired.at(i, j) = a.at(i, j);
        paired.at(i, n + i) = -modulus;
    }
    IntMat ker = kernelBasis(paired);
    IntMat proj(n, ker.cols());
    for (long c = 0; c < ker.cols(); ++c)
        for (long i = 0; i < n; ++i) proj.at(i, c) = ker.at(i, c);
    return Lattice::fromColumns(proj);
}

Lattice preimageLattice(const IntMat& a, const IntMat& b) {
    const long n = a.cols();
    if (b.cols() == 0) return Lattice::fromColumns(kernelBasis(a));
    IntMat neg = b;
    for (long i = 0; i < neg.rows(); ++i)
        for (long j = 0; j < neg.cols(); ++j) neg.at(i, j) = -neg.at(i, j);
    IntMat paired = IntMat::hcat(a, neg);
    IntMat ker = kernelBasis(paired);
    IntMat proj(n, ker.cols());
    for (long c = 0; c < ker.cols(); ++c)
        for (long i = 0; i < n; ++i) proj.at(i, c) = ker.at(i, c);
    return Lattice::fromColumns(proj);
}

QuotientPresentation quotientPresentation(const Lattice& l1, const Lattice& l2) {
    if (!l1.contains(l2)) throw std::invalid_argument("quotient: L2 not inside L1");
    QuotientPresentation q;
    q.gens = l1.basis();
    IntMat rel(l1.rank(), l2.rank());
    for (long c = 0; c < l2.basis().cols(); ++c) {
        std::vector<mpz_class> v(l2.ambientDim());
        for (long i = 0; i < l2.ambientDim(); ++i) v[i] = l2.basis().at(i, c);
        auto x = l1.solve(v);
        for (long i = 0; i < l1.rank(); ++i) rel.at(i, c) = (*x)[i];
    }
    q.relations = rel;
    return q;
}

}  // namespace xsq
