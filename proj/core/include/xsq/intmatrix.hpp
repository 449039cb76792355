#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace xsq {

// Dense matrix of arbitrary-precision integers. Everything downstream
// (ideal lattices, presentations, Smith reductions) sits on this type, so
// there are no overflow semantics anywhere in the engine.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols, mpz_class(0)) {}
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(long n);
    static IntMat zero(long rows, long cols) { return IntMat(rows, cols); }
    static IntMat diag(const std::vector<mpz_class>& d);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    mpz_class& at(long r, long c) { return e_[r * cols_ + c]; }
    const mpz_class& at(long r, long c) const { return e_[r * cols_ + c]; }

    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    bool operator==(const IntMat& o) const = default;

    IntMat transpose() const;
    bool isZero() const;
    std::vector<mpz_class> mulVec(const std::vector<mpz_class>& v) const;

    // columns appended side by side
    static IntMat hcat(const IntMat& a, const IntMat& b);
    IntMat col(long c) const;
    IntMat subCols(long from, long count) const;

    std::string str() const;

private:
    long rows_, cols_;
    std::vector<mpz_class> e_;
};

struct HnfResult {
    IntMat h;  // column-style Hermite normal form, h = m * u
    IntMat u;  // unimodular
};

struct SnfResult {
    IntMat s;  // diagonal, d1 | d2 | ..., entries >= 0
    IntMat u;  // unimodular, u * m * v = s
    IntMat v;  // unimodular
};

// Column-style Hermite normal form: nonzero columns first, pivots positive,
// entries right of a pivot zero, entries left of it reduced to [0, pivot).
// The column span (integer lattice generated by the columns) is preserved.
HnfResult hermiteNormalForm(const IntMat& m);

// Smith normal form with the divisibility chain d1 | d2 | ... and
// non-negative invariant factors.
SnfResult smithNormalForm(const IntMat& m);

// Z-basis of { v : m v = 0 }, columns of the result.
IntMat kernelBasis(const IntMat& m);

// rank over Q
long rankOf(const IntMat& m);

// Nonzero diagonal entries of the Smith form.
std::vector<mpz_class> invariantFactors(const IntMat& m);

}  // namespace xsq
