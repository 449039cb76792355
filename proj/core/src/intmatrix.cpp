#include "xsq/intmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace xsq {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<long>(rows.size());
    cols_ = rows_ ? static_cast<long>(rows.begin()->size()) : 0;
    e_.assign(rows_ * cols_, mpz_class(0));
    long r = 0;
    for (const auto& row : rows) {
        if (static_cast<long>(row.size()) != cols_) throw std::invalid_argument("ragged rows");
        long c = 0;
        for (long v : row) at(r, c++) = v;
        ++r;
    }
}

IntMat IntMat::identity(long n) {
    IntMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::diag(const std::vector<mpz_class>& d) {
    IntMat m(static_cast<long>(d.size()), static_cast<long>(d.size()));
    for (long i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in mul");
    IntMat r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (long j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    IntMat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    IntMat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMat::isZero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

std::vector<mpz_class> IntMat::mulVec(const std::vector<mpz_class>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw std::invalid_argument("vec length mismatch");
    std::vector<mpz_class> r(rows_, mpz_class(0));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

IntMat IntMat::hcat(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
    IntMat r(a.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (long j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

IntMat IntMat::col(long c) const { return subCols(c, 1); }

IntMat IntMat::subCols(long from, long count) const {
    IntMat r(rows_, count);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < count; ++j) r.at(i, j) = at(i, from + j);
    return r;
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (long j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

namespace {

void swapCols(IntMat& m, IntMat& u, long a, long b) {
    for (long i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    for (long i = 0; i < u.rows(); ++i) std::swap(u.at(i, a), u.at(i, b));
}

void scaleCol(IntMat& m, IntMat& u, long c, long s) {
    for (long i = 0; i < m.rows(); ++i) m.at(i, c) *= s;
    for (long i = 0; i < u.rows(); ++i) u.at(i, c) *= s;
}

// col[dst] += f * col[src]
void addCol(IntMat& m, IntMat& u, long dst, long src, const mpz_class& f) {
    if (f == 0) return;
    for (long i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
    for (long i = 0; i < u.rows(); ++i) u.at(i, dst) += f * u.at(i, src);
}

// Combine columns a and b so that row r gets (g, 0), where g = gcd.
// Uses the Bezout matrix [[x, -t/g],[y, s/g]] on the column pair.
void bezoutCols(IntMat& m, IntMat& u, long r, long a, long b) {
    const mpz_class s = m.at(r, a), t = m.at(r, b);
    if (t == 0) return;
    if (s == 0) {
        swapCols(m, u, a, b);
        return;
    }
    mpz_class g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
    const mpz_class sd = s / g, td = t / g;
    for (long i = 0; i < m.rows(); ++i) {
        mpz_class ca = m.at(i, a), cb = m.at(i, b);
        m.at(i, a) = x * ca + y * cb;
        m.at(i, b) = sd * cb - td * ca;
    }
    for (long i = 0; i < u.rows(); ++i) {
        mpz_class ca = u.at(i, a), cb = u.at(i, b);
        u.at(i, a) = x * ca + y * cb;
        u.at(i, b) = sd * cb - td * ca;
    }
}

}  // namespace

HnfResult hermiteNormalForm(const IntMat& m) {
    IntMat h = m;
    IntMat u = IntMat::identity(m.cols());
    long pivotCol = 0;
    for (long r = 0; r < h.rows() && pivotCol < h.cols(); ++r) {
        // clear row r to the right of pivotCol
        long nz = -1;
        for (long c = pivotCol; c < h.cols(); ++c)
            if (h.at(r, c) != 0) { nz = c; break; }
        if (nz < 0) continue;
        if (nz != pivotCol) swapCols(h, u, pivotCol, nz);
        for (long c = pivotCol + 1; c < h.cols(); ++c)
            if (h.at(r, c) != 0) bezoutCols(h, u, r, pivotCol, c);
        if (h.at(r, pivotCol) < 0) scaleCol(h, u, pivotCol, -1);
        // reduce entries left of the pivot into [0, pivot)
        const mpz_class& piv = h.at(r, pivotCol);
        for (long c = 0; c < pivotCol; ++c) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(r, c).get_mpz_t(), piv.get_mpz_t());
            addCol(h, u, c, pivotCol, -q);
        }
        ++pivotCol;
    }
    return {h, u};
}

IntMat kernelBasis(const IntMat& m) {
    // HNF of the stacked matrix [m; I]: kernel columns are those whose m-part
    // became zero; their I-part rows give the kernel basis.
    IntMat st(m.rows() + m.cols(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) st.at(i, j) = m.at(i, j);
    for (long j = 0; j < m.cols(); ++j) st.at(m.rows() + j, j) = 1;
    // run column reduction only on the top block
    IntMat h = st;
    IntMat u = IntMat::identity(m.cols());
    long pivotCol = 0;
    for (long r = 0; r < m.rows() && pivotCol < h.cols(); ++r) {
        long nz = -1;
        for (long c = pivotCol; c < h.cols(); ++c)
            if (h.at(r, c) != 0) { nz = c; break; }
        if (nz < 0) continue;
        if (nz != pivotCol) swapCols(h, u, pivotCol, nz);
        for (long c = pivotCol + 1; c < h.cols(); ++c)
            if (h.at(r, c) != 0) bezoutCols(h, u, r, pivotCol, c);
        ++pivotCol;
    }
    std::vector<long> kerCols;
    for (long c = 0; c < h.cols(); ++c) {
        bool zero = true;
        for (long r = 0; r < m.rows(); ++r)
            if (h.at(r, c) != 0) { zero = false; break; }
        if (zero) kerCols.push_back(c);
    }
    IntMat k(m.cols(), static_cast<long>(kerCols.size()));
    for (long j = 0; j < k.cols(); ++j)
        for (long i = 0; i < m.cols(); ++i) k.at(i, j) = h.at(m.rows() + i, kerCols[j]);
    return k;
}

long rankOf(const IntMat& m) {
    HnfResult r = hermiteNormalForm(m);
    long rank = 0;
    for (long c = 0; c < r.h.cols(); ++c) {
        bool zero = true;
        for (long i = 0; i < r.h.rows(); ++i)
            if (r.h.at(i, c) != 0) { zero = false; break; }
        if (!zero) ++rank;
    }
    return rank;
}

SnfResult smithNormalForm(const IntMat& m) {
    IntMat s = m;
    IntMat u = IntMat::identity(m.rows());
    IntMat v = IntMat::identity(m.cols());
    const long n = std::min(m.rows(), m.cols());

    auto rowBezout = [&](long r, long a, long b) {
        // rows a, b combined so that column r gets (g, 0)
        const mpz_class sv = s.at(a, r), tv = s.at(b, r);
        if (tv == 0) return;
        if (sv == 0) {
            for (long j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
            for (long j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
            return;
        }
        mpz_class g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), sv.get_mpz_t(), tv.get_mpz_t());
        const mpz_class sd = sv / g, td = tv / g;
        for (long j = 0; j < s.cols(); ++j) {
            mpz_class ra = s.at(a, j), rb = s.at(b, j);
            s.at(a, j) = x * ra + y * rb;
            s.at(b, j) = sd * rb - td * ra;
        }
        for (long j = 0; j < u.cols(); ++j) {
            mpz_class ra = u.at(a, j), rb = u.at(b, j);
            u.at(a, j) = x * ra + y * rb;
            u.at(b, j) = sd * rb - td * ra;
        }
    };
    auto colBezout = [&](long r, long a, long b) {
        const mpz_class sv = s.at(r, a), tv = s.at(r, b);
        if (tv == 0) return;
        if (sv == 0) {
            for (long i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
            for (long i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
            return;
        }
        mpz_class g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), sv.get_mpz_t(), tv.get_mpz_t());
        const mpz_class sd = sv / g, td = tv / g;
        for (long i = 0; i < s.rows(); ++i) {
            mpz_class ca = s.at(i, a), cb = s.at(i, b);
            s.at(i, a) = x * ca + y * cb;
            s.at(i, b) = sd * cb - td * ca;
        }
        for (long i = 0; i < v.rows(); ++i) {
            mpz_class ca = v.at(i, a), cb = v.at(i, b);
            v.at(i, a) = x * ca + y * cb;
            v.at(i, b) = sd * cb - td * ca;
        }
    };

    for (long k = 0; k < n; ++k) {
        // move a nonzero entry into (k, k)
        long pr = -1, pc = -1;
        for (long i = k; i < s.rows() && pr < 0; ++i)
            for (long j = k; j < s.cols(); ++j)
                if (s.at(i, j) != 0) { pr = i; pc = j; break; }
        if (pr < 0) break;
        if (pr != k) {
            for (long j = 0; j < s.cols(); ++j) std::swap(s.at(k, j), s.at(pr, j));
            for (long j = 0; j < u.cols(); ++j) std::swap(u.at(k, j), u.at(pr, j));
        }
        if (pc != k) {
            for (long i = 0; i < s.rows(); ++i) std::swap(s.at(i, k), s.at(i, pc));
            for (long i = 0; i < v.rows(); ++i) std::swap(v.at(i, k), v.at(i, pc));
        }
        bool again = true;
        while (again) {
            for (long i = k + 1; i < s.rows(); ++i) rowBezout(k, k, i);
            for (long j = k + 1; j < s.cols(); ++j) colBezout(k, k, j);
            again = false;
            for (long i = k + 1; i < s.rows(); ++i)
                if (s.at(i, k) != 0) { again = true; break; }
        }
        // enforce divisibility d_k | entries of the remaining block
        bool fixed = false;
        while (!fixed) {
            fixed = true;
            for (long i = k + 1; i < s.rows() && fixed; ++i)
                for (long j = k + 1; j < s.cols() && fixed; ++j)
                    if (s.at(i, j) % s.at(k, k) != 0) {
                        // add row i to row k, then re-clear
                        for (long c = 0; c < s.cols(); ++c) s.at(k, c) += s.at(i, c);
                        for (long c = 0; c < u.cols(); ++c) u.at(k, c) += u.at(i, c);
                        bool a2 = true;
                        while (a2) {
                            for (long r2 = k + 1; r2 < s.rows(); ++r2) rowBezout(k, k, r2);
                            for (long c2 = k + 1; c2 < s.cols(); ++c2) colBezout(k, k, c2);
                            a2 = false;
                            for (long r2 = k + 1; r2 < s.rows(); ++r2)
                                if (s.at(r2, k) != 0) { a2 = true; break; }
                        }
                        fixed = false;
                    }
        }
        if (s.at(k, k) < 0) {
            for (long j = 0; j < s.cols(); ++j) s.at(k, j) = -s.at(k, j);
            for (long j = 0; j < u.cols(); ++j) u.at(k, j) = -u.at(k, j);
        }
    }
    return {s, u, v};
}

std::vector<mpz_class> invariantFactors(const IntMat& m) {
    SnfResult r = smithNormalForm(m);
    std::vector<mpz_class> d;
    for (long k = 0; k < std::min(r.s.rows(), r.s.cols()); ++k)
        if (r.s.at(k, k) != 0) d.push_back(r.s.at(k, k));
    return d;
}

}  // namespace xsq
