#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace xsq {

// Element of the Prufer group Z(p^infty) = Z[1/p]/Z, stored as the reduced
// fraction num/p^expo mod 1 with 0 <= num < p^expo and gcd(num, p) = 1
// unless num = 0 (then expo = 0). The canonical form is unique, so equality
// is field-wise.
class PruferElt {
public:
    PruferElt() : p_(2), num_(0), expo_(0) {}
    PruferElt(long p, mpz_class num, long expo);

    static PruferElt zero(long p) { return PruferElt(p, 0, 0); }

    long prime() const { return p_; }
    const mpz_class& num() const { return num_; }
    long expo() const { return expo_; }

    bool isZero() const { return num_ == 0; }

    // Smallest k >= 1 with k*a = 0; a power of p (1 for the zero element).
    mpz_class additiveOrder() const;

    PruferElt operator+(const PruferElt& o) const;
    PruferElt operator-() const;
    PruferElt operator-(const PruferElt& o) const { return *this + (-o); }
    bool operator==(const PruferElt& o) const = default;

    std::string str() const;

private:
    long p_;
    mpz_class num_;
    long expo_;
};

PruferElt pruferAdd(const PruferElt& a, const PruferElt& b);
PruferElt pruferScale(const mpz_class& n, const PruferElt& a);

}  // namespace xsq
