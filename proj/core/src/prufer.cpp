#include "xsq/prufer.hpp"

#include <stdexcept>

namespace xsq {

PruferElt::PruferElt(long p, mpz_class num, long expo) : p_(p), num_(std::move(num)), expo_(expo) {
    if (p < 2) throw std::invalid_argument("PruferElt: p must be a prime >= 2");
    if (expo_ < 0) throw std::invalid_argument("PruferElt: negative exponent");
    mpz_class q = p;
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(expo_));
    num_ = ((num_ % den) + den) % den;
    // strip common p-factors so gcd(num, p) = 1 or num = 0
    while (num_ != 0 && expo_ > 0 && mpz_divisible_p(num_.get_mpz_t(), q.get_mpz_t())) {
        num_ /= q;
        --expo_;
    }
    if (num_ == 0) expo_ = 0;
}

mpz_class PruferElt::additiveOrder() const {
    mpz_class q = p_, ord;
    mpz_pow_ui(ord.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(expo_));
    return ord;
}

PruferElt PruferElt::operator+(const PruferElt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("PruferElt: mismatched primes");
    long e = std::max(expo_, o.expo_);
    mpz_class q = p_, fa, fb;
    mpz_pow_ui(fa.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e - expo_));
    mpz_pow_ui(fb.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e - o.expo_));
    return PruferElt(p_, num_ * fa + o.num_ * fb, e);
}

PruferElt PruferElt::operator-() const { return PruferElt(p_, -num_, expo_); }

std::string PruferElt::str() const {
    if (isZero()) return "0";
    mpz_class den = additiveOrder();
    return num_.get_str() + "/" + den.get_str();
}

PruferElt pruferAdd(const PruferElt& a, const PruferElt& b) { return a + b; }

PruferElt pruferScale(const mpz_class& n, const PruferElt& a) {
    return PruferElt(a.prime(), n * a.num(), a.expo());
}

}  // namespace xsq
