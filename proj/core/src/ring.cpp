#include "xsq/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace xsq {

namespace {

bool isPrimeLong(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

mpq_class reduceModP(const mpq_class& v, long p) {
    // FiniteField scalars are integers reduced to [0, p)
    mpz_class num = v.get_num();
    if (v.get_den() != 1) {
        // invert the denominator mod p
        mpz_class den = v.get_den(), inv, mod = p;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::invalid_argument("denominator not invertible mod p");
        num *= inv;
    }
    mpz_class mod = p;
    num = ((num % mod) + mod) % mod;
    return mpq_class(num);
}

}  // namespace

std::string BaseRing::str() const {
    switch (kind) {
        case BaseKind::Integers: return "Z";
        case BaseKind::Rationals: return "Q";
        case BaseKind::IntegersLocalizedAt: return "Z_(" + std::to_string(p) + ")";
        case BaseKind::FiniteField: return "F_" + std::to_string(p);
    }
    return "?";
}

RingElt::RingElt(BaseRing ring, mpq_class a, mpq_class b)
    : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
    switch (ring_.kind) {
        case BaseKind::Integers:
            if (a_.get_den() != 1 || b_.get_den() != 1)
                throw std::invalid_argument("integer ring element with denominator");
            break;
        case BaseKind::IntegersLocalizedAt: {
            mpz_class q = ring_.p;
            if (mpz_divisible_p(a_.get_den().get_mpz_t(), q.get_mpz_t()) ||
                mpz_divisible_p(b_.get_den().get_mpz_t(), q.get_mpz_t()))
                throw std::invalid_argument("denominator divisible by the local prime");
            break;
        }
        case BaseKind::FiniteField:
            a_ = reduceModP(a_, ring_.p);
            b_ = reduceModP(b_, ring_.p);
            break;
        case BaseKind::Rationals: break;
    }
}

bool RingElt::isUnit() const {
    // a + bx is a unit iff a is a unit in the base ring
    switch (ring_.kind) {
        case BaseKind::Integers: return a_ == 1 || a_ == -1;
        case BaseKind::Rationals: return a_ != 0;
        case BaseKind::FiniteField: return a_ != 0;
        case BaseKind::IntegersLocalizedAt: {
            if (a_ == 0) return false;
            mpz_class q = ring_.p;
            return !mpz_divisible_p(a_.get_num().get_mpz_t(), q.get_mpz_t());
        }
    }
    return false;
}

void RingElt::checkCompatible(const RingElt& o) const {
    if (!(ring_ == o.ring_)) throw std::invalid_argument("mismatched base rings");
}

RingElt RingElt::operator+(const RingElt& o) const {
    checkCompatible(o);
    return RingElt(ring_, a_ + o.a_, b_ + o.b_);
}

RingElt RingElt::operator-(const RingElt& o) const {
    checkCompatible(o);
    return RingElt(ring_, a_ - o.a_, b_ - o.b_);
}

RingElt RingElt::operator*(const RingElt& o) const {
    checkCompatible(o);
    return RingElt(ring_, a_ * o.a_, a_ * o.b_ + b_ * o.a_);
}

std::string RingElt::str() const {
    std::ostringstream os;
    os << a_.get_str();
    if (b_ != 0) os << (b_ > 0 ? "+" : "") << b_.get_str() << "x";
    return os.str();
}

RingElt ringMul(const RingElt& r, const RingElt& s) { return r * s; }

PrimeIdeal PrimeIdeal::maximalAt(long q) {
    if (!isPrimeLong(q)) throw std::invalid_argument("maximalAt: q not prime");
    return PrimeIdeal(true, q);
}

Lattice PrimeIdeal::lattice() const {
    if (maximal_) {
        IntMat g(2, 2);
        g.at(0, 0) = q_;  // (q, 0)
        g.at(1, 1) = 1;   // (0, 1) = x
        return Lattice::fromColumns(g);
    }
    IntMat g(2, 1);
    g.at(1, 0) = 1;  // x
    return Lattice::fromColumns(g);
}

bool PrimeIdeal::contains(const PrimeIdeal& other) const {
    return lattice().contains(other.lattice());
}

BaseRing PrimeIdeal::residueField() const {
    return maximal_ ? BaseRing::finiteField(q_) : BaseRing::rationals();
}

BaseRing PrimeIdeal::localizedBase() const {
    return maximal_ ? BaseRing::localizedAt(q_) : BaseRing::rationals();
}

std::string PrimeIdeal::str() const {
    return maximal_ ? "(" + std::to_string(q_) + ",x)" : "(x)";
}

Ideal::Ideal(BaseRing ring, std::vector<RingElt> gens) : gens_(std::move(gens)), lattice_(2) {
    if (ring.kind != BaseKind::Integers)
        throw std::invalid_argument("Ideal lattices are for the integral ring");
    // lattice generated by the generators and their x-multiples; that set is
    // already closed under (a, b) -> (0, a)
    IntMat cols(2, static_cast<long>(gens_.size()) * 2);
    long c = 0;
    for (const auto& g : gens_) {
        cols.at(0, c) = g.a().get_num();
        cols.at(1, c) = g.b().get_num();
        ++c;
        cols.at(0, c) = 0;
        cols.at(1, c) = g.a().get_num();  // x * g
        ++c;
    }
    lattice_ = Lattice::fromColumns(cols);
}

Ideal Ideal::fromLattice(Lattice l) {
    if (l.ambientDim() != 2) throw std::invalid_argument("ideal lattice must live in Z^2");
    // verify closure under the x-action
    for (long c = 0; c < l.basis().cols(); ++c) {
        std::vector<mpz_class> v{mpz_class(0), l.basis().at(0, c)};
        if (!l.member(v)) throw std::invalid_argument("lattice not closed under x-action");
    }
    Ideal i;
    i.lattice_ = std::move(l);
    const auto& b = i.lattice_.basis();
    for (long c = 0; c < b.cols(); ++c)
        i.gens_.push_back(RingElt(BaseRing::integers(), mpq_class(b.at(0, c)), mpq_class(b.at(1, c))));
    return i;
}

Ideal Ideal::zeroIdeal() { return fromLattice(Lattice::zero(2)); }
Ideal Ideal::unitIdeal() { return fromLattice(Lattice::full(2)); }

Ideal Ideal::ofPrime(const PrimeIdeal& p) { return fromLattice(p.lattice()); }

bool Ideal::member(const RingElt& r) const {
    std::vector<mpz_class> v{r.a().get_num(), r.b().get_num()};
    return lattice_.member(v);
}

bool Ideal::isUnit() const {
    return member(RingElt::one(BaseRing::integers()));
}

std::string Ideal::str() const { return "ideal" + lattice_.str(); }

Ideal annihilatorOfElement(const RingElt& r) {
    // (c + dx)(a + bx) = ca + (cb + da)x = 0:  solve the 2x2 integer system
    if (r.ring().kind == BaseKind::Rationals || r.ring().kind == BaseKind::FiniteField)
        throw std::invalid_argument("annihilator lattice needs an integral base");
    mpz_class a = r.a().get_num() * r.b().get_den();  // scale to integers; the
    mpz_class b = r.b().get_num() * r.a().get_den();  // annihilator is scale-invariant
    IntMat m(2, 2);
    m.at(0, 0) = a;            // ca = 0
    m.at(1, 0) = b;            // cb + da = 0
    m.at(1, 1) = a;
    return Ideal::fromLattice(Lattice::fromColumns(kernelBasis(m)));
}

bool idealMembership(const RingElt& r, const Ideal& i) { return i.member(r); }

std::vector<PrimeIdeal> specEnumerate(long bound) {
    std::vector<PrimeIdeal> out;
    out.push_back(PrimeIdeal::minimalX());
    // certification: x is nilpotent, so it lies in every prime
    BaseRing z = BaseRing::integers();
    if (!(RingElt::x(z) * RingElt::x(z)).isZero())
        throw std::logic_error("x is not nilpotent");
    for (long q = 2; q <= bound; ++q) {
        if (!isPrimeLong(q)) continue;
        // quotient R/(q,x) = F_q: sample products of nonzero residues for
        // zero-divisors
        bool domain = true;
        for (long u = 1; u < q && domain; ++u)
            for (long v = 1; v < q; ++v)
                if ((u * v) % q == 0) { domain = false; break; }
        if (domain) out.push_back(PrimeIdeal::maximalAt(q));
    }
    return out;
}

BaseRing residueField(const PrimeIdeal& p) { return p.residueField(); }

RingElt LocalizedRing::localize(const RingElt& global) const {
    return RingElt(base, global.a(), global.b());
}

bool LocalizedRing::isUnit(const RingElt& localElt) const { return localElt.isUnit(); }

LocalizedRing localizeRing(const PrimeIdeal& p) { return LocalizedRing{p.localizedBase()}; }

}  // namespace xsq
