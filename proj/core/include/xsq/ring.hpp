#pragma once

#include "xsq/lattice.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace xsq {

enum class BaseKind { Integers, Rationals, IntegersLocalizedAt, FiniteField };

// Scalar part of the dual-number family A[x]/(x^2), A one of Z, Q, Z_(p), F_p.
struct BaseRing {
    BaseKind kind = BaseKind::Integers;
    long p = 0;  // the prime for IntegersLocalizedAt / FiniteField

    static BaseRing integers() { return {BaseKind::Integers, 0}; }
    static BaseRing rationals() { return {BaseKind::Rationals, 0}; }
    static BaseRing localizedAt(long p) { return {BaseKind::IntegersLocalizedAt, p}; }
    static BaseRing finiteField(long p) { return {BaseKind::FiniteField, p}; }

    bool operator==(const BaseRing&) const = default;
    std::string str() const;
};

// a + b x with x^2 = 0, scalars exact. For Integers and FiniteField the
// scalars are kept integral (and reduced mod p for FiniteField); for
// IntegersLocalizedAt(p) denominators stay coprime to p.
class RingElt {
public:
    RingElt() : ring_(BaseRing::integers()), a_(0), b_(0) {}
    RingElt(BaseRing ring, mpq_class a, mpq_class b);

    static RingElt fromInt(BaseRing ring, long a, long b = 0) {
        return RingElt(ring, mpq_class(a), mpq_class(b));
    }
    static RingElt one(BaseRing ring) { return fromInt(ring, 1); }
    static RingElt x(BaseRing ring) { return fromInt(ring, 0, 1); }

    const BaseRing& ring() const { return ring_; }
    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }

    bool isZero() const { return a_ == 0 && b_ == 0; }
    bool isUnit() const;

    RingElt operator+(const RingElt& o) const;
    RingElt operator-(const RingElt& o) const;
    RingElt operator*(const RingElt& o) const;
    bool operator==(const RingElt& o) const = default;

    std::string str() const;

private:
    void checkCompatible(const RingElt& o) const;
    BaseRing ring_;
    mpq_class a_, b_;
};

RingElt ringMul(const RingElt& r, const RingElt& s);

// Prime of Z[x]/(x^2): the minimal prime (x) or a maximal prime (q, x).
class PrimeIdeal {
public:
    static PrimeIdeal minimalX() { return PrimeIdeal(false, 0); }
    static PrimeIdeal maximalAt(long q);

    bool isMaximal() const { return maximal_; }
    long q() const { return q_; }

    // lattice of the ideal in (a, b) coordinates over Z
    Lattice lattice() const;
    bool contains(const PrimeIdeal& other) const;
    bool operator==(const PrimeIdeal&) const = default;

    BaseRing residueField() const;
    BaseRing localizedBase() const;

    std::string str() const;

private:
    PrimeIdeal(bool maximal, long q) : maximal_(maximal), q_(q) {}
    bool maximal_;
    long q_;
};

// Ideal of Z[x]/(x^2), represented by generators together with the integer
// lattice of its elements in the (a, b) plane. The lattice is closed under
// the x-action (a, b) -> (0, a).
class Ideal {
public:
    Ideal(BaseRing ring, std::vector<RingElt> gens);
    static Ideal fromLattice(Lattice l);
    static Ideal zeroIdeal();
    static Ideal unitIdeal();
    static Ideal principal(const RingElt& g) { return Ideal(g.ring(), {g}); }
    static Ideal ofPrime(const PrimeIdeal& p);

    const Lattice& lattice() const { return lattice_; }
    const std::vector<RingElt>& generators() const { return gens_; }

    bool member(const RingElt& r) const;
    bool contains(const Ideal& other) const { return lattice_.contains(other.lattice_); }
    bool operator==(const Ideal& o) const { return lattice_ == o.lattice_; }

    bool isZero() const { return lattice_.rank() == 0; }
    bool isUnit() const;

    std::string str() const;

private:
    Ideal() : lattice_(2) {}
    std::vector<RingElt> gens_;
    Lattice lattice_;  // in Z^2, coordinates (a, b)
};

// { s in R : s r = 0 } for R = Z[x]/(x^2) or its localization pattern.
Ideal annihilatorOfElement(const RingElt& r);

bool idealMembership(const RingElt& r, const Ideal& i);

// { (x) } plus { (q, x) : q prime <= bound }, with a certification pass that
// checks x is nilpotent (hence in every prime) and samples the quotients for
// zero-divisors.
std::vector<PrimeIdeal> specEnumerate(long bound);

BaseRing residueField(const PrimeIdeal& p);

// Localization of Z[x]/(x^2) at a prime: the base ring together with the
// element map (the identity on coordinates; the point is the changed unit
// group).
struct LocalizedRing {
    BaseRing base;  // Rationals for (x), IntegersLocalizedAt(q) for (q, x)
    RingElt localize(const RingElt& global) const;
    bool isUnit(const RingElt& localElt) const;
};
LocalizedRing localizeRing(const PrimeIdeal& p);

}  // namespace xsq
