#pragma once

#include "modann/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modann {

enum class RingKind { Integers, Modular };

/// The base ring: Z, or Z/n with n >= 2.
class Ring {
public:
    static Ring integers() { return Ring(RingKind::Integers, 0); }
    /// Throws InvalidInput if n < 2.
    static Ring modular(Int n);

    RingKind kind() const { return kind_; }
    bool isIntegers() const { return kind_ == RingKind::Integers; }
    bool isModular() const { return kind_ == RingKind::Modular; }
    /// Modulus of Z/n. Throws OutOfScope for Z.
    Int modulus() const;

    /// `Z` or `Z/<n>`.
    std::string spec() const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    Ring(RingKind kind, Int modulus) : kind_(kind), modulus_(modulus) {}

    RingKind kind_;
    Int modulus_;
};

/// A principal ideal stored by its canonical generator.
///
/// Over Z the generator is nonnegative and 0 is the zero ideal. Over Z/n the
/// generator divides n, and the zero ideal is stored as gen = n so that the
/// divisibility invariant holds uniformly. Two ideals of the same ring are
/// equal iff their generators are.
class Ideal {
public:
    Ideal(Ring ring, Int gen);

    const Ring& ring() const { return ring_; }
    Int gen() const { return gen_; }
    bool isZero() const;
    bool isWhole() const { return gen_ == 1; }

    /// `(g)`; the zero ideal prints as `(0)` for both ring kinds.
    std::string str() const;

    friend bool operator==(const Ideal&, const Ideal&) = default;

private:
    Ring ring_;
    Int gen_;
};

Ideal canonicalIdeal(const Ring& ring, Int g);
Ideal zeroIdeal(const Ring& ring);
Ideal wholeRing(const Ring& ring);

Ideal idealProduct(const Ideal& a, const Ideal& b);
Ideal idealIntersect(const Ideal& a, const Ideal& b);
Ideal idealSum(const Ideal& a, const Ideal& b);
/// True iff `inner` is a subset of `outer`.
bool idealContains(const Ideal& outer, const Ideal& inner);
/// True iff `inner` is a proper subset of `outer`.
bool idealStrictlyContains(const Ideal& outer, const Ideal& inner);

/// Essentiality: nonzero and meeting every nonzero ideal nontrivially.
/// R itself counts as essential.
bool isEssentialIdeal(const Ideal& ideal);

/// Every divisor ideal dZ/n of Z/n, ascending by generator. Throws
/// OutOfScope for Z.
std::vector<Ideal> allIdeals(const Ring& ring);

/// Intersection of the maximal ideals containing `ideal` (R if none).
Ideal maximalHull(const Ideal& ideal);

Ideal jacobsonRadical(const Ring& ring);
Ideal socleOfRing(const Ring& ring);
bool isRegularRing(const Ring& ring);

/// Annihilator {r : r a = 0} of a single ring element.
Ideal elementAnnihilator(const Ring& ring, Int a);

struct SingularSet {
    Ring ring;
    /// Sorted residues a with ann(a) essential. For Z this is {0}.
    std::vector<Int> members;
    /// Set when the ring is Z and the answer is the symbolic zero set.
    bool symbolicZero = false;

    bool isZero() const { return members.size() == 1 && members.front() == 0; }
};

SingularSet singularSetOfRing(const Ring& ring);

/// rad(R/I) for a proper ideal I, lifted back to R.
struct QuotientRadical {
    /// R/I is isomorphic to Z/quotientOrder; 0 means R/I = Z.
    Int quotientOrder;
    /// Lift of rad(R/I); equals I when the quotient radical is zero.
    Ideal lift;
    bool isZero;
};

/// Throws InvalidInput when I = R.
QuotientRadical radQuotient(const Ring& ring, const Ideal& ideal);

} // namespace modann
