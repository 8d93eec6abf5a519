#include "modann/ring.hpp"

#include "modann/error.hpp"

#include <limits>
#include <string>

namespace modann {

namespace {

void requireSameRing(const Ideal& a, const Ideal& b, const char* op) {
    if (a.ring() != b.ring())
        throw InvalidInput(std::string(op) + ": ideals live in different rings (" + a.ring().spec() +
                           " vs " + b.ring().spec() + ")");
}

// a | b with the convention a | 0 for every a.
bool divides(Int a, Int b) {
    if (a == 0) return b == 0;
    return b % a == 0;
}

} // namespace

Ring Ring::modular(Int n) {
    if (n < 2) throw InvalidInput("Z/n requires n >= 2, got " + std::to_string(n));
    return Ring(RingKind::Modular, n);
}

Int Ring::modulus() const {
    if (!isModular()) throw OutOfScope("Z has no modulus");
    return modulus_;
}

std::string Ring::spec() const {
    return isIntegers() ? std::string("Z") : "Z/" + std::to_string(modulus_);
}

Ideal::Ideal(Ring ring, Int gen) : ring_(ring), gen_(gen) {
    if (ring_.isIntegers()) {
        if (gen_ < 0) throw InvalidInput("ideal of Z needs a nonnegative generator");
    } else if (gen_ < 1 || ring_.modulus() % gen_ != 0) {
        throw InvalidInput("ideal generator " + std::to_string(gen_) + " does not divide " +
                           std::to_string(ring_.modulus()));
    }
}

bool Ideal::isZero() const {
    return ring_.isIntegers() ? gen_ == 0 : gen_ == ring_.modulus();
}

std::string Ideal::str() const {
    return "(" + std::to_string(isZero() ? 0 : gen_) + ")";
}

Ideal canonicalIdeal(const Ring& ring, Int g) {
    if (ring.isIntegers()) {
        if (g == std::numeric_limits<Int>::min()) throw BoundExceeded("generator out of range");
        return Ideal(ring, g < 0 ? -g : g);
    }
    const Int n = ring.modulus();
    const Int r = mod(g, n);
    return Ideal(ring, r == 0 ? n : gcd(r, n));
}

Ideal zeroIdeal(const Ring& ring) {
    return Ideal(ring, ring.isIntegers() ? 0 : ring.modulus());
}

Ideal wholeRing(const Ring& ring) { return Ideal(ring, 1); }

Ideal idealProduct(const Ideal& a, const Ideal& b) {
    requireSameRing(a, b, "idealProduct");
    if (a.ring().isIntegers()) return Ideal(a.ring(), checkedMul(a.gen(), b.gen()));
    return canonicalIdeal(a.ring(), mulMod(a.gen(), b.gen(), a.ring().modulus()));
}

Ideal idealIntersect(const Ideal& a, const Ideal& b) {
    requireSameRing(a, b, "idealIntersect");
    // Over Z/n both generators divide n, so their lcm does too.
    return canonicalIdeal(a.ring(), lcm(a.gen(), b.gen()));
}

Ideal idealSum(const Ideal& a, const Ideal& b) {
    requireSameRing(a, b, "idealSum");
    return canonicalIdeal(a.ring(), gcd(a.gen(), b.gen()));
}

bool idealContains(const Ideal& outer, const Ideal& inner) {
    requireSameRing(outer, inner, "idealContains");
    return divides(outer.gen(), inner.gen());
}

bool idealStrictlyContains(const Ideal& outer, const Ideal& inner) {
    return idealContains(outer, inner) && outer != inner;
}

bool isEssentialIdeal(const Ideal& ideal) {
    if (ideal.ring().isIntegers()) return ideal.gen() != 0;
    const Int n = ideal.ring().modulus();
    for (const auto& [p, e] : factorize(n).factors())
        if (valuation(p, ideal.gen()) >= e) return false;
    return true;
}

std::vector<Ideal> allIdeals(const Ring& ring) {
    if (ring.isIntegers()) throw OutOfScope("Z has infinitely many ideals");
    std::vector<Ideal> out;
    for (Int d : divisorsOf(ring.modulus())) out.emplace_back(ring, d);
    return out;
}

Ideal maximalHull(const Ideal& ideal) {
    const Ring& ring = ideal.ring();
    if (ring.isIntegers() && ideal.gen() == 0) return zeroIdeal(ring);
    return canonicalIdeal(ring, radical(ideal.gen()));
}

Ideal jacobsonRadical(const Ring& ring) {
    if (ring.isIntegers()) return zeroIdeal(ring);
    return canonicalIdeal(ring, radical(ring.modulus()));
}

Ideal socleOfRing(const Ring& ring) {
    if (ring.isIntegers()) return zeroIdeal(ring);
    const Int n = ring.modulus();
    return canonicalIdeal(ring, n / radical(n));
}

bool isRegularRing(const Ring& ring) {
    return ring.isModular() && isSquarefree(ring.modulus());
}

Ideal elementAnnihilator(const Ring& ring, Int a) {
    if (ring.isIntegers()) return a == 0 ? wholeRing(ring) : zeroIdeal(ring);
    const Int n = ring.modulus();
    const Int r = mod(a, n);
    return canonicalIdeal(ring, n / gcd(r == 0 ? n : r, n));
}

SingularSet singularSetOfRing(const Ring& ring) {
    if (ring.isIntegers()) return SingularSet{ring, {0}, true};
    SingularSet out{ring, {}, false};
    for (Int a = 0; a < ring.modulus(); ++a)
        if (isEssentialIdeal(elementAnnihilator(ring, a))) out.members.push_back(a);
    return out;
}

QuotientRadical radQuotient(const Ring& ring, const Ideal& ideal) {
    if (ideal.ring() != ring) throw InvalidInput("radQuotient: ideal belongs to another ring");
    if (ideal.isWhole()) throw InvalidInput("radQuotient: R/R is the zero ring");
    if (ideal.isZero() && ring.isIntegers()) return QuotientRadical{0, ideal, true};
    const Int d = ideal.gen();
    const Int r = radical(d);
    return QuotientRadical{d, canonicalIdeal(ring, r), r == d};
}

} // namespace modann
