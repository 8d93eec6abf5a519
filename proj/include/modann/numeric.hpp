#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace modann {

using Int = std::int64_t;

struct PrimePower {
    Int prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer, primes strictly ascending.
class Factorization {
public:
    Factorization() = default;
    Factorization(Int n, std::vector<PrimePower> factors);

    Int value() const { return n_; }
    const std::vector<PrimePower>& factors() const& { return factors_; }
    std::vector<PrimePower> factors() && { return std::move(factors_); }
    bool isOne() const { return factors_.empty(); }
    bool isSquarefree() const;
    /// Product of the distinct primes.
    Int radical() const;
    std::vector<Int> primes() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    Int n_ = 1;
    std::vector<PrimePower> factors_;
};

Factorization factorize(Int n);

bool isPrime(Int n);

/// Largest k with p^k | n. Throws InvalidInput if p is not prime or n < 1.
int valuation(Int p, Int n);

/// All positive divisors of n, ascending.
std::vector<Int> divisorsOf(Int n);

Int gcd(Int a, Int b);
/// lcm with the convention lcm(a, 0) = 0. Throws BoundExceeded on overflow.
Int lcm(Int a, Int b);

/// Throws BoundExceeded instead of wrapping.
Int checkedMul(Int a, Int b);
Int checkedPow(Int base, int exponent);

/// Least nonnegative residue of a modulo m (m >= 1).
Int mod(Int a, Int m);
/// (a * b) mod m without intermediate overflow.
Int mulMod(Int a, Int b, Int m);

/// Product of distinct primes dividing n; radical(1) = 1.
Int radical(Int n);
bool isSquarefree(Int n);

} // namespace modann
