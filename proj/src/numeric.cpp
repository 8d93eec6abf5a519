#include "modann/numeric.hpp"

#include "modann/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace modann {

Factorization::Factorization(Int n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {}

bool Factorization::isSquarefree() const {
    for (const auto& f : factors_)
        if (f.exponent > 1) return false;
    return true;
}

Int Factorization::radical() const {
    Int r = 1;
    for (const auto& f : factors_) r *= f.prime;
    return r;
}

std::vector<Int> Factorization::primes() const {
    std::vector<Int> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.prime);
    return out;
}

Factorization factorize(Int n) {
    if (n < 1)
        throw InvalidInput("factorize: expected a positive integer, got " + std::to_string(n));
    std::vector<PrimePower> out;
    Int m = n;
    for (Int p = 2; p <= m / p; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (m > 1) out.push_back({m, 1});
    return Factorization(n, std::move(out));
}

bool isPrime(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p <= n / p; ++p)
        if (n % p == 0) return false;
    return true;
}

int valuation(Int p, Int n) {
    if (!isPrime(p)) throw InvalidInput("valuation: " + std::to_string(p) + " is not prime");
    if (n < 1) throw InvalidInput("valuation: expected a positive integer, got " + std::to_string(n));
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

std::vector<Int> divisorsOf(Int n) {
    const auto f = factorize(n);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : f.factors()) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    return checkedMul(a / std::gcd(a, b), b);
}

Int checkedMul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw BoundExceeded("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

Int checkedPow(Int base, int exponent) {
    Int r = 1;
    for (int i = 0; i < exponent; ++i) r = checkedMul(r, base);
    return r;
}

Int mod(Int a, Int m) {
    const Int r = a % m;
    return r < 0 ? r + m : r;
}

Int mulMod(Int a, Int b, Int m) {
    __extension__ using Wide = __int128;
    const Wide r = static_cast<Wide>(mod(a, m)) * mod(b, m) % m;
    return static_cast<Int>(r);
}

Int radical(Int n) { return factorize(n).radical(); }

bool isSquarefree(Int n) { return factorize(n).isSquarefree(); }

} // namespace modann
