#pragma once

#include "modann/numeric.hpp"
#include "modann/ring.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace modann {

/// Upper bound on the number of elements any enumeration may touch.
/// Defaults to 10^6; exceeding it raises BoundExceeded.
std::size_t elementBound();
void setElementBound(std::size_t bound);

/// A module over Z or Z/n presented as a direct sum of cyclic groups,
/// or (over Z only) a free module Z^k handled symbolically.
class Module {
public:
    /// Direct sum of cyclic groups of the given orders (each >= 2). Over Z/n
    /// every order must divide n. An empty list is the zero module.
    static Module finite(Ring ring, std::vector<Int> factors);
    /// Z^rank over Z, rank >= 1.
    static Module freeOfRank(Int rank);

    const Ring& ring() const { return ring_; }
    const std::vector<Int>& factors() const { return factors_; }
    Int freeRank() const { return freeRank_; }
    bool isFinite() const { return freeRank_ == 0; }
    bool isZero() const { return isFinite() && factors_.empty(); }
    std::size_t rank() const { return isFinite() ? factors_.size() : static_cast<std::size_t>(freeRank_); }

    /// |M|. Throws OutOfScope for free modules, BoundExceeded on overflow.
    Int order() const;
    /// lcm of the factor orders (1 for the zero module).
    Int exponent() const;

    /// `C8+C2`, `F3`, or `0` for the zero module.
    std::string spec() const;

    friend bool operator==(const Module&, const Module&) = default;

private:
    Module(Ring ring, std::vector<Int> factors, Int freeRank)
        : ring_(ring), factors_(std::move(factors)), freeRank_(freeRank) {}

    Ring ring_;
    std::vector<Int> factors_;
    Int freeRank_ = 0;
};

struct Element {
    std::vector<Int> coords;

    bool isZero() const;
    /// `(a,b,...)`.
    std::string str() const;

    auto operator<=>(const Element&) const = default;
};

/// Sorted (lexicographic) list of distinct elements.
using ElementSet = std::vector<Element>;

/// Mixed-radix numbering of the elements of a finite module. The last
/// coordinate varies fastest, so index order is lexicographic order.
class ElementIndexer {
public:
    /// Throws OutOfScope for free modules and BoundExceeded if |M| exceeds
    /// the element bound.
    explicit ElementIndexer(const Module& module);

    std::size_t size() const { return size_; }
    std::size_t rank() const { return factors_.size(); }
    const std::vector<Int>& factors() const { return factors_; }

    std::size_t encode(std::span<const Int> coords) const;
    std::size_t encode(const Element& x) const { return encode(x.coords); }
    Element decode(std::size_t index) const;
    void decodeInto(std::size_t index, std::span<Int> out) const;

    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t scale(Int r, std::size_t a) const;
    Int order(std::size_t a) const;
    /// Indices of k*x for k = 0 .. order(x) - 1.
    std::vector<std::size_t> cyclic(std::size_t x) const;

private:
    std::vector<Int> factors_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
};

/// Validates shape and range of coordinates; throws InvalidInput otherwise.
void checkElement(const Module& module, const Element& x);

Element zeroElement(const Module& module);

/// All elements of a finite module in lexicographic order.
std::vector<Element> enumerateElements(const Module& module);
void forEachElement(const Module& module, const std::function<void(const Element&)>& fn);

Element scalarAct(const Module& module, Int r, const Element& x);
Element addElements(const Module& module, const Element& x, const Element& y);
/// Additive order of x.
Int elementOrder(const Module& module, const Element& x);

ElementSet cyclicSubmodule(const Module& module, const Element& x);
ElementSet generatedSubmodule(const Module& module, std::span<const Element> generators);
bool isSubmodule(const Module& module, const ElementSet& candidate);

/// [x:M] = {r : rM is contained in Rx}, via primary decomposition.
Ideal colonIdeal(const Module& module, const Element& x);
/// Independent exhaustive oracle for colonIdeal.
Ideal colonIdealBrute(const Module& module, const Element& x);
/// {r : rM is contained in N}. Throws InvalidInput if N is not a submodule.
Ideal colonOfSubmodule(const Module& module, const ElementSet& submodule);
/// Colon ideal of any nonzero element of Z^k, k >= 2 (the zero ideal).
Ideal symbolicFreeColon(const Module& module);

Ideal annihilatorOfModule(const Module& module);
ElementSet socleOfModule(const Module& module);
bool isEssentialSubmodule(const Module& module, const ElementSet& submodule);
/// Intersection of Rx over all nonzero x. Throws InvalidInput for M = 0.
ElementSet intersectionOfAllCyclics(const Module& module);
/// Z(M) = {x : ann(x) is essential in R}.
ElementSet singularSubsetOfModule(const Module& module);
/// True iff the submodule has a single generator.
bool isCyclicSubmodule(const Module& module, const ElementSet& submodule);
/// Decided exhaustively over all pairs of elements.
bool everySubmoduleCyclic(const Module& module);
/// A nonzero module without proper nonzero submodules.
bool isSimpleModule(const Module& module);

/// One cyclic summand Z/p^e of the primary decomposition, with the index
/// of the presented factor it came from.
struct PrimaryFactor {
    std::size_t source;
    Int prime;
    int exponent;
    Int order;
};

/// Rewrite of a finite module as a direct sum of cyclic p-groups, obtained
/// by splitting every presented factor with the Chinese remainder theorem.
class PrimaryDecomposition {
public:
    explicit PrimaryDecomposition(const Module& module);

    /// Grouped by prime ascending, exponents descending within a prime.
    const std::vector<PrimaryFactor>& factors() const { return factors_; }
    const std::vector<Int>& primes() const { return primes_; }
    /// Positions in factors() belonging to prime p.
    std::vector<std::size_t> componentOf(Int p) const;
    /// Coordinates of x in the primary factors.
    std::vector<Int> project(const Element& x) const;
    /// Exponent partition of the p-primary part.
    std::vector<int> typeAt(Int p) const;

private:
    std::vector<PrimaryFactor> factors_;
    std::vector<Int> primes_;
};

/// Exponent partition of a p-group, parts weakly decreasing and positive.
class PartitionType {
public:
    /// Throws InvalidInput for empty or non-monotone input.
    explicit PartitionType(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    std::string str() const;

    friend bool operator==(const PartitionType&, const PartitionType&) = default;

private:
    std::vector<int> parts_;
};

struct SubgroupType {
    /// Partition of the subgroup type; empty for the trivial subgroup.
    std::vector<int> parts;
    /// Number of componentwise sub-tuples mu <= lambda sorting to `parts`.
    std::size_t multiplicity;

    friend bool operator==(const SubgroupType&, const SubgroupType&) = default;
};

/// Enumerates mu <= lambda componentwise. Ordered by descending total size,
/// then reverse-lexicographically, the empty type last.
std::vector<SubgroupType> subgroupTypes(const PartitionType& lambda);

} // namespace modann
