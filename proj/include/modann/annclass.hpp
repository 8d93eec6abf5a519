#pragma once

#include "modann/exec.hpp"
#include "modann/module.hpp"
#include "modann/ring.hpp"

#include <optional>
#include <vector>

namespace modann {

/// Membership of one element in the full-, semi- and star-annihilator
/// classes. The zero element belongs to all three.
struct AnnClassification {
    Element element;
    Ideal colon;
    bool isFull = false;
    bool isSemi = false;
    bool isStar = false;
    /// Lexicographically least y certifying the strongest true flag of a
    /// nonzero element. y = x is allowed.
    std::optional<Element> witness;
};

/// Colon ideal of every element of a finite module, in index
/// (lexicographic) order.
std::vector<Ideal> colonTable(const Module& module, Exec exec = Exec::Parallel);

AnnClassification classifyElement(const Module& module, const Element& x);

/// Classification of every element of a finite module, in index order.
std::vector<AnnClassification> classifyAll(const Module& module, Exec exec = Exec::Parallel);

/// The nonzero members of each class, sorted.
struct AnnihilatorSets {
    ElementSet full;
    ElementSet semi;
    ElementSet star;
};

/// Throws OutOfScope for free modules: their classes are infinite.
AnnihilatorSets annihilatorSets(const Module& module, Exec exec = Exec::Parallel);

/// Re-check that `c.witness` certifies every flag it is claimed to.
/// Returns false for a missing or invalid witness on a nonzero element.
bool witnessIsValid(const Module& module, const AnnClassification& c);

} // namespace modann
