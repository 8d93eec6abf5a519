#pragma once

#include "modann/module.hpp"
#include "modann/ring.hpp"

#include <string>
#include <vector>

namespace modann {

/// Partitions of n, each weakly decreasing, in reverse-lexicographic order.
std::vector<std::vector<int>> partitionsOf(int n);

/// Every abelian group of order n up to isomorphism, presented by its
/// primary factors (primes ascending, exponents descending).
std::vector<Module> abelianGroupsOfOrder(Int n, const Ring& ring = Ring::integers());

/// Every abelian group of order between 1 and maxOrder, ordered by order.
/// The trivial group is skipped.
std::vector<Module> abelianGroupsUpTo(Int maxOrder, const Ring& ring = Ring::integers());

/// Every abelian p-group with order p^k <= maxOrder, k >= 1.
std::vector<Module> pGroupsUpTo(Int p, Int maxOrder);

/// Z/n-modules Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k | n, d_i >= 2
/// and order <= maxOrder.
std::vector<Module> divisorChainModules(Int n, Int maxOrder);

struct CorpusEntry {
    std::string ring;
    std::string module;

    friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

/// Built-in corpus: every abelian group of order <= 64 over Z, then for each
/// n <= 60 the divisor-chain Z/n-modules of order <= 64.
std::vector<CorpusEntry> defaultCorpus();

/// JSON array of {"ring": str, "module": str}.
std::vector<CorpusEntry> parseCorpusJson(const std::string& text);
std::string corpusToJson(const std::vector<CorpusEntry>& corpus);

} // namespace modann
