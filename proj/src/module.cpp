#include "modann/module.hpp"

#include "modann/error.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_set>

namespace modann {

namespace {

std::atomic<std::size_t> g_elementBound{1'000'000};

void requireFinite(const Module& module, const char* op) {
    if (!module.isFinite())
        throw OutOfScope(std::string(op) + ": infinite module " + module.spec());
}

std::vector<char> membership(const ElementIndexer& ix, const ElementSet& set) {
    std::vector<char> in(ix.size(), 0);
    for (const auto& x : set) in[ix.encode(x)] = 1;
    return in;
}

ElementSet toElements(const ElementIndexer& ix, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    ElementSet out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(ix.decode(i));
    return out;
}

// Subgroup generated by `gens`, grown one coset layer at a time: adding g
// to H yields the disjoint union of H + kg for k below the first k with
// kg in H.
std::vector<std::size_t> closeSubgroup(const ElementIndexer& ix, std::span<const std::size_t> gens,
                                       std::vector<char>& in) {
    std::vector<std::size_t> members{0};
    in.assign(ix.size(), 0);
    in[0] = 1;
    for (auto g : gens) {
        if (in[g]) continue;
        const std::size_t base = members.size();
        for (std::size_t kg = g; !in[kg]; kg = ix.add(kg, g))
            for (std::size_t i = 0; i < base; ++i) {
                const auto y = ix.add(members[i], kg);
                in[y] = 1;
                members.push_back(y);
            }
    }
    return members;
}

Int orderOfResidue(Int c, Int f) { return f / gcd(c, f); }

} // namespace

std::size_t elementBound() { return g_elementBound.load(); }
void setElementBound(std::size_t bound) { g_elementBound.store(bound); }

// ---------------------------------------------------------------------------
// Module

Module Module::finite(Ring ring, std::vector<Int> factors) {
    for (Int f : factors) {
        if (f < 2) throw InvalidInput("cyclic factor order must be >= 2, got " + std::to_string(f));
        if (ring.isModular() && ring.modulus() % f != 0)
            throw InvalidInput("factor C" + std::to_string(f) + " is not a module over " + ring.spec());
    }
    return Module(ring, std::move(factors), 0);
}

Module Module::freeOfRank(Int rank) {
    if (rank < 1) throw InvalidInput("free rank must be >= 1");
    return Module(Ring::integers(), {}, rank);
}

Int Module::order() const {
    if (!isFinite()) throw OutOfScope("infinite module " + spec() + " has no finite order");
    Int n = 1;
    for (Int f : factors_) n = checkedMul(n, f);
    return n;
}

Int Module::exponent() const {
    if (!isFinite()) throw OutOfScope("infinite module " + spec() + " has no finite exponent");
    Int e = 1;
    for (Int f : factors_) e = lcm(e, f);
    return e;
}

std::string Module::spec() const {
    if (!isFinite()) return "F" + std::to_string(freeRank_);
    if (factors_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += '+';
        out += 'C' + std::to_string(factors_[i]);
    }
    return out;
}

bool Element::isZero() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c == 0; });
}

std::string Element::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// ElementIndexer

ElementIndexer::ElementIndexer(const Module& module) : factors_(module.factors()) {
    requireFinite(module, "element enumeration");
    const Int n = module.order();
    if (static_cast<std::size_t>(n) > elementBound())
        throw BoundExceeded("module " + module.spec() + " has " + std::to_string(n) +
                            " elements, above the bound of " + std::to_string(elementBound()));
    size_ = static_cast<std::size_t>(n);
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;)
        strides_[i - 1] = strides_[i] * static_cast<std::size_t>(factors_[i]);
}

std::size_t ElementIndexer::encode(std::span<const Int> coords) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        idx += static_cast<std::size_t>(coords[i]) * strides_[i];
    return idx;
}

Element ElementIndexer::decode(std::size_t index) const {
    Element x{std::vector<Int>(factors_.size())};
    decodeInto(index, x.coords);
    return x;
}

void ElementIndexer::decodeInto(std::size_t index, std::span<Int> out) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out[i] = static_cast<Int>(index / strides_[i]);
        index %= strides_[i];
    }
}

std::size_t ElementIndexer::add(std::size_t a, std::size_t b) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto f = static_cast<std::size_t>(factors_[i]);
        const std::size_t ca = a / strides_[i];
        const std::size_t cb = b / strides_[i];
        a %= strides_[i];
        b %= strides_[i];
        idx += ((ca + cb) % f) * strides_[i];
    }
    return idx;
}

std::size_t ElementIndexer::scale(Int r, std::size_t a) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Int c = static_cast<Int>(a / strides_[i]);
        a %= strides_[i];
        idx += static_cast<std::size_t>(mulMod(r, c, factors_[i])) * strides_[i];
    }
    return idx;
}

Int ElementIndexer::order(std::size_t a) const {
    Int ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Int c = static_cast<Int>(a / strides_[i]);
        a %= strides_[i];
        ord = lcm(ord, orderOfResidue(c, factors_[i]));
    }
    return ord;
}

std::vector<std::size_t> ElementIndexer::cyclic(std::size_t x) const {
    std::vector<std::size_t> out{0};
    for (std::size_t y = x; y != 0; y = add(y, x)) out.push_back(y);
    return out;
}

// ---------------------------------------------------------------------------
// Elements

void checkElement(const Module& module, const Element& x) {
    if (x.coords.size() != module.rank())
        throw InvalidInput("element " + x.str() + " has the wrong length for " + module.spec());
    if (!module.isFinite()) return;
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        if (x.coords[i] < 0 || x.coords[i] >= module.factors()[i])
            throw InvalidInput("element " + x.str() + " has coordinate out of range for " + module.spec());
}

Element zeroElement(const Module& module) {
    return Element{std::vector<Int>(module.rank(), 0)};
}

std::vector<Element> enumerateElements(const Module& module) {
    const ElementIndexer ix(module);
    std::vector<Element> out;
    out.reserve(ix.size());
    for (std::size_t i = 0; i < ix.size(); ++i) out.push_back(ix.decode(i));
    return out;
}

void forEachElement(const Module& module, const std::function<void(const Element&)>& fn) {
    const ElementIndexer ix(module);
    Element x = zeroElement(module);
    for (std::size_t i = 0; i < ix.size(); ++i) {
        ix.decodeInto(i, x.coords);
        fn(x);
    }
}

Element scalarAct(const Module& module, Int r, const Element& x) {
    checkElement(module, x);
    requireFinite(module, "scalarAct");
    Element out = x;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] = mulMod(r, x.coords[i], module.factors()[i]);
    return out;
}

Element addElements(const Module& module, const Element& x, const Element& y) {
    checkElement(module, x);
    checkElement(module, y);
    requireFinite(module, "addElements");
    Element out = x;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] = (x.coords[i] + y.coords[i]) % module.factors()[i];
    return out;
}

Int elementOrder(const Module& module, const Element& x) {
    checkElement(module, x);
    requireFinite(module, "elementOrder");
    Int ord = 1;
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        ord = lcm(ord, orderOfResidue(x.coords[i], module.factors()[i]));
    return ord;
}

// ---------------------------------------------------------------------------
// Submodules

ElementSet cyclicSubmodule(const Module& module, const Element& x) {
    checkElement(module, x);
    const ElementIndexer ix(module);
    return toElements(ix, ix.cyclic(ix.encode(x)));
}

ElementSet generatedSubmodule(const Module& module, std::span<const Element> generators) {
    const ElementIndexer ix(module);
    std::vector<std::size_t> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) {
        checkElement(module, g);
        gens.push_back(ix.encode(g));
    }
    std::vector<char> in;
    return toElements(ix, closeSubgroup(ix, gens, in));
}

bool isSubmodule(const Module& module, const ElementSet& candidate) {
    const ElementIndexer ix(module);
    std::vector<std::size_t> idx;
    idx.reserve(candidate.size());
    for (const auto& x : candidate) {
        checkElement(module, x);
        idx.push_back(ix.encode(x));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.empty() || idx.front() != 0) return false;
    // The subgroup generated by the candidate contains it; equality of sizes
    // means the candidate was already closed.
    std::vector<char> in;
    return closeSubgroup(ix, idx, in).size() == idx.size();
}

namespace {

void requireSubmodule(const Module& module, const ElementSet& n, const char* op) {
    if (!isSubmodule(module, n))
        throw InvalidInput(std::string(op) + ": the given set is not a submodule of " + module.spec());
}

} // namespace

// ---------------------------------------------------------------------------
// Colon ideals

Ideal colonIdeal(const Module& module, const Element& x) {
    requireFinite(module, "colonIdeal");
    checkElement(module, x);
    const PrimaryDecomposition pd(module);
    const auto xp = pd.project(x);
    const auto& pf = pd.factors();

    Int gen = 1;
    for (Int p : pd.primes()) {
        const auto comp = pd.componentOf(p);
        // Mixed-radix numbering of the p-primary part.
        std::vector<std::size_t> stride(comp.size(), 1);
        for (std::size_t j = comp.size(); j-- > 1;)
            stride[j - 1] = stride[j] * static_cast<std::size_t>(pf[comp[j]].order);
        const auto encode = [&](std::span<const Int> c) {
            std::size_t idx = 0;
            for (std::size_t j = 0; j < c.size(); ++j) idx += static_cast<std::size_t>(c[j]) * stride[j];
            return idx;
        };

        // R x_p materialized once.
        std::vector<Int> base(comp.size());
        Int ord = 1;
        int maxExp = 0;
        for (std::size_t j = 0; j < comp.size(); ++j) {
            base[j] = xp[comp[j]];
            ord = lcm(ord, orderOfResidue(base[j], pf[comp[j]].order));
            maxExp = std::max(maxExp, pf[comp[j]].exponent);
        }
        std::unordered_set<std::size_t> span;
        span.reserve(static_cast<std::size_t>(ord));
        std::vector<Int> cur(comp.size(), 0);
        for (Int t = 0; t < ord; ++t) {
            span.insert(encode(cur));
            for (std::size_t j = 0; j < comp.size(); ++j)
                cur[j] = (cur[j] + base[j]) % pf[comp[j]].order;
        }

        // Least k with p^k e_j in R x_p for every primary generator e_j.
        int k = 0;
        Int pk = 1;
        for (; k < maxExp; ++k, pk *= p) {
            bool inside = true;
            std::vector<Int> probe(comp.size(), 0);
            for (std::size_t j = 0; j < comp.size() && inside; ++j) {
                probe[j] = pk % pf[comp[j]].order;
                inside = span.contains(encode(probe));
                probe[j] = 0;
            }
            if (inside) break;
        }
        gen = checkedMul(gen, pk);
    }
    return canonicalIdeal(module.ring(), gen);
}

Ideal colonIdealBrute(const Module& module, const Element& x) {
    requireFinite(module, "colonIdealBrute");
    checkElement(module, x);
    const ElementIndexer ix(module);
    std::vector<char> inSpan(ix.size(), 0);
    for (auto i : ix.cyclic(ix.encode(x))) inSpan[i] = 1;

    const Int bound = module.ring().isIntegers() ? module.exponent() : module.ring().modulus();
    for (Int m : divisorsOf(bound)) {
        bool ok = true;
        for (std::size_t y = 0; y < ix.size() && ok; ++y) ok = inSpan[ix.scale(m, y)];
        if (ok) return canonicalIdeal(module.ring(), m);
    }
    // m = bound always qualifies, since bound * M = 0.
    throw Error("colonIdealBrute: no multiplier found");
}

Ideal colonOfSubmodule(const Module& module, const ElementSet& submodule) {
    requireFinite(module, "colonOfSubmodule");
    requireSubmodule(module, submodule, "colonOfSubmodule");
    const ElementIndexer ix(module);
    const auto in = membership(ix, submodule);
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < module.rank(); ++i) {
        Element e = zeroElement(module);
        e.coords[i] = 1;
        basis.push_back(ix.encode(e));
    }
    for (Int m : divisorsOf(module.exponent())) {
        const bool ok = std::all_of(basis.begin(), basis.end(),
                                    [&](std::size_t b) { return in[ix.scale(m, b)] != 0; });
        if (ok) return canonicalIdeal(module.ring(), m);
    }
    throw Error("colonOfSubmodule: no multiplier found");
}

Ideal symbolicFreeColon(const Module& module) {
    if (module.isFinite()) throw InvalidInput("symbolicFreeColon: module " + module.spec() + " is finite");
    if (module.freeRank() < 2)
        throw OutOfScope("colon ideals of Z itself are outside the symbolic free-module rule");
    // Rx is a line and rM sits inside it only for r = 0.
    return zeroIdeal(module.ring());
}

Ideal annihilatorOfModule(const Module& module) {
    if (!module.isFinite()) return zeroIdeal(module.ring());
    return canonicalIdeal(module.ring(), module.exponent());
}

// ---------------------------------------------------------------------------
// Structure

ElementSet socleOfModule(const Module& module) {
    requireFinite(module, "socleOfModule");
    const ElementIndexer ix(module);
    const Int r = radical(module.exponent());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ix.size(); ++i)
        if (ix.scale(r, i) == 0) out.push_back(i);
    return toElements(ix, std::move(out));
}

bool isEssentialSubmodule(const Module& module, const ElementSet& submodule) {
    requireFinite(module, "isEssentialSubmodule");
    requireSubmodule(module, submodule, "isEssentialSubmodule");
    const ElementIndexer ix(module);
    const auto in = membership(ix, submodule);
    for (std::size_t x = 1; x < ix.size(); ++x) {
        bool meets = false;
        for (std::size_t y = x; y != 0 && !meets; y = ix.add(y, x)) meets = in[y];
        if (!meets) return false;
    }
    return true;
}

ElementSet intersectionOfAllCyclics(const Module& module) {
    requireFinite(module, "intersectionOfAllCyclics");
    if (module.isZero()) throw InvalidInput("intersectionOfAllCyclics: the zero module has no nonzero elements");
    const ElementIndexer ix(module);
    // Every nonzero Rx contains Rz for some z of prime order, so the
    // intersection over all x equals the intersection over those z.
    std::vector<std::size_t> current;
    bool first = true;
    for (std::size_t z = 1; z < ix.size(); ++z) {
        if (!isPrime(ix.order(z))) continue;
        auto line = ix.cyclic(z);
        std::sort(line.begin(), line.end());
        if (first) {
            current = std::move(line);
            first = false;
        } else {
            std::vector<std::size_t> next;
            std::set_intersection(current.begin(), current.end(), line.begin(), line.end(),
                                  std::back_inserter(next));
            current = std::move(next);
        }
        if (current.size() == 1) break;
    }
    return toElements(ix, std::move(current));
}

ElementSet singularSubsetOfModule(const Module& module) {
    requireFinite(module, "singularSubsetOfModule");
    const ElementIndexer ix(module);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ix.size(); ++i)
        if (isEssentialIdeal(canonicalIdeal(module.ring(), ix.order(i)))) out.push_back(i);
    return toElements(ix, std::move(out));
}

bool isCyclicSubmodule(const Module& module, const ElementSet& submodule) {
    requireSubmodule(module, submodule, "isCyclicSubmodule");
    const ElementIndexer ix(module);
    const auto n = static_cast<Int>(submodule.size());
    return std::any_of(submodule.begin(), submodule.end(),
                       [&](const Element& h) { return ix.order(ix.encode(h)) == n; });
}

bool everySubmoduleCyclic(const Module& module) {
    requireFinite(module, "everySubmoduleCyclic");
    const ElementIndexer ix(module);
    // A finitely generated submodule is cyclic once every two-generated one
    // is: fold generators pairwise.
    std::vector<char> in;
    for (std::size_t a = 1; a < ix.size(); ++a)
        for (std::size_t b = a + 1; b < ix.size(); ++b) {
            const std::size_t gens[] = {a, b};
            const auto h = closeSubgroup(ix, gens, in);
            const auto n = static_cast<Int>(h.size());
            if (ix.order(a) != n && ix.order(b) != n &&
                std::none_of(h.begin(), h.end(), [&](std::size_t g) { return ix.order(g) == n; }))
                return false;
        }
    return true;
}

bool isSimpleModule(const Module& module) {
    return module.isFinite() && module.factors().size() == 1 && isPrime(module.factors().front());
}

// ---------------------------------------------------------------------------
// Primary decomposition

PrimaryDecomposition::PrimaryDecomposition(const Module& module) {
    requireFinite(module, "primary decomposition");
    for (std::size_t i = 0; i < module.factors().size(); ++i)
        for (const auto& [p, e] : factorize(module.factors()[i]).factors())
            factors_.push_back({i, p, e, checkedPow(p, e)});
    std::stable_sort(factors_.begin(), factors_.end(), [](const PrimaryFactor& a, const PrimaryFactor& b) {
        if (a.prime != b.prime) return a.prime < b.prime;
        return a.exponent > b.exponent;
    });
    for (const auto& f : factors_)
        if (primes_.empty() || primes_.back() != f.prime) primes_.push_back(f.prime);
}

std::vector<std::size_t> PrimaryDecomposition::componentOf(Int p) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].prime == p) out.push_back(i);
    return out;
}

std::vector<Int> PrimaryDecomposition::project(const Element& x) const {
    std::vector<Int> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(x.coords.at(f.source) % f.order);
    return out;
}

std::vector<int> PrimaryDecomposition::typeAt(Int p) const {
    std::vector<int> out;
    for (const auto& f : factors_)
        if (f.prime == p) out.push_back(f.exponent);
    return out;
}

// ---------------------------------------------------------------------------
// Partitions

PartitionType::PartitionType(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidInput("partition type must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InvalidInput("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    }
}

int PartitionType::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::string PartitionType::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<SubgroupType> subgroupTypes(const PartitionType& lambda) {
    if (lambda.size() > 20) throw BoundExceeded("subgroupTypes: partition size above 20");
    const auto& lam = lambda.parts();
    std::map<std::vector<int>, std::size_t> counts;
    std::vector<int> mu(lam.size(), 0);
    while (true) {
        std::vector<int> t;
        for (int m : mu)
            if (m > 0) t.push_back(m);
        std::sort(t.rbegin(), t.rend());
        ++counts[t];
        std::size_t i = 0;
        while (i < mu.size() && mu[i] == lam[i]) mu[i++] = 0;
        if (i == mu.size()) break;
        ++mu[i];
    }
    std::vector<SubgroupType> out;
    for (auto& [parts, mult] : counts) out.push_back({parts, mult});
    std::sort(out.begin(), out.end(), [](const SubgroupType& a, const SubgroupType& b) {
        int sa = 0, sb = 0;
        for (int p : a.parts) sa += p;
        for (int p : b.parts) sb += p;
        if (sa != sb) return sa > sb;
        return a.parts > b.parts;
    });
    return out;
}

} // namespace modann
