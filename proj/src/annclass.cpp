#include "modann/annclass.hpp"

#include "modann/error.hpp"

#include <algorithm>
#include <limits>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modann {

namespace {

struct ClassContext {
    Ideal ann;
    Ideal whole;

    bool annihilates(const Ideal& a, const Ideal& b) const { return idealContains(ann, idealProduct(a, b)); }

    bool fullWitness(const Ideal& cy) const { return cy != whole; }
    bool semiWitness(const Ideal& cy) const { return !cy.isZero() && cy != whole; }
    bool starWitness(const Ideal& cy) const { return idealStrictlyContains(cy, ann) && cy != whole; }
};

ClassContext contextOf(const Module& module) {
    return ClassContext{annihilatorOfModule(module), wholeRing(module.ring())};
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void finish(AnnClassification& c, const ElementIndexer& ix, std::size_t full, std::size_t semi,
            std::size_t star, bool xSemi, bool xStar) {
    c.isFull = full != kNone;
    c.isSemi = xSemi && semi != kNone;
    c.isStar = xStar && star != kNone;
    const std::size_t w = c.isStar ? star : c.isSemi ? semi : full;
    if (w != kNone) c.witness = ix.decode(w);
}

// Reference: for each x scan every nonzero y in lexicographic order.
std::vector<AnnClassification> classifySerial(const Module& module, const std::vector<Ideal>& colons) {
    const ElementIndexer ix(module);
    const auto ctx = contextOf(module);
    std::vector<AnnClassification> out;
    out.reserve(ix.size());
    for (std::size_t x = 0; x < ix.size(); ++x) {
        AnnClassification c{ix.decode(x), colons[x], false, false, false, std::nullopt};
        if (x == 0) {
            c.isFull = c.isSemi = c.isStar = true;
            out.push_back(std::move(c));
            continue;
        }
        std::size_t full = kNone, semi = kNone, star = kNone;
        for (std::size_t y = 1; y < ix.size(); ++y) {
            const Ideal& cy = colons[y];
            if (!ctx.annihilates(colons[x], cy)) continue;
            if (full == kNone && ctx.fullWitness(cy)) full = y;
            if (semi == kNone && ctx.semiWitness(cy)) semi = y;
            if (star == kNone && ctx.starWitness(cy)) star = y;
        }
        finish(c, ix, full, semi, star, !colons[x].isZero(), idealStrictlyContains(colons[x], ctx.ann));
        out.push_back(std::move(c));
    }
    return out;
}

// Whether y witnesses x depends only on [y:M], so each x is checked against
// the distinct colon ideals, each represented by its least nonzero element.
std::vector<AnnClassification> classifyParallel(const Module& module, const std::vector<Ideal>& colons) {
    const ElementIndexer ix(module);
    const auto ctx = contextOf(module);
    std::map<Int, std::size_t> leastByGen;
    for (std::size_t y = 1; y < ix.size(); ++y) leastByGen.try_emplace(colons[y].gen(), y);
    std::vector<std::size_t> reps;
    for (const auto& [gen, y] : leastByGen) reps.push_back(y);

    std::vector<AnnClassification> out(ix.size(), AnnClassification{Element{}, ctx.ann, false, false, false, std::nullopt});
    const auto n = static_cast<std::int64_t>(ix.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t xi = 0; xi < n; ++xi) {
        const auto x = static_cast<std::size_t>(xi);
        AnnClassification c{ix.decode(x), colons[x], false, false, false, std::nullopt};
        if (x == 0) {
            c.isFull = c.isSemi = c.isStar = true;
        } else {
            std::size_t full = kNone, semi = kNone, star = kNone;
            for (auto y : reps) {
                const Ideal& cy = colons[y];
                if (!ctx.annihilates(colons[x], cy)) continue;
                if (ctx.fullWitness(cy)) full = std::min(full, y);
                if (ctx.semiWitness(cy)) semi = std::min(semi, y);
                if (ctx.starWitness(cy)) star = std::min(star, y);
            }
            finish(c, ix, full, semi, star, !colons[x].isZero(), idealStrictlyContains(colons[x], ctx.ann));
        }
        out[x] = std::move(c);
    }
    return out;
}

AnnClassification classifyFreeElement(const Module& module, const Element& x) {
    const Ideal colon = symbolicFreeColon(module);
    AnnClassification c{x, colon, false, false, false, std::nullopt};
    if (x.isZero()) {
        c.isFull = c.isSemi = c.isStar = true;
        return c;
    }
    // Every colon ideal is 0, so every pair annihilates M, but no witness
    // can have a nonzero colon ideal.
    c.isFull = true;
    Element w = zeroElement(module);
    w.coords.back() = 1;
    c.witness = std::move(w);
    return c;
}

} // namespace

void setThreadCount(int threads) {
#ifdef _OPENMP
    omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs());
#else
    (void)threads;
#endif
}

int threadCount() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<Ideal> colonTable(const Module& module, Exec exec) {
    const ElementIndexer ix(module);
    std::vector<Ideal> out(ix.size(), zeroIdeal(module.ring()));
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < ix.size(); ++i) out[i] = colonIdeal(module, ix.decode(i));
        return out;
    }
    const auto n = static_cast<std::int64_t>(ix.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = colonIdeal(module, ix.decode(static_cast<std::size_t>(i)));
    return out;
}

AnnClassification classifyElement(const Module& module, const Element& x) {
    checkElement(module, x);
    if (!module.isFinite()) return classifyFreeElement(module, x);
    const ElementIndexer ix(module);
    return classifyAll(module, Exec::Parallel)[ix.encode(x)];
}

std::vector<AnnClassification> classifyAll(const Module& module, Exec exec) {
    if (!module.isFinite()) throw OutOfScope("classifyAll: infinite module " + module.spec());
    const auto colons = colonTable(module, exec);
    return exec == Exec::Serial ? classifySerial(module, colons) : classifyParallel(module, colons);
}

AnnihilatorSets annihilatorSets(const Module& module, Exec exec) {
    if (!module.isFinite())
        throw OutOfScope("annihilatorSets: the classes of " + module.spec() + " are infinite");
    AnnihilatorSets out;
    for (auto& c : classifyAll(module, exec)) {
        if (c.element.isZero()) continue;
        if (c.isFull) out.full.push_back(c.element);
        if (c.isSemi) out.semi.push_back(c.element);
        if (c.isStar) out.star.push_back(c.element);
    }
    return out;
}

bool witnessIsValid(const Module& module, const AnnClassification& c) {
    if (c.element.isZero()) return c.isFull && c.isSemi && c.isStar;
    if (!c.isFull) return !c.witness.has_value();
    if (!c.witness || c.witness->isZero()) return false;
    const auto ctx = contextOf(module);
    const Ideal cx = module.isFinite() ? colonIdeal(module, c.element) : symbolicFreeColon(module);
    const Ideal cy = module.isFinite() ? colonIdeal(module, *c.witness) : symbolicFreeColon(module);
    if (cx != c.colon) return false;
    if (!ctx.annihilates(cx, cy) || !ctx.fullWitness(cy)) return false;
    if (c.isSemi && (cx.isZero() || !ctx.semiWitness(cy))) return false;
    if (c.isStar && (!idealStrictlyContains(cx, ctx.ann) || !ctx.starWitness(cy))) return false;
    return true;
}

} // namespace modann
