#include "modann/verify.hpp"

#include "modann/annclass.hpp"
#include "modann/error.hpp"
#include "modann/spec.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace modann {

namespace {

TheoremReport start(const char* id, const Module& module) {
    TheoremReport r;
    r.theorem = id;
    r.ring = module.ring().spec();
    r.module = module.spec();
    return r;
}

void finalize(TheoremReport& r) {
    if (!r.hypothesesHold())
        r.status = Status::Vacuous;
    else
        r.status = r.conclusion.value_or(false) ? Status::Holds : Status::Violation;
}

void requireModular(const Module& module, const char* id) {
    if (!module.ring().isModular())
        throw OutOfScope(std::string(id) + " is checked over Z/n only");
}

void requireFiniteModule(const Module& module, const char* id) {
    if (!module.isFinite()) throw OutOfScope(std::string(id) + " needs a finite module");
}

/// Nonzero members of A_f with their classification.
std::vector<AnnClassification> fullClass(const Module& module) {
    std::vector<AnnClassification> out;
    for (auto& c : classifyAll(module))
        if (!c.element.isZero() && c.isFull) out.push_back(std::move(c));
    return out;
}

template <typename Range, typename Fn>
std::string joinMapped(const Range& items, Fn fn, const char* sep = " ") {
    std::string out;
    bool first = true;
    for (const auto& item : items) {
        if (!first) out += sep;
        out += fn(item);
        first = false;
    }
    return out.empty() ? "-" : out;
}

std::string gens(const std::set<Int>& s) {
    return joinMapped(s, [](Int g) { return std::to_string(g); }, ",");
}

std::string boolStr(bool b) { return b ? "true" : "false"; }

std::set<Int> colonGens(const std::vector<AnnClassification>& cls) {
    std::set<Int> out;
    for (const auto& c : cls) out.insert(c.colon.gen());
    return out;
}

// Generators d of ideals I = dR for which IM = dM is not cyclic.
std::vector<Int> nonCyclicIdealImages(const Module& module) {
    const ElementIndexer ix(module);
    const Int bound = module.ring().isIntegers() ? module.exponent() : module.ring().modulus();
    std::vector<Int> out;
    for (Int d : divisorsOf(bound)) {
        std::vector<char> in(ix.size(), 0);
        std::vector<std::size_t> image;
        for (std::size_t y = 0; y < ix.size(); ++y) {
            const auto dy = ix.scale(d, y);
            if (!in[dy]) {
                in[dy] = 1;
                image.push_back(dy);
            }
        }
        const auto size = static_cast<Int>(image.size());
        if (std::none_of(image.begin(), image.end(), [&](std::size_t g) { return ix.order(g) == size; }))
            out.push_back(d);
    }
    return out;
}

// Colon ideals among A_f that are simple and singular as R-modules.
std::set<Int> singularSimpleColons(const Module& module, const std::vector<AnnClassification>& af) {
    const Ring& ring = module.ring();
    const Int n = ring.modulus();
    std::set<Int> out;
    for (Int d : colonGens(af)) {
        const Int m = n / d;
        if (!isPrime(m)) continue;
        const auto ideal = Module::finite(ring, {m});
        if (static_cast<Int>(singularSubsetOfModule(ideal).size()) == m) out.insert(d);
    }
    return out;
}

struct InjectivityPremise {
    std::set<Int> singularSimple;
    bool allInjective = true;

    bool holds() const { return !singularSimple.empty() && allInjective; }
};

InjectivityPremise injectivityPremise(const Module& module, const std::vector<AnnClassification>& af) {
    InjectivityPremise p;
    p.singularSimple = singularSimpleColons(module, af);
    const Ring& ring = module.ring();
    for (Int d : p.singularSimple)
        p.allInjective = p.allInjective && baerIsInjective(ring, Module::finite(ring, {ring.modulus() / d}));
    return p;
}

} // namespace

std::string toString(Status status) {
    switch (status) {
    case Status::Holds: return "HOLDS";
    case Status::Vacuous: return "VACUOUS";
    case Status::Violation: return "VIOLATION";
    case Status::Skipped: return "SKIPPED";
    }
    return "SKIPPED";
}

bool TheoremReport::hypothesesHold() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& h) { return h.second; });
}

const std::vector<std::string>& allTheoremIds() {
    static const std::vector<std::string> ids{
        theorem::kEssentialityLemma,    theorem::kEssentialColon,      theorem::kSingularQuotient,
        theorem::kInjectivityCriterion, theorem::kMaximalIntersection, theorem::kRegularEquivalence,
    };
    return ids;
}

bool baerIsInjective(const Ring& ring, const Module& e) {
    if (!ring.isModular()) throw OutOfScope("Baer testing needs the finite ideal lattice of Z/n");
    if (e.ring() != ring) throw InvalidInput("baerIsInjective: module is over " + e.ring().spec());
    const Int n = ring.modulus();
    const ElementIndexer ix(e);
    for (Int d : divisorsOf(n)) {
        if (d == n) continue;
        // phi: dR -> E is fixed by phi(d) = v subject to (n/d) v = 0, and it
        // extends to R iff v = d c for some c.
        std::vector<char> reachable(ix.size(), 0);
        for (std::size_t c = 0; c < ix.size(); ++c) reachable[ix.scale(d, c)] = 1;
        for (std::size_t v = 0; v < ix.size(); ++v)
            if (ix.scale(n / d, v) == 0 && !reachable[v]) return false;
    }
    return true;
}

bool hasEssentialSocle(const Module& module) {
    if (module.isZero()) return false;
    const auto soc = socleOfModule(module);
    return soc.size() > 1 && isEssentialSubmodule(module, soc);
}

bool cyclicIntersectionNonzero(const Module& module) {
    if (module.isZero()) return false;
    return intersectionOfAllCyclics(module).size() > 1;
}

TheoremReport checkEssentialityLemma(const Module& module) {
    if (!module.ring().isIntegers())
        throw OutOfScope(std::string(theorem::kEssentialityLemma) + " is checked over Z only");
    auto r = start(theorem::kEssentialityLemma, module);
    if (!module.isFinite()) {
        const Ideal colon = symbolicFreeColon(module);
        const auto x = classifyElement(module, Element{std::vector<Int>(module.rank(), 1)});
        r.hypotheses = {{"module-nonzero", true}, {"af-nonempty", x.isFull}};
        r.conclusion = isEssentialIdeal(colon) == !colon.isZero();
        r.details = "symbolic free module: every nonzero x has [x:M] = " + colon.str() +
                    ", essential=" + boolStr(isEssentialIdeal(colon));
        finalize(r);
        return r;
    }
    const auto af = fullClass(module);
    r.hypotheses = {{"module-nonzero", !module.isZero()}, {"af-nonempty", !af.empty()}};
    bool ok = std::all_of(af.begin(), af.end(),
                          [](const auto& c) { return isEssentialIdeal(c.colon) == !c.colon.isZero(); });
    bool everyNonzeroEssential = true;
    if (!module.isZero() && !isSimpleModule(module)) {
        for (const auto& c : colonTable(module))
            everyNonzeroEssential = everyNonzeroEssential && isEssentialIdeal(c);
        ok = ok && everyNonzeroEssential;
    }
    r.conclusion = ok;
    r.details = "|A_f|=" + std::to_string(af.size()) + " colon gens {" + gens(colonGens(af)) +
                "} simple=" + boolStr(isSimpleModule(module)) +
                " all-colons-essential=" + boolStr(everyNonzeroEssential);
    finalize(r);
    return r;
}

TheoremReport checkEssentialColon(const Module& module) {
    requireFiniteModule(module, theorem::kEssentialColon);
    auto r = start(theorem::kEssentialColon, module);
    const auto af = fullClass(module);
    std::vector<std::string> meeting, failing;
    for (const auto& c : af) {
        const bool hyp = isEssentialSubmodule(module, cyclicSubmodule(module, c.element));
        if (!hyp) continue;
        meeting.push_back(c.element.str());
        if (!isEssentialIdeal(c.colon)) failing.push_back(c.element.str() + "->" + c.colon.str());
    }
    r.hypotheses = {{"af-nonempty", !af.empty()}, {"some-rx-essential", !meeting.empty()}};
    r.conclusion = failing.empty();
    const auto nonCyclic = nonCyclicIdealImages(module);
    r.details = "rx-essential {" + joinMapped(meeting, [](const auto& s) { return s; }) + "} failing {" +
                joinMapped(failing, [](const auto& s) { return s; }) + "} non-cyclic IM for I=(d), d in {" +
                joinMapped(nonCyclic, [](Int d) { return std::to_string(d); }, ",") + "}";
    finalize(r);
    return r;
}

TheoremReport checkSingularQuotient(const Module& module) {
    requireFiniteModule(module, theorem::kSingularQuotient);
    auto r = start(theorem::kSingularQuotient, module);
    const Ring& ring = module.ring();
    r.hypotheses = {{"essoc-nonzero", hasEssentialSocle(module)},
                    {"cyclic-intersection-nonzero", cyclicIntersectionNonzero(module)}};
    const auto af = fullClass(module);
    bool ok = true;
    std::string firstFailure;
    for (Int d : colonGens(af)) {
        // Over Z the colon of a finite module is never zero; over Z/n the zero
        // ideal d = n gives R/0 = R.
        for (Int a = 0; a < d && ok; ++a) {
            const Ideal quotientAnn = canonicalIdeal(ring, d / gcd(a, d));
            if (!isEssentialIdeal(quotientAnn)) {
                ok = false;
                firstFailure = " failing coset " + std::to_string(a) + " of R/(" + std::to_string(d) + ")";
            }
        }
    }
    r.conclusion = ok;
    r.details = "colon gens {" + gens(colonGens(af)) + "}" +
                (af.empty() ? std::string(" A_f empty, conclusion holds over no x") : std::string()) +
                firstFailure;
    finalize(r);
    return r;
}

TheoremReport checkInjectivityCriterion(const Module& module) {
    requireModular(module, theorem::kInjectivityCriterion);
    requireFiniteModule(module, theorem::kInjectivityCriterion);
    auto r = start(theorem::kInjectivityCriterion, module);
    const Ring& ring = module.ring();
    const Int n = ring.modulus();
    const auto af = fullClass(module);
    const auto premise = injectivityPremise(module, af);
    r.hypotheses = {{"essoc-nonzero", hasEssentialSocle(module)},
                    {"cyclic-intersection-nonzero", cyclicIntersectionNonzero(module)},
                    {"singular-simple-colon-exists", !premise.singularSimple.empty()}};

    const bool lhs = premise.holds();
    const bool regular = isRegularRing(ring);
    const bool ringNonsingular = singularSetOfRing(ring).isZero();
    bool radicalsZero = true;
    for (Int d : premise.singularSimple)
        if (d != 1) radicalsZero = radicalsZero && radQuotient(ring, Ideal(ring, d)).isZero;
    bool simplesInjective = true;
    for (Int p : factorize(n).primes())
        simplesInjective = simplesInjective && baerIsInjective(ring, Module::finite(ring, {p}));

    const bool forward = !lhs || (ringNonsingular && radicalsZero);
    const bool equivalence = lhs == regular;
    const bool simpleCrossCheck = simplesInjective == regular;
    r.conclusion = forward && equivalence && simpleCrossCheck;
    r.details = "singular-simple colons {" + gens(premise.singularSimple) +
                "} baer-injective=" + boolStr(premise.allInjective) + " lhs=" + boolStr(lhs) +
                " Z(R)=0:" + boolStr(ringNonsingular) + " rad(R/[x:M])=0:" + boolStr(radicalsZero) +
                " regular=" + boolStr(regular) + " simple-modules-injective=" + boolStr(simplesInjective);
    finalize(r);
    return r;
}

TheoremReport checkMaximalIntersection(const Module& module) {
    requireModular(module, theorem::kMaximalIntersection);
    requireFiniteModule(module, theorem::kMaximalIntersection);
    auto r = start(theorem::kMaximalIntersection, module);
    const Ring& ring = module.ring();
    const auto af = fullClass(module);
    const auto premise = injectivityPremise(module, af);
    r.hypotheses = {{"essoc-nonzero", hasEssentialSocle(module)},
                    {"cyclic-intersection-nonzero", cyclicIntersectionNonzero(module)},
                    {"singular-simple-colon-exists", !premise.singularSimple.empty()},
                    {"singular-simple-colons-injective", premise.allInjective}};

    bool intersections = true, idempotent = true;
    std::set<Int> notIdempotent;
    for (Int d : colonGens(af)) {
        const Ideal colon(ring, d);
        intersections = intersections && maximalHull(colon) == colon;
        if (idealProduct(colon, colon) != colon) {
            idempotent = false;
            notIdempotent.insert(d);
        }
    }
    const Ideal j = jacobsonRadical(ring);
    const bool jSquaredZero = idealProduct(j, j).isZero();
    r.conclusion = intersections && jSquaredZero && idempotent;
    r.details = "colon gens {" + gens(colonGens(af)) + "} intersections-of-maximals=" + boolStr(intersections) +
                " J(R)=" + j.str() + " J^2=0:" + boolStr(jSquaredZero) + " idempotent=" + boolStr(idempotent) +
                " non-idempotent {" + gens(notIdempotent) + "}";
    finalize(r);
    return r;
}

TheoremReport checkRegularEquivalence(const Module& module) {
    requireModular(module, theorem::kRegularEquivalence);
    requireFiniteModule(module, theorem::kRegularEquivalence);
    auto r = start(theorem::kRegularEquivalence, module);
    const Ring& ring = module.ring();
    r.hypotheses = {{"every-submodule-cyclic", everySubmoduleCyclic(module)},
                    {"cyclic-intersection-nonzero", cyclicIntersectionNonzero(module)}};
    const bool regular = isRegularRing(ring);
    bool idealsIdempotent = true;
    for (const auto& a : allIdeals(ring)) idealsIdempotent = idealsIdempotent && idealProduct(a, a) == a;
    const auto af = fullClass(module);
    bool colonsIdempotent = true;
    for (const auto& c : af) colonsIdempotent = colonsIdempotent && idealProduct(c.colon, c.colon) == c.colon;
    r.conclusion = regular == idealsIdempotent && idealsIdempotent == colonsIdempotent;
    r.details = "(i) regular=" + boolStr(regular) + " (ii) ideals-idempotent=" + boolStr(idealsIdempotent) +
                " (iii) colons-idempotent=" + boolStr(colonsIdempotent) + " |A_f|=" + std::to_string(af.size());
    finalize(r);
    // (i) <=> (ii) is a statement about R alone and must hold on every instance.
    if (regular != idealsIdempotent) r.status = Status::Violation;
    return r;
}

TheoremReport runCheck(const std::string& theoremId, const CorpusEntry& entry) {
    TheoremReport skipped;
    skipped.theorem = theoremId;
    skipped.ring = entry.ring;
    skipped.module = entry.module;
    skipped.status = Status::Skipped;
    try {
        const Ring ring = parseRingSpec(entry.ring);
        const Module module = parseModuleSpec(entry.module, ring);
        TheoremReport r;
        if (theoremId == theorem::kEssentialityLemma)
            r = checkEssentialityLemma(module);
        else if (theoremId == theorem::kEssentialColon)
            r = checkEssentialColon(module);
        else if (theoremId == theorem::kSingularQuotient)
            r = checkSingularQuotient(module);
        else if (theoremId == theorem::kInjectivityCriterion)
            r = checkInjectivityCriterion(module);
        else if (theoremId == theorem::kMaximalIntersection)
            r = checkMaximalIntersection(module);
        else if (theoremId == theorem::kRegularEquivalence)
            r = checkRegularEquivalence(module);
        else
            throw InvalidInput("unknown theorem id '" + theoremId + "'");
        r.ring = entry.ring;
        r.module = entry.module;
        return r;
    } catch (const OutOfScope& e) {
        skipped.details = std::string("not applicable: ") + e.what();
    } catch (const Error& e) {
        skipped.details = std::string("error: ") + e.what();
    }
    return skipped;
}

CorpusRun runCorpus(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& suite, Exec exec) {
    for (const auto& id : suite)
        if (std::find(allTheoremIds().begin(), allTheoremIds().end(), id) == allTheoremIds().end())
            throw InvalidInput("unknown theorem id '" + id + "'");
    CorpusRun run;
    const std::size_t cells = corpus.size() * suite.size();
    run.reports.resize(cells);
    if (exec == Exec::Serial) {
        for (std::size_t c = 0; c < cells; ++c)
            run.reports[c] = runCheck(suite[c % suite.size()], corpus[c / suite.size()]);
    } else {
        const auto total = static_cast<std::int64_t>(cells);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t ci = 0; ci < total; ++ci) {
            const auto c = static_cast<std::size_t>(ci);
            run.reports[c] = runCheck(suite[c % suite.size()], corpus[c / suite.size()]);
        }
    }
    for (const auto& r : run.reports) {
        switch (r.status) {
        case Status::Holds: ++run.summary.holds; break;
        case Status::Vacuous: ++run.summary.vacuous; break;
        case Status::Violation: ++run.summary.violations; break;
        case Status::Skipped: ++run.summary.skipped; break;
        }
    }
    return run;
}

std::string toJsonLine(const TheoremReport& report) {
    nlohmann::ordered_json j;
    j["theorem"] = report.theorem;
    j["ring"] = report.ring;
    j["module"] = report.module;
    auto hyps = nlohmann::ordered_json::object();
    for (const auto& [name, value] : report.hypotheses) hyps[name] = value;
    j["hypotheses"] = std::move(hyps);
    if (report.conclusion)
        j["conclusion"] = *report.conclusion;
    else
        j["conclusion"] = nullptr;
    j["status"] = toString(report.status);
    j["details"] = report.details;
    return j.dump();
}

std::string serializeReports(const std::vector<TheoremReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += toJsonLine(r) + "\n";
    return out;
}

} // namespace modann
