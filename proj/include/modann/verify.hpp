#pragma once

#include "modann/catalog.hpp"
#include "modann/exec.hpp"
#include "modann/module.hpp"
#include "modann/ring.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modann {

enum class Status { Holds, Vacuous, Violation, Skipped };

std::string toString(Status status);

/// Outcome of checking one statement on one instance.
///
/// VACUOUS iff some hypothesis is false, VIOLATION iff every hypothesis
/// holds and the conclusion fails, HOLDS iff both hold. SKIPPED marks a
/// check that does not apply to the instance or could not be evaluated.
struct TheoremReport {
    std::string theorem;
    std::string ring;
    std::string module;
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::optional<bool> conclusion;
    Status status = Status::Skipped;
    std::string details;

    bool hypothesesHold() const;
};

/// Identifiers of the available checks, in suite order.
namespace theorem {
inline constexpr const char* kEssentialityLemma = "essentiality-lemma";
inline constexpr const char* kEssentialColon = "essential-colon";
inline constexpr const char* kSingularQuotient = "singular-quotient";
inline constexpr const char* kInjectivityCriterion = "injectivity-criterion";
inline constexpr const char* kMaximalIntersection = "maximal-intersection";
inline constexpr const char* kRegularEquivalence = "regular-equivalence";
} // namespace theorem

const std::vector<std::string>& allTheoremIds();

/// Baer's criterion over Z/n: every hom from an ideal dZ/n into E extends
/// to R. Throws OutOfScope for Z.
bool baerIsInjective(const Ring& ring, const Module& e);

/// Soc(M) is nonzero and essential in M.
bool hasEssentialSocle(const Module& module);
/// The intersection of Rx over nonzero x is nonzero (false for M = 0).
bool cyclicIntersectionNonzero(const Module& module);

/// Over Z: for x in A_f, [x:M] is essential iff it is nonzero.
TheoremReport checkEssentialityLemma(const Module& module);
/// Rx meeting every nonzero cyclic submodule forces [x:M] essential.
TheoremReport checkEssentialColon(const Module& module);
/// With essential socle and nonzero cyclic intersection, R/[x:M] is singular.
TheoremReport checkSingularQuotient(const Module& module);
/// Over Z/n: injectivity of singular simple colon ideals versus Z(R) = 0,
/// rad(R/[x:M]) = 0 and regularity of R.
TheoremReport checkInjectivityCriterion(const Module& module);
/// Over Z/n: colon ideals as intersections of maximal ideals, J(R)^2 = 0 and
/// idempotent colon ideals, under the injectivity premise.
TheoremReport checkMaximalIntersection(const Module& module);
/// Over Z/n: regular ring, idempotent ideals and idempotent colon ideals.
TheoremReport checkRegularEquivalence(const Module& module);

/// Run one check by id. Checks that do not apply to the ring kind, and any
/// evaluation error, yield a SKIPPED report.
TheoremReport runCheck(const std::string& theoremId, const CorpusEntry& entry);

struct CorpusSummary {
    std::size_t holds = 0;
    std::size_t vacuous = 0;
    std::size_t violations = 0;
    std::size_t skipped = 0;
};

struct CorpusRun {
    /// Ordered by (instance index, suite position).
    std::vector<TheoremReport> reports;
    CorpusSummary summary;

    bool clean() const { return summary.violations == 0; }
};

/// Cross product of corpus entries and suite ids. Throws InvalidInput for
/// an unknown id.
CorpusRun runCorpus(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& suite,
                    Exec exec = Exec::Parallel);

/// One-line JSON encoding of a report.
std::string toJsonLine(const TheoremReport& report);
/// JSON lines, one per report, newline-terminated.
std::string serializeReports(const std::vector<TheoremReport>& reports);

} // namespace modann
