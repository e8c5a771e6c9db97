#pragma once

#include <optional>
#include <variant>

#include "forgetcnf/forgetting.hpp"
#include "forgetcnf/theory.hpp"

namespace forgetcnf {

enum class TaskKind {
    VAR_IND,     // forget(Pi,V) equivalent to Pi
    VAR_WEAK,    // Pi |= forget(Sigma,V)
    VAR_STRONG,  // forget(Sigma,V) |= Pi
    VAR_MATCH,   // forget(Sigma,V) equivalent to Pi
    VAR_ENT,     // forget(Pi,V) |= forget(Sigma,V)
    VAR_EQ,      // forget(Pi,V) equivalent to forget(Sigma,V)
};

struct Verdict {
    bool answer;
    std::optional<Interpretation> countermodel;
    std::optional<Clause> witness_clause;

    static Verdict yes() { return {true, std::nullopt, std::nullopt}; }
    static Verdict no(Interpretation m, Clause c) {
        return {false, std::move(m), std::move(c)};
    }
};

// The six knowledge-evolution decision problems. sigma is required for the
// two-theory tasks (all but VAR_IND).
Verdict decide(TaskKind task, const CnfTheory& pi,
               const std::optional<CnfTheory>& sigma,
               const std::vector<AtomId>& v, const ForgetOptions& opts = {});

// Strongest necessary condition of q on V under T:
// forget(T[q/true], Var(T) minus V minus {q}).
CnfTheory snc(const CnfTheory& t, AtomId q, const std::vector<AtomId>& v);

// Weakest sufficient condition of q on V under T: the negation of
// forget(T[q/false], Var(T) minus V minus {q}), as subsumption-minimized DNF.
DnfTheory wsc(const CnfTheory& t, AtomId q, const std::vector<AtomId>& v);

enum class ConditionKind { Necessary, Sufficient, Snc, Wsc };

using ConditionFormula = std::variant<CnfTheory, DnfTheory>;

// Checks a candidate condition formula over V against T and q.
Verdict check_condition(ConditionKind kind, const ConditionFormula& phi,
                        const CnfTheory& t, AtomId q,
                        const std::vector<AtomId>& v);

struct DefinabilityResult {
    bool defines;
    std::optional<Interpretation> countermodel;  // present iff not defines
    std::optional<CnfTheory> strongest;          // present iff defines
    std::optional<DnfTheory> weakest;
};

// True iff some formula over X is equivalent to p under sigma; then the
// SNC/WSC are the strongest/weakest definitions.
DefinabilityResult defines(const CnfTheory& sigma, AtomId p,
                           const std::vector<AtomId>& x);

}  // namespace forgetcnf
