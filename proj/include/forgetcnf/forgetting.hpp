#pragma once

#include <optional>

#include "forgetcnf/models.hpp"
#include "forgetcnf/theory.hpp"

namespace forgetcnf {

struct ForgetOptions {
    bool prune_entailed = false;
    bool minimize_subsumed = false;
    // When given, must be a permutation of the forgotten set.
    std::optional<std::vector<AtomId>> atom_order;
};

// Replace clauses with positive p by all defined resolvents against clauses
// with negative p, then drop every clause containing a p literal. Clauses not
// mentioning p pass through; no subsumption is applied.
CnfTheory strong_unfold(const CnfTheory& pi, AtomId p);

// Resolution-based forgetting: clauses disjoint from V are set aside, the
// rest is strongly unfolded atom by atom, the set-aside clauses are restored.
// The result mentions no atom of V.
CnfTheory forget_cnf(const CnfTheory& pi, const std::vector<AtomId>& v,
                     const ForgetOptions& opts = {});

// Prime implicates filtered to V-free clauses.
CnfTheory forget_via_pi(const CnfTheory& sigma, const std::vector<AtomId>& v);

// Per-term literal deletion; an emptied term short-circuits to truth.
DnfTheory forget_dnf(const DnfTheory& delta, const std::vector<AtomId>& v);

inline constexpr int kDefaultExpansionLimit = 10;

// The 2^|V| disjuncts of iterated substitution, each a CnfTheory. A
// cross-check oracle, not a production path.
std::vector<CnfTheory> forget_substitution(const CnfTheory& sigma,
                                           const std::vector<AtomId>& v,
                                           int max_atoms = kDefaultExpansionLimit);

// Mod(sigma) closed under arbitrary reassignment of V, over the universe.
std::set<Interpretation> forget_models_oracle(
    const CnfTheory& sigma, const std::vector<AtomId>& v,
    const std::vector<AtomId>& universe, int max_atoms = kDefaultModelAtomLimit);

// Krom fast path: all entailed clauses of width at most two over the kept
// variables, subsumption-minimized.
CnfTheory forget_krom(const CnfTheory& sigma, const std::vector<AtomId>& v);

}  // namespace forgetcnf
