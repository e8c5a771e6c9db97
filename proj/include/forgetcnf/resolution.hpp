#pragma once

#include <optional>

#include "forgetcnf/theory.hpp"

namespace forgetcnf {

// The resolvent of c1 and c2, or nullopt when the clauses are not resolvable
// (no pivot, or every candidate resolvent has a complementary pair, which is
// forced as soon as more than one pivot atom exists).
std::optional<Clause> resolve(const Clause& c1, const Clause& c2);

// Flip the polarity of every literal over an atom in v.
Clause rename(const Clause& c, const std::vector<AtomId>& v);
Term rename(const Term& t, const std::vector<AtomId>& v);
CnfTheory rename(const CnfTheory& sigma, const std::vector<AtomId>& v);

// Substitute an atom by a truth constant; the result never mentions p.
CnfTheory substitute(const CnfTheory& sigma, AtomId p, bool value);

// Saturate under resolution, drop tautologies and subsumed clauses.
// The result is exactly the set of prime implicates and is equivalent to the
// input. An unsatisfiable input yields the singleton {empty clause}.
CnfTheory prime_implicates(const CnfTheory& sigma);

inline constexpr int kDefaultNegationClauseLimit = 200000;

// CNF of the negation, by distribution over the negated clauses (terms).
// Guarded against blowup.
CnfTheory negate_to_cnf(const CnfTheory& sigma,
                        int max_clauses = kDefaultNegationClauseLimit);
CnfTheory negate_to_cnf(const DnfTheory& delta,
                        int max_clauses = kDefaultNegationClauseLimit);

// Prime implicants via the duality with the prime implicates of the negation.
DnfTheory prime_implicants(const CnfTheory& sigma,
                           int max_clauses = kDefaultNegationClauseLimit);

// Subsumption-minimal equivalent subsets.
CnfTheory minimize_subsumed(const CnfTheory& sigma);
DnfTheory minimize_subsumed(const DnfTheory& delta);

}  // namespace forgetcnf
