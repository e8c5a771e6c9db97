#pragma once

#include <optional>

#include "forgetcnf/theory.hpp"

namespace forgetcnf {

struct SatResult {
    bool satisfiable;
    std::optional<Interpretation> model;  // present iff satisfiable

    static SatResult sat(Interpretation m) { return {true, std::move(m)}; }
    static SatResult unsat() { return {false, std::nullopt}; }
};

// Unit propagation over a Horn theory. When satisfiable the returned model is
// the least model.
SatResult horn_sat(const CnfTheory& sigma);

// Implication graph + strongly connected components for 2-CNF.
SatResult two_sat(const CnfTheory& sigma);

// Complete DPLL with unit propagation and pure-literal elimination.
// Branches on the lowest unassigned atom id, true first.
SatResult dpll_sat(const CnfTheory& sigma);

// Fragment-aware entailment: sigma |= c iff sigma plus the unit complements
// of c is unsatisfiable.
bool entails(const CnfTheory& sigma, const Clause& c);
bool entails(const CnfTheory& sigma, const CnfTheory& pi);

bool is_horn_clause(const Clause& c);
bool is_krom_clause(const Clause& c);

}  // namespace forgetcnf
