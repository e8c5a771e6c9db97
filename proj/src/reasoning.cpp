#include "forgetcnf/reasoning.hpp"

#include <algorithm>

#include "forgetcnf/errors.hpp"
#include "forgetcnf/resolution.hpp"
#include "forgetcnf/sat.hpp"

namespace forgetcnf {

namespace {

// Fragment-aware satisfiability with a model.
SatResult dispatch_sat(const CnfTheory& sigma) {
    bool horn = true, krom = true;
    for (const Clause& c : sigma.clauses()) {
        horn = horn && is_horn_clause(c);
        krom = krom && is_krom_clause(c);
    }
    return horn ? horn_sat(sigma) : krom ? two_sat(sigma) : dpll_sat(sigma);
}

// Countermodel of sigma |= c, or nullopt when the entailment holds.
std::optional<Interpretation> countermodel(const CnfTheory& sigma,
                                           const Clause& c) {
    std::vector<Clause> clauses = sigma.clauses();
    for (const Literal& l : c.literals()) {
        clauses.push_back(Clause::of({l.complement()}));
    }
    SatResult r = dispatch_sat(CnfTheory(std::move(clauses)));
    if (r.satisfiable) return r.model;
    return std::nullopt;
}

Clause strip_atoms(const Clause& c, const std::vector<AtomId>& v) {
    std::vector<Literal> lits;
    for (const Literal& l : c.literals()) {
        if (std::find(v.begin(), v.end(), l.atom) == v.end()) lits.push_back(l);
    }
    return *Clause::normalize(lits);
}

// f is V-free, so f |= c iff f |= c with all V-literals deleted.
Verdict forget_entails(const CnfTheory& f, const CnfTheory& target,
                       const std::vector<AtomId>& v) {
    for (const Clause& c : target.clauses()) {
        Clause stripped = strip_atoms(c, v);
        if (auto m = countermodel(f, stripped)) {
            return Verdict::no(std::move(*m), c);
        }
    }
    return Verdict::yes();
}

Verdict plain_entails(const CnfTheory& a, const CnfTheory& b) {
    for (const Clause& c : b.clauses()) {
        if (auto m = countermodel(a, c)) {
            return Verdict::no(std::move(*m), c);
        }
    }
    return Verdict::yes();
}

}  // namespace

Verdict decide(TaskKind task, const CnfTheory& pi,
               const std::optional<CnfTheory>& sigma,
               const std::vector<AtomId>& v, const ForgetOptions& opts) {
    if (task != TaskKind::VAR_IND && !sigma) {
        throw precondition_error("decide: this task requires a second theory");
    }
    switch (task) {
        case TaskKind::VAR_IND:
            // pi |= forget(pi,V) always holds, so only the converse matters.
            return forget_entails(forget_cnf(pi, v, opts), pi, v);
        case TaskKind::VAR_WEAK:
            return plain_entails(pi, forget_cnf(*sigma, v, opts));
        case TaskKind::VAR_STRONG:
            return forget_entails(forget_cnf(*sigma, v, opts), pi, v);
        case TaskKind::VAR_MATCH: {
            CnfTheory f = forget_cnf(*sigma, v, opts);
            Verdict weak = plain_entails(pi, f);
            if (!weak.answer) return weak;
            return forget_entails(f, pi, v);
        }
        case TaskKind::VAR_ENT:
            // forget(pi,V) |= forget(sigma,V) iff pi |= forget(sigma,V).
            return plain_entails(pi, forget_cnf(*sigma, v, opts));
        case TaskKind::VAR_EQ: {
            Verdict fwd = plain_entails(pi, forget_cnf(*sigma, v, opts));
            if (!fwd.answer) return fwd;
            return plain_entails(*sigma, forget_cnf(pi, v, opts));
        }
    }
    throw std::logic_error("decide: unknown task");
}

namespace {

std::vector<AtomId> snc_elimination_set(const CnfTheory& t, AtomId q,
                                        const std::vector<AtomId>& v) {
    std::vector<AtomId> out;
    for (AtomId a : t.signature()) {
        if (a == q) continue;
        if (std::find(v.begin(), v.end(), a) == v.end()) out.push_back(a);
    }
    return out;
}

void check_snc_preconditions(const char* op, AtomId q,
                             const std::vector<AtomId>& v) {
    if (std::find(v.begin(), v.end(), q) != v.end()) {
        throw precondition_error(std::string(op) +
                                 ": target atom must not be in the vocabulary");
    }
}

DnfTheory negate_cnf_to_dnf(const CnfTheory& sigma) {
    std::vector<Term> terms;
    terms.reserve(sigma.size());
    for (const Clause& c : sigma.clauses()) {
        std::vector<Literal> lits;
        for (const Literal& l : c.literals()) lits.push_back(l.complement());
        terms.push_back(*Term::normalize(lits));
    }
    return minimize_subsumed(DnfTheory(std::move(terms)));
}

}  // namespace

CnfTheory snc(const CnfTheory& t, AtomId q, const std::vector<AtomId>& v) {
    check_snc_preconditions("snc", q, v);
    return forget_cnf(substitute(t, q, true), snc_elimination_set(t, q, v));
}

DnfTheory wsc(const CnfTheory& t, AtomId q, const std::vector<AtomId>& v) {
    check_snc_preconditions("wsc", q, v);
    CnfTheory f = forget_cnf(substitute(t, q, false), snc_elimination_set(t, q, v));
    return negate_cnf_to_dnf(f);
}

namespace {

CnfTheory term_as_units(const Term& t) {
    std::vector<Clause> units;
    for (const Literal& l : t.literals()) units.push_back(Clause::of({l}));
    return CnfTheory(std::move(units));
}

// a |= b over mixed CNF/DNF formulas, with a countermodel on failure.
Verdict formula_entails(const ConditionFormula& a, const ConditionFormula& b) {
    std::vector<CnfTheory> lhs_cases;
    if (const auto* cnf = std::get_if<CnfTheory>(&a)) {
        lhs_cases.push_back(*cnf);
    } else {
        const auto& dnf = std::get<DnfTheory>(a);
        if (dnf.is_bottom()) return Verdict::yes();
        for (const Term& t : dnf.terms()) lhs_cases.push_back(term_as_units(t));
    }
    for (const CnfTheory& lhs : lhs_cases) {
        if (const auto* cnf = std::get_if<CnfTheory>(&b)) {
            Verdict v = plain_entails(lhs, *cnf);
            if (!v.answer) return v;
        } else {
            CnfTheory negated = negate_to_cnf(std::get<DnfTheory>(b));
            SatResult r = dispatch_sat(lhs.merged(negated));
            if (r.satisfiable) {
                return Verdict{false, r.model, std::nullopt};
            }
        }
    }
    return Verdict::yes();
}

Verdict formula_equivalent(const ConditionFormula& a, const ConditionFormula& b) {
    Verdict fwd = formula_entails(a, b);
    if (!fwd.answer) return fwd;
    return formula_entails(b, a);
}

std::vector<AtomId> formula_signature(const ConditionFormula& phi) {
    if (const auto* cnf = std::get_if<CnfTheory>(&phi)) return cnf->signature();
    return std::get<DnfTheory>(phi).signature();
}

}  // namespace

Verdict check_condition(ConditionKind kind, const ConditionFormula& phi,
                        const CnfTheory& t, AtomId q,
                        const std::vector<AtomId>& v) {
    for (AtomId a : formula_signature(phi)) {
        if (std::find(v.begin(), v.end(), a) == v.end()) {
            throw precondition_error(
                "check_condition: the candidate mentions an atom outside V");
        }
    }
    CnfTheory t_and_q = t.with(Clause::of({pos(q)}));
    switch (kind) {
        case ConditionKind::Necessary:
            // T |= q > phi, i.e. T and q entail phi.
            return formula_entails(t_and_q, phi);
        case ConditionKind::Sufficient: {
            // T |= phi > q, i.e. T and phi entail q.
            Clause unit_q = Clause::of({pos(q)});
            if (const auto* cnf = std::get_if<CnfTheory>(&phi)) {
                if (auto m = countermodel(t.merged(*cnf), unit_q)) {
                    return Verdict::no(std::move(*m), unit_q);
                }
                return Verdict::yes();
            }
            for (const Term& term : std::get<DnfTheory>(phi).terms()) {
                if (auto m = countermodel(t.merged(term_as_units(term)), unit_q)) {
                    return Verdict::no(std::move(*m), unit_q);
                }
            }
            return Verdict::yes();
        }
        case ConditionKind::Snc:
            return formula_equivalent(phi, snc(t, q, v));
        case ConditionKind::Wsc:
            return formula_equivalent(phi, wsc(t, q, v));
    }
    throw std::logic_error("check_condition: unknown kind");
}

DefinabilityResult defines(const CnfTheory& sigma, AtomId p,
                           const std::vector<AtomId>& x) {
    if (std::find(x.begin(), x.end(), p) != x.end()) {
        throw precondition_error("defines: the atom must not be in X");
    }
    std::vector<AtomId> elim;
    for (AtomId a : sigma.signature()) {
        if (a != p && std::find(x.begin(), x.end(), a) == x.end())
            elim.push_back(a);
    }
    CnfTheory strongest = forget_cnf(substitute(sigma, p, true), elim);

    // The SNC is always necessary; p is definable iff it is also sufficient.
    CnfTheory test = sigma.merged(strongest).with(Clause::of({neg(p)}));
    SatResult r = dispatch_sat(test);
    if (r.satisfiable) {
        return DefinabilityResult{false, r.model, std::nullopt, std::nullopt};
    }
    CnfTheory weakest_cnf = forget_cnf(substitute(sigma, p, false), elim);
    return DefinabilityResult{true, std::nullopt, strongest,
                              negate_cnf_to_dnf(weakest_cnf)};
}

}  // namespace forgetcnf
