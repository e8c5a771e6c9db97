#include "forgetcnf/resolution.hpp"

#include <algorithm>
#include <set>

#include "forgetcnf/errors.hpp"

namespace forgetcnf {

std::optional<Clause> resolve(const Clause& c1, const Clause& c2) {
    std::vector<int> merged(c1.codes());
    merged.insert(merged.end(), c2.codes().begin(), c2.codes().end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    // Pivots are atoms occurring with both polarities in the union; a single
    // clause has no complementary pair, so they are always split across.
    std::vector<AtomId> pivots;
    for (size_t i = 1; i < merged.size(); ++i) {
        if (merged[i] / 2 == merged[i - 1] / 2) pivots.push_back(merged[i] / 2);
    }
    // With two or more pivots every candidate resolvent keeps a complementary
    // pair, so the resolvent is undefined.
    if (pivots.size() != 1) return std::nullopt;

    const AtomId p = pivots.front();
    std::erase_if(merged, [p](int code) { return code / 2 == p; });
    std::vector<Literal> lits;
    lits.reserve(merged.size());
    for (int code : merged) lits.push_back(Literal::decode(code));
    return Clause::normalize(lits);
}

namespace {

std::vector<Literal> flipped(const std::vector<int>& codes,
                             const std::vector<AtomId>& v) {
    std::vector<AtomId> vs(v);
    std::sort(vs.begin(), vs.end());
    std::vector<Literal> lits;
    lits.reserve(codes.size());
    for (int code : codes) {
        Literal l = Literal::decode(code);
        if (std::binary_search(vs.begin(), vs.end(), l.atom)) l = l.complement();
        lits.push_back(l);
    }
    return lits;
}

}  // namespace

Clause rename(const Clause& c, const std::vector<AtomId>& v) {
    return *Clause::normalize(flipped(c.codes(), v));
}

Term rename(const Term& t, const std::vector<AtomId>& v) {
    return *Term::normalize(flipped(t.codes(), v));
}

CnfTheory rename(const CnfTheory& sigma, const std::vector<AtomId>& v) {
    std::vector<Clause> out;
    out.reserve(sigma.size());
    for (const Clause& c : sigma.clauses()) out.push_back(rename(c, v));
    return CnfTheory(std::move(out));
}

CnfTheory substitute(const CnfTheory& sigma, AtomId p, bool value) {
    const Literal satisfied = {p, value};
    std::vector<Clause> out;
    for (const Clause& c : sigma.clauses()) {
        if (c.contains(satisfied)) continue;
        if (c.contains(satisfied.complement())) {
            std::vector<Literal> lits;
            for (const Literal& l : c.literals()) {
                if (l.atom != p) lits.push_back(l);
            }
            out.push_back(*Clause::normalize(lits));
        } else {
            out.push_back(c);
        }
    }
    return CnfTheory(std::move(out));
}

namespace {

bool subsumed_by_any(const std::set<Clause>& set, const Clause& c) {
    for (const Clause& s : set) {
        if (s != c && subsumes(s, c)) return true;
    }
    return false;
}

std::set<Clause> drop_subsumed(const std::set<Clause>& in) {
    std::set<Clause> out;
    for (const Clause& c : in) {
        if (!subsumed_by_any(in, c)) out.insert(c);
    }
    return out;
}

}  // namespace

CnfTheory prime_implicates(const CnfTheory& sigma) {
    std::set<Clause> current(sigma.clauses().begin(), sigma.clauses().end());
    current = drop_subsumed(current);
    for (;;) {
        if (!current.empty() && current.begin()->empty()) {
            return CnfTheory({Clause()});
        }
        std::set<Clause> fresh;
        for (const Clause& c1 : current) {
            for (const Clause& c2 : current) {
                if (!(c1 < c2)) continue;
                auto r = resolve(c1, c2);
                if (!r) continue;
                if (current.count(*r) || fresh.count(*r)) continue;
                if (subsumed_by_any(current, *r) || subsumed_by_any(fresh, *r))
                    continue;
                fresh.insert(*r);
            }
        }
        if (fresh.empty()) break;
        std::set<Clause> merged = current;
        merged.insert(fresh.begin(), fresh.end());
        current = drop_subsumed(merged);
    }
    return CnfTheory(std::vector<Clause>(current.begin(), current.end()));
}

CnfTheory negate_to_cnf(const CnfTheory& sigma, int max_clauses) {
    // Distribute over the negated clauses. Starts from {empty clause} (the
    // negation of the empty theory).
    std::set<Clause> acc = {Clause()};
    for (const Clause& c : sigma.clauses()) {
        std::set<Clause> next;
        for (const Clause& partial : acc) {
            for (const Literal& l : c.literals()) {
                std::vector<Literal> lits = partial.literals();
                lits.push_back(l.complement());
                if (auto nc = Clause::normalize(lits)) next.insert(*nc);
                if (static_cast<int>(next.size()) > max_clauses) {
                    throw resource_limit_error(
                        "CNF negation exceeds the clause limit");
                }
            }
        }
        // Pruning is quadratic; past a few thousand clauses it costs more
        // than it saves, so let the guard handle runaway growth instead.
        acc = next.size() <= 4096 ? drop_subsumed(next) : std::move(next);
    }
    return CnfTheory(std::vector<Clause>(acc.begin(), acc.end()));
}

CnfTheory negate_to_cnf(const DnfTheory& delta, int) {
    std::vector<Clause> out;
    out.reserve(delta.size());
    for (const Term& t : delta.terms()) {
        std::vector<Literal> lits;
        for (const Literal& l : t.literals()) lits.push_back(l.complement());
        out.push_back(*Clause::normalize(lits));
    }
    return CnfTheory(std::move(out));
}

DnfTheory prime_implicants(const CnfTheory& sigma, int max_clauses) {
    // t is a prime implicant of sigma iff the complement clause of t is a
    // prime implicate of the negation.
    CnfTheory negated = negate_to_cnf(sigma, max_clauses);
    CnfTheory pis = prime_implicates(negated);
    std::vector<Term> terms;
    terms.reserve(pis.size());
    for (const Clause& c : pis.clauses()) {
        std::vector<Literal> lits;
        for (const Literal& l : c.literals()) lits.push_back(l.complement());
        terms.push_back(*Term::normalize(lits));
    }
    return DnfTheory(std::move(terms));
}

CnfTheory minimize_subsumed(const CnfTheory& sigma) {
    std::set<Clause> set(sigma.clauses().begin(), sigma.clauses().end());
    set = drop_subsumed(set);
    return CnfTheory(std::vector<Clause>(set.begin(), set.end()));
}

DnfTheory minimize_subsumed(const DnfTheory& delta) {
    std::vector<Term> out;
    for (const Term& t : delta.terms()) {
        bool redundant = false;
        for (const Term& s : delta.terms()) {
            if (s != t && subsumes(s, t)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(t);
    }
    return DnfTheory(std::move(out));
}

}  // namespace forgetcnf
