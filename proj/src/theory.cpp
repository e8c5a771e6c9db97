#include "forgetcnf/theory.hpp"

#include <algorithm>

namespace forgetcnf {

Interpretation::Interpretation(std::vector<AtomId> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool Interpretation::contains(AtomId a) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

bool Interpretation::satisfies(const Clause& c) const {
    for (int code : c.codes()) {
        if (satisfies(Literal::decode(code))) return true;
    }
    return false;
}

bool Interpretation::satisfies(const Term& t) const {
    for (int code : t.codes()) {
        if (!satisfies(Literal::decode(code))) return false;
    }
    return true;
}

Interpretation Interpretation::intersect(const Interpretation& o) const {
    std::vector<AtomId> out;
    std::set_intersection(atoms_.begin(), atoms_.end(), o.atoms_.begin(),
                          o.atoms_.end(), std::back_inserter(out));
    return Interpretation(std::move(out));
}

Interpretation Interpretation::flip(const std::vector<AtomId>& v) const {
    std::vector<AtomId> vs(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<AtomId> out;
    std::set_symmetric_difference(atoms_.begin(), atoms_.end(), vs.begin(),
                                  vs.end(), std::back_inserter(out));
    return Interpretation(std::move(out));
}

CnfTheory::CnfTheory(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool CnfTheory::contains_empty_clause() const {
    return !clauses_.empty() && clauses_.front().empty();
}

bool CnfTheory::contains(const Clause& c) const {
    return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

std::vector<AtomId> CnfTheory::signature() const {
    std::vector<AtomId> out;
    for (const Clause& c : clauses_) {
        auto as = c.atoms();
        out.insert(out.end(), as.begin(), as.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool CnfTheory::satisfied_by(const Interpretation& m) const {
    for (const Clause& c : clauses_) {
        if (!m.satisfies(c)) return false;
    }
    return true;
}

CnfTheory CnfTheory::with(const Clause& c) const {
    auto clauses = clauses_;
    clauses.push_back(c);
    return CnfTheory(std::move(clauses));
}

CnfTheory CnfTheory::merged(const CnfTheory& o) const {
    auto clauses = clauses_;
    clauses.insert(clauses.end(), o.clauses_.begin(), o.clauses_.end());
    return CnfTheory(std::move(clauses));
}

DnfTheory::DnfTheory(std::vector<Term> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

bool DnfTheory::contains_empty_term() const {
    return !terms_.empty() && terms_.front().empty();
}

std::vector<AtomId> DnfTheory::signature() const {
    std::vector<AtomId> out;
    for (const Term& t : terms_) {
        auto as = t.atoms();
        out.insert(out.end(), as.begin(), as.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool DnfTheory::satisfied_by(const Interpretation& m) const {
    for (const Term& t : terms_) {
        if (m.satisfies(t)) return true;
    }
    return false;
}

}  // namespace forgetcnf
