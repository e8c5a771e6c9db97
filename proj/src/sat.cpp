#include "forgetcnf/sat.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "forgetcnf/errors.hpp"

namespace forgetcnf {

bool is_horn_clause(const Clause& c) { return c.positive_count() <= 1; }

bool is_krom_clause(const Clause& c) { return c.size() <= 2; }

SatResult horn_sat(const CnfTheory& sigma) {
    for (const Clause& c : sigma.clauses()) {
        if (!is_horn_clause(c)) {
            throw precondition_error("horn_sat: non-Horn clause with " +
                                     std::to_string(c.positive_count()) +
                                     " positive literals");
        }
    }
    if (sigma.contains_empty_clause()) return SatResult::unsat();

    // Forward chaining: a Horn clause is a rule body -> head, or a pure
    // constraint when it has no positive literal.
    std::set<AtomId> forced;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Clause& c : sigma.clauses()) {
            std::optional<AtomId> head;
            bool body_holds = true;
            for (const Literal& l : c.literals()) {
                if (l.positive) {
                    head = l.atom;
                } else if (!forced.count(l.atom)) {
                    body_holds = false;
                    break;
                }
            }
            if (!body_holds) continue;
            if (!head) return SatResult::unsat();
            if (forced.insert(*head).second) changed = true;
        }
    }
    return SatResult::sat(
        Interpretation(std::vector<AtomId>(forced.begin(), forced.end())));
}

namespace {

// Tarjan over the 2-CNF implication graph. Nodes are literals indexed by
// 2*var + polarity over a dense variable numbering.
class TwoSatSolver {
  public:
    explicit TwoSatSolver(const CnfTheory& sigma) {
        for (AtomId a : sigma.signature()) {
            dense_[a] = static_cast<int>(order_.size());
            order_.push_back(a);
        }
        const int n = static_cast<int>(order_.size()) * 2;
        adj_.resize(n);
        for (const Clause& c : sigma.clauses()) {
            auto lits = c.literals();
            if (lits.empty()) {
                contradiction_ = true;
            } else if (lits.size() == 1) {
                add_implication(lits[0].complement(), lits[0]);
            } else {
                add_implication(lits[0].complement(), lits[1]);
                add_implication(lits[1].complement(), lits[0]);
            }
        }
    }

    SatResult solve() {
        if (contradiction_) return SatResult::unsat();
        const int n = static_cast<int>(adj_.size());
        comp_.assign(n, -1);
        low_.assign(n, 0);
        index_.assign(n, -1);
        for (int v = 0; v < n; ++v) {
            if (index_[v] < 0) dfs(v);
        }
        std::vector<AtomId> model;
        for (size_t i = 0; i < order_.size(); ++i) {
            int posNode = static_cast<int>(i) * 2 + 1;
            int negNode = static_cast<int>(i) * 2;
            if (comp_[posNode] == comp_[negNode]) return SatResult::unsat();
            // Components are numbered sinks-first; the sink side wins.
            if (comp_[posNode] < comp_[negNode]) model.push_back(order_[i]);
        }
        return SatResult::sat(Interpretation(std::move(model)));
    }

  private:
    int node(Literal l) const {
        return dense_.at(l.atom) * 2 + (l.positive ? 1 : 0);
    }

    void add_implication(Literal from, Literal to) {
        adj_[node(from)].push_back(node(to));
    }

    void dfs(int v) {
        index_[v] = low_[v] = counter_++;
        stack_.push_back(v);
        on_stack_.insert(v);
        for (int w : adj_[v]) {
            if (index_[w] < 0) {
                dfs(w);
                low_[v] = std::min(low_[v], low_[w]);
            } else if (on_stack_.count(w)) {
                low_[v] = std::min(low_[v], index_[w]);
            }
        }
        if (low_[v] == index_[v]) {
            for (;;) {
                int w = stack_.back();
                stack_.pop_back();
                on_stack_.erase(w);
                comp_[w] = ncomp_;
                if (w == v) break;
            }
            ++ncomp_;
        }
    }

    std::map<AtomId, int> dense_;
    std::vector<AtomId> order_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> comp_, low_, index_, stack_;
    std::set<int> on_stack_;
    int counter_ = 0;
    int ncomp_ = 0;
    bool contradiction_ = false;
};

}  // namespace

SatResult two_sat(const CnfTheory& sigma) {
    for (const Clause& c : sigma.clauses()) {
        if (!is_krom_clause(c)) {
            throw precondition_error("two_sat: clause with " +
                                     std::to_string(c.size()) + " literals");
        }
    }
    return TwoSatSolver(sigma).solve();
}

namespace {

using RawClauses = std::vector<std::vector<int>>;  // encoded literal codes

// Simplify under "code is true": drop satisfied clauses, shrink the rest.
// Returns false on an emptied clause.
bool assign(RawClauses& clauses, int code) {
    const int compl_code = code ^ 1;
    for (size_t i = 0; i < clauses.size();) {
        auto& c = clauses[i];
        if (std::find(c.begin(), c.end(), code) != c.end()) {
            c = std::move(clauses.back());
            clauses.pop_back();
            continue;
        }
        std::erase(c, compl_code);
        if (c.empty()) return false;
        ++i;
    }
    return true;
}

bool dpll(RawClauses clauses, std::set<AtomId>& trail) {
    for (;;) {
        if (clauses.empty()) return true;

        // Unit propagation.
        auto unit = std::find_if(clauses.begin(), clauses.end(),
                                 [](const auto& c) { return c.size() == 1; });
        if (unit != clauses.end()) {
            int code = unit->front();
            if (code & 1) trail.insert(code / 2);
            if (!assign(clauses, code)) return false;
            continue;
        }

        // Pure-literal elimination, lowest atom id first.
        std::map<AtomId, int> seen;  // bit 0: negative occurs, bit 1: positive
        for (const auto& c : clauses) {
            for (int code : c) seen[code / 2] |= (code & 1) ? 2 : 1;
        }
        bool purified = false;
        for (const auto& [atom, mask] : seen) {
            if (mask == 1 || mask == 2) {
                int code = atom * 2 + (mask == 2 ? 1 : 0);
                if (code & 1) trail.insert(atom);
                if (!assign(clauses, code)) return false;
                purified = true;
                break;
            }
        }
        if (purified) continue;

        // Branch on the lowest unassigned atom, true first.
        AtomId p = seen.begin()->first;
        auto saved = trail;
        auto branch = clauses;
        trail.insert(p);
        if (assign(branch, p * 2 + 1) && dpll(std::move(branch), trail))
            return true;
        trail = std::move(saved);
        branch = clauses;
        if (assign(branch, p * 2) && dpll(std::move(branch), trail)) return true;
        return false;
    }
}

}  // namespace

SatResult dpll_sat(const CnfTheory& sigma) {
    RawClauses clauses;
    clauses.reserve(sigma.size());
    for (const Clause& c : sigma.clauses()) clauses.push_back(c.codes());
    std::set<AtomId> trail;
    if (!dpll(std::move(clauses), trail)) return SatResult::unsat();
    return SatResult::sat(
        Interpretation(std::vector<AtomId>(trail.begin(), trail.end())));
}

bool entails(const CnfTheory& sigma, const Clause& c) {
    std::vector<Clause> clauses = sigma.clauses();
    for (const Literal& l : c.literals()) {
        clauses.push_back(Clause::of({l.complement()}));
    }
    CnfTheory augmented{std::move(clauses)};

    bool horn = true, krom = true;
    for (const Clause& cl : augmented.clauses()) {
        horn = horn && is_horn_clause(cl);
        krom = krom && is_krom_clause(cl);
    }
    SatResult r = horn   ? horn_sat(augmented)
                  : krom ? two_sat(augmented)
                         : dpll_sat(augmented);
    return !r.satisfiable;
}

bool entails(const CnfTheory& sigma, const CnfTheory& pi) {
    for (const Clause& c : pi.clauses()) {
        if (!entails(sigma, c)) return false;
    }
    return true;
}

}  // namespace forgetcnf
