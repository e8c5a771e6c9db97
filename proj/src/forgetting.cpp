#include "forgetcnf/forgetting.hpp"

#include <algorithm>
#include <map>

#include "forgetcnf/errors.hpp"
#include "forgetcnf/fragments.hpp"
#include "forgetcnf/resolution.hpp"
#include "forgetcnf/sat.hpp"

namespace forgetcnf {

namespace {

CnfTheory unfold_step(const CnfTheory& pi, AtomId p, bool prune_entailed) {
    std::vector<Clause> keep, pos, negs;
    for (const Clause& c : pi.clauses()) {
        if (c.contains({p, true})) {
            pos.push_back(c);
        } else if (c.contains({p, false})) {
            negs.push_back(c);
        } else {
            keep.push_back(c);
        }
    }
    CnfTheory acc{std::move(keep)};
    for (const Clause& c : pos) {
        for (const Clause& n : negs) {
            auto r = resolve(c, n);
            if (!r) continue;
            if (acc.contains(*r)) continue;
            if (prune_entailed && entails(acc, *r)) continue;
            acc = acc.with(*r);
        }
    }
    return acc;
}

}  // namespace

CnfTheory strong_unfold(const CnfTheory& pi, AtomId p) {
    return unfold_step(pi, p, false);
}

CnfTheory forget_cnf(const CnfTheory& pi, const std::vector<AtomId>& v,
                     const ForgetOptions& opts) {
    std::vector<AtomId> vset(v);
    std::sort(vset.begin(), vset.end());
    vset.erase(std::unique(vset.begin(), vset.end()), vset.end());

    std::vector<AtomId> order;
    if (opts.atom_order) {
        order = *opts.atom_order;
        std::vector<AtomId> sorted(order);
        std::sort(sorted.begin(), sorted.end());
        if (sorted != vset) {
            throw precondition_error(
                "forget_cnf: atom_order is not a permutation of the forgotten set");
        }
    } else {
        order = vset;
    }

    std::vector<Clause> aside, active;
    for (const Clause& c : pi.clauses()) {
        bool touches = std::ranges::any_of(
            vset, [&](AtomId a) { return c.mentions(a); });
        (touches ? active : aside).push_back(c);
    }

    CnfTheory work{std::move(active)};
    for (AtomId p : order) {
        work = unfold_step(work, p, opts.prune_entailed);
    }

    CnfTheory result = work.merged(CnfTheory(std::move(aside)));
    if (opts.minimize_subsumed) result = minimize_subsumed(result);
    return result;
}

CnfTheory forget_via_pi(const CnfTheory& sigma, const std::vector<AtomId>& v) {
    std::vector<Clause> out;
    CnfTheory pi = prime_implicates(sigma);
    for (const Clause& c : pi.clauses()) {
        bool touches =
            std::ranges::any_of(v, [&](AtomId a) { return c.mentions(a); });
        if (!touches) out.push_back(c);
    }
    return CnfTheory(std::move(out));
}

DnfTheory forget_dnf(const DnfTheory& delta, const std::vector<AtomId>& v) {
    std::vector<AtomId> vs(v);
    std::sort(vs.begin(), vs.end());
    std::vector<Term> out;
    for (const Term& t : delta.terms()) {
        std::vector<Literal> lits;
        for (const Literal& l : t.literals()) {
            if (!std::binary_search(vs.begin(), vs.end(), l.atom))
                lits.push_back(l);
        }
        Term reduced = *Term::normalize(lits);
        if (reduced.empty()) return DnfTheory({Term()});
        out.push_back(std::move(reduced));
    }
    return minimize_subsumed(DnfTheory(std::move(out)));
}

std::vector<CnfTheory> forget_substitution(const CnfTheory& sigma,
                                           const std::vector<AtomId>& v,
                                           int max_atoms) {
    std::vector<AtomId> vs(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (static_cast<int>(vs.size()) > max_atoms) {
        throw resource_limit_error("forget_substitution: " +
                                   std::to_string(vs.size()) +
                                   " atoms exceed the expansion limit of " +
                                   std::to_string(max_atoms));
    }
    std::vector<CnfTheory> disjuncts = {sigma};
    for (AtomId p : vs) {
        std::vector<CnfTheory> next;
        next.reserve(disjuncts.size() * 2);
        for (const CnfTheory& d : disjuncts) {
            next.push_back(substitute(d, p, true));
            next.push_back(substitute(d, p, false));
        }
        disjuncts = std::move(next);
    }
    return disjuncts;
}

std::set<Interpretation> forget_models_oracle(const CnfTheory& sigma,
                                              const std::vector<AtomId>& v,
                                              const std::vector<AtomId>& universe,
                                              int max_atoms) {
    auto models = enumerate_models(sigma, universe, max_atoms);
    std::vector<AtomId> vs(v);
    std::sort(vs.begin(), vs.end());

    std::set<std::vector<AtomId>> projections;
    for (const Interpretation& m : models) {
        std::vector<AtomId> proj;
        std::set_difference(m.atoms().begin(), m.atoms().end(), vs.begin(),
                            vs.end(), std::back_inserter(proj));
        projections.insert(std::move(proj));
    }

    std::vector<AtomId> uni(universe);
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    std::set<Interpretation> out;
    const int n = static_cast<int>(uni.size());
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<AtomId> atoms;
        for (int i = 0; i < n; ++i) {
            if (mask & (1UL << i)) atoms.push_back(uni[i]);
        }
        std::vector<AtomId> proj;
        std::set_difference(atoms.begin(), atoms.end(), vs.begin(), vs.end(),
                            std::back_inserter(proj));
        if (projections.count(proj)) out.insert(Interpretation(std::move(atoms)));
    }
    return out;
}

namespace {

// Literal reachability in the implication graph of a Krom theory. With a
// satisfiable base theory, sigma |= l1 v l2 iff the complement of one side
// reaches the other side (or its own complement reaches it).
class KromEntailment {
  public:
    explicit KromEntailment(const CnfTheory& sigma) {
        for (AtomId a : sigma.signature()) {
            dense_[a] = static_cast<int>(order_.size());
            order_.push_back(a);
        }
        const int n = static_cast<int>(order_.size()) * 2;
        adj_.resize(n);
        for (const Clause& c : sigma.clauses()) {
            auto lits = c.literals();
            if (lits.size() == 1) {
                add(lits[0].complement(), lits[0]);
            } else if (lits.size() == 2) {
                add(lits[0].complement(), lits[1]);
                add(lits[1].complement(), lits[0]);
            }
        }
        reach_.assign(n, std::vector<bool>(n, false));
        for (int s = 0; s < n; ++s) {
            std::vector<int> stack = {s};
            reach_[s][s] = true;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj_[u]) {
                    if (!reach_[s][w]) {
                        reach_[s][w] = true;
                        stack.push_back(w);
                    }
                }
            }
        }
    }

    bool forced(Literal l) const {  // sigma |= l
        return reach_[node(l.complement())][node(l)];
    }

    bool entails_pair(Literal l1, Literal l2) const {
        return forced(l1) || forced(l2) ||
               reach_[node(l1.complement())][node(l2)];
    }

  private:
    int node(Literal l) const {
        return dense_.at(l.atom) * 2 + (l.positive ? 1 : 0);
    }
    void add(Literal from, Literal to) { adj_[node(from)].push_back(node(to)); }

    std::map<AtomId, int> dense_;
    std::vector<AtomId> order_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<bool>> reach_;
};

}  // namespace

CnfTheory forget_krom(const CnfTheory& sigma, const std::vector<AtomId>& v) {
    if (!is_krom(sigma)) {
        throw precondition_error("forget_krom: input is not Krom");
    }
    if (!two_sat(sigma).satisfiable) return CnfTheory({Clause()});

    std::vector<AtomId> vs(v);
    std::sort(vs.begin(), vs.end());
    std::vector<AtomId> kept;
    for (AtomId a : sigma.signature()) {
        if (!std::binary_search(vs.begin(), vs.end(), a)) kept.push_back(a);
    }

    KromEntailment ent(sigma);
    std::vector<Clause> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        for (bool p1 : {false, true}) {
            Literal l1{kept[i], p1};
            if (ent.forced(l1)) {
                out.push_back(Clause::of({l1}));
                continue;
            }
            for (size_t j = i + 1; j < kept.size(); ++j) {
                for (bool p2 : {false, true}) {
                    Literal l2{kept[j], p2};
                    if (ent.forced(l2)) continue;
                    if (ent.entails_pair(l1, l2)) {
                        out.push_back(Clause::of({l1, l2}));
                    }
                }
            }
        }
    }
    return minimize_subsumed(CnfTheory(std::move(out)));
}

}  // namespace forgetcnf
