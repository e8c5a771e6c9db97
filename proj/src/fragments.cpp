#include "forgetcnf/fragments.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "forgetcnf/errors.hpp"
#include "forgetcnf/resolution.hpp"
#include "forgetcnf/sat.hpp"

namespace forgetcnf {

bool is_horn(const CnfTheory& sigma) {
    return std::all_of(sigma.clauses().begin(), sigma.clauses().end(),
                       is_horn_clause);
}

bool is_krom(const CnfTheory& sigma) {
    return std::all_of(sigma.clauses().begin(), sigma.clauses().end(),
                       is_krom_clause);
}

std::optional<std::vector<AtomId>> renamable_horn_witness(const CnfTheory& sigma) {
    if (is_horn(sigma)) return std::vector<AtomId>{};

    // One selector atom s_x per atom x; s_x true means x is renamed. For each
    // literal pair within a clause, forbid both being positive after the
    // renaming. The selector constraint comes out literal-for-literal equal
    // to the original pair.
    std::vector<Clause> constraints;
    for (const Clause& c : sigma.clauses()) {
        auto lits = c.literals();
        for (size_t i = 0; i < lits.size(); ++i) {
            for (size_t j = i + 1; j < lits.size(); ++j) {
                constraints.push_back(Clause::of({lits[i], lits[j]}));
            }
        }
    }
    SatResult r = two_sat(CnfTheory(std::move(constraints)));
    if (!r.satisfiable) return std::nullopt;
    std::vector<AtomId> v = r.model->atoms();
    assert(is_horn(rename(sigma, v)));
    return v;
}

bool qh_partition_check(const CnfTheory& sigma, const QhPartition& part) {
    std::vector<AtomId> q(part.q), h(part.h);
    std::sort(q.begin(), q.end());
    std::sort(h.begin(), h.end());
    std::vector<AtomId> overlap;
    std::set_intersection(q.begin(), q.end(), h.begin(), h.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty()) {
        throw precondition_error("qh_partition_check: Q and H overlap");
    }
    for (AtomId a : sigma.signature()) {
        if (!std::binary_search(q.begin(), q.end(), a) &&
            !std::binary_search(h.begin(), h.end(), a)) {
            throw precondition_error(
                "qh_partition_check: partition does not cover the signature");
        }
    }
    for (const Clause& c : sigma.clauses()) {
        int var_q = 0, pos_h = 0;
        for (const Literal& l : c.literals()) {
            if (std::binary_search(q.begin(), q.end(), l.atom)) ++var_q;
            if (l.positive && std::binary_search(h.begin(), h.end(), l.atom))
                ++pos_h;
        }
        if (var_q > 2 || pos_h > 1) return false;
        if (pos_h == 1 && var_q > 0) return false;
    }
    return true;
}

namespace {

// Backtracking search for per-atom weights in {0, 1/2, 1} (stored doubled)
// such that every clause's literal weights sum to at most 1 (doubled: 2).
class QHornSearch {
  public:
    explicit QHornSearch(const CnfTheory& sigma) : sigma_(sigma) {
        atoms_ = sigma.signature();
        for (size_t i = 0; i < atoms_.size(); ++i) index_[atoms_[i]] = i;
        sums_.assign(sigma.size(), 0);
    }

    std::optional<std::vector<int>> run() {
        weights_.assign(atoms_.size(), -1);
        if (search(0)) return weights_;
        return std::nullopt;
    }

    const std::vector<AtomId>& atoms() const { return atoms_; }

  private:
    bool search(size_t k) {
        if (k == atoms_.size()) return true;
        for (int d : {2, 1, 0}) {
            if (apply(k, d)) {
                if (search(k + 1)) return true;
            }
            undo(k, d);
        }
        return false;
    }

    // Literal weight, doubled: d for a positive literal, 2-d for a negative.
    bool apply(size_t k, int d) {
        weights_[k] = d;
        bool feasible = true;
        const auto& clauses = sigma_.clauses();
        for (size_t ci = 0; ci < clauses.size(); ++ci) {
            for (const Literal& l : clauses[ci].literals()) {
                if (index_.at(l.atom) != k) continue;
                sums_[ci] += l.positive ? d : 2 - d;
                if (sums_[ci] > 2) feasible = false;
            }
        }
        return feasible;
    }

    void undo(size_t k, int d) {
        const auto& clauses = sigma_.clauses();
        for (size_t ci = 0; ci < clauses.size(); ++ci) {
            for (const Literal& l : clauses[ci].literals()) {
                if (index_.at(l.atom) != k) continue;
                sums_[ci] -= l.positive ? d : 2 - d;
            }
        }
        weights_[k] = -1;
    }

    const CnfTheory& sigma_;
    std::vector<AtomId> atoms_;
    std::map<AtomId, size_t> index_;
    std::vector<int> weights_;  // doubled, -1 = unassigned
    std::vector<int> sums_;     // doubled assigned weight per clause
};

}  // namespace

std::optional<QHornWitness> q_horn_witness(const CnfTheory& sigma) {
    QHornSearch search(sigma);
    auto weights = search.run();
    if (!weights) return std::nullopt;
    QHornWitness w;
    for (size_t i = 0; i < weights->size(); ++i) {
        AtomId a = search.atoms()[i];
        switch ((*weights)[i]) {
            case 0:
                w.renaming.push_back(a);
                w.partition.h.push_back(a);
                break;
            case 1:
                w.partition.q.push_back(a);
                break;
            case 2:
                w.partition.h.push_back(a);
                break;
        }
    }
    assert(qh_partition_check(rename(sigma, w.renaming), w.partition));
    return w;
}

bool is_double_horn(const CnfTheory& sigma, int max_atoms) {
    auto universe = sigma.signature();
    auto models = enumerate_models(sigma, universe, max_atoms);

    auto closed = [](const std::set<Interpretation>& ms) {
        for (const auto& m1 : ms) {
            for (const auto& m2 : ms) {
                if (!ms.count(m1.intersect(m2))) return false;
            }
        }
        return true;
    };
    if (!closed(models)) return false;

    std::set<Interpretation> complement;
    const int n = static_cast<int>(universe.size());
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<AtomId> atoms;
        for (int i = 0; i < n; ++i) {
            if (mask & (1UL << i)) atoms.push_back(universe[i]);
        }
        Interpretation m(std::move(atoms));
        if (!models.count(m)) complement.insert(std::move(m));
    }
    return closed(complement);
}

FragmentReport classify(const CnfTheory& sigma, int max_atoms) {
    FragmentReport report;
    report.horn = is_horn(sigma);
    report.krom = is_krom(sigma);

    auto sig = sigma.signature();
    if (report.horn) {
        report.renamable_horn = std::vector<AtomId>{};
        report.q_horn = QHornWitness{{}, {{}, sig}};
    } else {
        report.renamable_horn = renamable_horn_witness(sigma);
        if (report.renamable_horn) {
            report.q_horn = QHornWitness{*report.renamable_horn, {{}, sig}};
        } else if (report.krom) {
            report.q_horn = QHornWitness{{}, {sig, {}}};
        } else {
            report.q_horn = q_horn_witness(sigma);
        }
    }
    try {
        report.double_horn = is_double_horn(sigma, max_atoms);
    } catch (const resource_limit_error&) {
        report.double_horn = std::nullopt;
    }
    return report;
}

}  // namespace forgetcnf
