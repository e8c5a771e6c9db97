#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forgetcnf/forgetting.hpp"
#include "forgetcnf/models.hpp"
#include "forgetcnf/theory.hpp"

namespace forgetcnf::test {

// Builds clauses/theories from compact strings over a shared atom table, so
// expected and actual values compare syntactically. Clause separator is ';'
// or newline, literal prefix '-' negates.
struct Builder {
    AtomTable atoms;

    AtomId id(const std::string& name) { return atoms.intern(name); }

    Literal lit(std::string tok) {
        bool positive = true;
        if (!tok.empty() && (tok[0] == '-' || tok[0] == '~')) {
            positive = false;
            tok.erase(0, 1);
        }
        return {atoms.intern(tok), positive};
    }

    std::vector<Literal> lits(const std::string& line) {
        std::istringstream in(line);
        std::string tok;
        std::vector<Literal> out;
        while (in >> tok) out.push_back(lit(tok));
        return out;
    }

    Clause cl(const std::string& line) { return *Clause::normalize(lits(line)); }
    Term tm(const std::string& line) { return *Term::normalize(lits(line)); }

    CnfTheory cnf(const std::string& text) {
        std::vector<Clause> out;
        for (const std::string& part : split_parts(text)) out.push_back(cl(part));
        return CnfTheory(std::move(out));
    }

    DnfTheory dnf(const std::string& text) {
        std::vector<Term> out;
        for (const std::string& part : split_parts(text)) out.push_back(tm(part));
        return DnfTheory(std::move(out));
    }

    std::vector<AtomId> ids(const std::string& csv) {
        std::vector<AtomId> out;
        std::string item;
        std::istringstream in(csv);
        while (std::getline(in, item, ',')) {
            std::istringstream trim(item);
            std::string word;
            while (trim >> word) out.push_back(atoms.intern(word));
        }
        return out;
    }

  private:
    static std::vector<std::string> split_parts(const std::string& text) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : text + ";") {
            if (ch == ';' || ch == '\n') {
                std::istringstream probe(cur);
                std::string word;
                if (probe >> word) parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        return parts;
    }
};

inline std::vector<AtomId> union_atoms(std::vector<AtomId> a,
                                       const std::vector<AtomId>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

inline bool equivalent(const CnfTheory& x, const CnfTheory& y) {
    auto uni = union_atoms(x.signature(), y.signature());
    return enumerate_models(x, uni) == enumerate_models(y, uni);
}

inline bool equivalent(const CnfTheory& x, const DnfTheory& y) {
    auto uni = union_atoms(x.signature(), y.signature());
    return enumerate_models(x, uni) == enumerate_models(y, uni);
}

inline bool subset(const std::set<Interpretation>& a,
                   const std::set<Interpretation>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<AtomId> atom_pool(Builder& b, int n,
                                     const std::string& prefix = "v") {
    std::vector<AtomId> pool;
    for (int i = 0; i < n; ++i) pool.push_back(b.id(prefix + std::to_string(i)));
    return pool;
}

inline CnfTheory random_cnf(std::mt19937& rng, const std::vector<AtomId>& pool,
                            int max_clauses, int max_width) {
    std::uniform_int_distribution<int> nclauses(0, max_clauses);
    std::uniform_int_distribution<int> width(1, max_width);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    std::bernoulli_distribution sign(0.5);
    std::vector<Clause> out;
    int n = nclauses(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<Literal> ls;
        int w = width(rng);
        for (int j = 0; j < w; ++j) ls.push_back({pool[pick(rng)], sign(rng)});
        if (auto c = Clause::normalize(ls)) out.push_back(std::move(*c));
    }
    return CnfTheory(std::move(out));
}

inline CnfTheory random_horn(std::mt19937& rng, const std::vector<AtomId>& pool,
                             int max_clauses, int max_width) {
    std::uniform_int_distribution<int> nclauses(0, max_clauses);
    std::uniform_int_distribution<int> width(1, max_width);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    std::bernoulli_distribution head(0.5);
    std::vector<Clause> out;
    int n = nclauses(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<Literal> ls;
        int w = width(rng);
        bool with_head = head(rng);
        for (int j = 0; j < w; ++j) {
            bool positive = with_head && j == 0;
            ls.push_back({pool[pick(rng)], positive});
        }
        if (auto c = Clause::normalize(ls)) out.push_back(std::move(*c));
    }
    return CnfTheory(std::move(out));
}

inline CnfTheory random_krom(std::mt19937& rng, const std::vector<AtomId>& pool,
                             int max_clauses) {
    return random_cnf(rng, pool, max_clauses, 2);
}

inline std::vector<AtomId> random_subset(std::mt19937& rng,
                                         std::vector<AtomId> pool,
                                         int max_size) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<int> size(
        0, std::min<int>(max_size, static_cast<int>(pool.size())));
    pool.resize(size(rng));
    std::sort(pool.begin(), pool.end());
    return pool;
}

// All size-k-or-less atom subsets enumerated by bitmask; used by the
// brute-force fragment oracles.
inline std::vector<std::vector<AtomId>> all_subsets(const std::vector<AtomId>& sig) {
    std::vector<std::vector<AtomId>> out;
    const int n = static_cast<int>(sig.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<AtomId> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(sig[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

// Brute-force model-level semantics of the six decision tasks.
inline bool oracle_task_var_ind(const CnfTheory& pi, const std::vector<AtomId>& v) {
    auto uni = union_atoms(pi.signature(), v);
    return enumerate_models(pi, uni) == forget_models_oracle(pi, v, uni);
}

}  // namespace forgetcnf::test
