#pragma once

#include <vector>

#include "forgetcnf/clause.hpp"

namespace forgetcnf {

// A finite set of atoms assigned true.
class Interpretation {
  public:
    Interpretation() = default;
    explicit Interpretation(std::vector<AtomId> atoms);

    bool contains(AtomId a) const;
    const std::vector<AtomId>& atoms() const { return atoms_; }

    bool satisfies(Literal l) const { return contains(l.atom) == l.positive; }
    bool satisfies(const Clause& c) const;
    bool satisfies(const Term& t) const;

    Interpretation intersect(const Interpretation& o) const;
    // Symmetric difference with an atom set, per-element.
    Interpretation flip(const std::vector<AtomId>& v) const;

    bool operator==(const Interpretation&) const = default;
    auto operator<=>(const Interpretation&) const = default;

  private:
    std::vector<AtomId> atoms_;  // sorted, unique
};

// A duplicate-free set of clauses in canonical order. Empty theory is truth;
// a theory containing the empty clause is falsity.
class CnfTheory {
  public:
    CnfTheory() = default;
    explicit CnfTheory(std::vector<Clause> clauses);

    const std::vector<Clause>& clauses() const { return clauses_; }
    int size() const { return static_cast<int>(clauses_.size()); }
    bool is_top() const { return clauses_.empty(); }
    bool contains_empty_clause() const;
    bool contains(const Clause& c) const;

    std::vector<AtomId> signature() const;

    bool satisfied_by(const Interpretation& m) const;

    CnfTheory with(const Clause& c) const;
    CnfTheory merged(const CnfTheory& o) const;

    bool operator==(const CnfTheory&) const = default;

  private:
    std::vector<Clause> clauses_;  // sorted, unique
};

// A duplicate-free set of terms. Empty DNF is falsity; a DNF containing the
// empty term is truth.
class DnfTheory {
  public:
    DnfTheory() = default;
    explicit DnfTheory(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    int size() const { return static_cast<int>(terms_.size()); }
    bool is_bottom() const { return terms_.empty(); }
    bool contains_empty_term() const;

    std::vector<AtomId> signature() const;

    bool satisfied_by(const Interpretation& m) const;

    bool operator==(const DnfTheory&) const = default;

  private:
    std::vector<Term> terms_;  // sorted, unique
};

}  // namespace forgetcnf
