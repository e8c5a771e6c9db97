#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "forgetcnf/atoms.hpp"

namespace forgetcnf {

namespace detail {
// Sorted, duplicate-free encoded literals with no complementary pair.
// Returns nullopt if a complementary pair is present.
std::optional<std::vector<int>> normalize_literals(std::span<const Literal> lits);
}  // namespace detail

// A disjunction of literals in canonical form. The empty clause is falsity.
// Tautologies are not representable; construction rejects them.
class Clause {
  public:
    Clause() = default;  // the empty clause

    // nullopt signals a tautology (complementary pair).
    static std::optional<Clause> normalize(std::span<const Literal> lits);
    static Clause of(std::initializer_list<Literal> lits);

    int size() const { return static_cast<int>(codes_.size()); }
    bool empty() const { return codes_.empty(); }
    bool contains(Literal l) const;
    bool mentions(AtomId a) const;

    std::vector<Literal> literals() const;
    const std::vector<int>& codes() const { return codes_; }

    std::vector<AtomId> atoms() const;
    int positive_count() const;

    bool operator==(const Clause&) const = default;
    auto operator<=>(const Clause&) const = default;

  private:
    explicit Clause(std::vector<int> codes) : codes_(std::move(codes)) {}
    std::vector<int> codes_;
};

// A conjunction of literals in canonical form. The empty term is truth.
class Term {
  public:
    Term() = default;  // the empty term

    // nullopt signals a contradictory term (complementary pair).
    static std::optional<Term> normalize(std::span<const Literal> lits);
    static Term of(std::initializer_list<Literal> lits);

    int size() const { return static_cast<int>(codes_.size()); }
    bool empty() const { return codes_.empty(); }
    bool contains(Literal l) const;
    bool mentions(AtomId a) const;

    std::vector<Literal> literals() const;
    const std::vector<int>& codes() const { return codes_; }
    std::vector<AtomId> atoms() const;

    bool operator==(const Term&) const = default;
    auto operator<=>(const Term&) const = default;

  private:
    explicit Term(std::vector<int> codes) : codes_(std::move(codes)) {}
    std::vector<int> codes_;
};

// true iff literals(c1) is a subset of literals(c2).
bool subsumes(const Clause& c1, const Clause& c2);
bool subsumes(const Term& t1, const Term& t2);

}  // namespace forgetcnf
