#include "forgetcnf/clause.hpp"

#include <algorithm>

namespace forgetcnf {

namespace detail {

std::optional<std::vector<int>> normalize_literals(std::span<const Literal> lits) {
    std::vector<int> codes;
    codes.reserve(lits.size());
    for (const Literal& l : lits) codes.push_back(l.encode());
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    for (size_t i = 1; i < codes.size(); ++i) {
        if (codes[i] / 2 == codes[i - 1] / 2) return std::nullopt;
    }
    return codes;
}

static bool codes_contain(const std::vector<int>& codes, int code) {
    return std::binary_search(codes.begin(), codes.end(), code);
}

static bool codes_mention(const std::vector<int>& codes, AtomId a) {
    return codes_contain(codes, a * 2) || codes_contain(codes, a * 2 + 1);
}

static std::vector<Literal> codes_to_literals(const std::vector<int>& codes) {
    std::vector<Literal> out;
    out.reserve(codes.size());
    for (int c : codes) out.push_back(Literal::decode(c));
    return out;
}

static std::vector<AtomId> codes_to_atoms(const std::vector<int>& codes) {
    std::vector<AtomId> out;
    out.reserve(codes.size());
    for (int c : codes) out.push_back(c / 2);
    return out;  // already sorted and unique: no complementary pairs
}

}  // namespace detail

std::optional<Clause> Clause::normalize(std::span<const Literal> lits) {
    auto codes = detail::normalize_literals(lits);
    if (!codes) return std::nullopt;
    return Clause(std::move(*codes));
}

Clause Clause::of(std::initializer_list<Literal> lits) {
    auto c = normalize(std::span(lits.begin(), lits.size()));
    if (!c) throw std::invalid_argument("tautologous clause literal list");
    return *c;
}

bool Clause::contains(Literal l) const {
    return detail::codes_contain(codes_, l.encode());
}

bool Clause::mentions(AtomId a) const { return detail::codes_mention(codes_, a); }

std::vector<Literal> Clause::literals() const {
    return detail::codes_to_literals(codes_);
}

std::vector<AtomId> Clause::atoms() const { return detail::codes_to_atoms(codes_); }

int Clause::positive_count() const {
    int n = 0;
    for (int c : codes_) n += c & 1;
    return n;
}

std::optional<Term> Term::normalize(std::span<const Literal> lits) {
    auto codes = detail::normalize_literals(lits);
    if (!codes) return std::nullopt;
    return Term(std::move(*codes));
}

Term Term::of(std::initializer_list<Literal> lits) {
    auto t = normalize(std::span(lits.begin(), lits.size()));
    if (!t) throw std::invalid_argument("contradictory term literal list");
    return *t;
}

bool Term::contains(Literal l) const {
    return detail::codes_contain(codes_, l.encode());
}

bool Term::mentions(AtomId a) const { return detail::codes_mention(codes_, a); }

std::vector<Literal> Term::literals() const {
    return detail::codes_to_literals(codes_);
}

std::vector<AtomId> Term::atoms() const { return detail::codes_to_atoms(codes_); }

bool subsumes(const Clause& c1, const Clause& c2) {
    return std::includes(c2.codes().begin(), c2.codes().end(),
                         c1.codes().begin(), c1.codes().end());
}

bool subsumes(const Term& t1, const Term& t2) {
    return std::includes(t2.codes().begin(), t2.codes().end(),
                         t1.codes().begin(), t1.codes().end());
}

}  // namespace forgetcnf
