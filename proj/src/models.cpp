#include "forgetcnf/models.hpp"

#include <algorithm>

#include "forgetcnf/errors.hpp"

namespace forgetcnf {

namespace {

std::vector<AtomId> checked_universe(std::vector<AtomId> universe,
                                     const std::vector<AtomId>& signature,
                                     int max_atoms) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    if (static_cast<int>(universe.size()) > max_atoms) {
        throw resource_limit_error("model enumeration over " +
                                   std::to_string(universe.size()) +
                                   " atoms exceeds the limit of " +
                                   std::to_string(max_atoms));
    }
    if (!std::includes(universe.begin(), universe.end(), signature.begin(),
                       signature.end())) {
        throw precondition_error("universe does not cover the theory signature");
    }
    return universe;
}

template <class Theory>
std::set<Interpretation> enumerate(const Theory& theory,
                                   std::vector<AtomId> universe, int max_atoms) {
    universe = checked_universe(std::move(universe), theory.signature(), max_atoms);
    const int n = static_cast<int>(universe.size());
    std::set<Interpretation> out;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<AtomId> atoms;
        for (int i = 0; i < n; ++i) {
            if (mask & (1UL << i)) atoms.push_back(universe[i]);
        }
        Interpretation m(std::move(atoms));
        if (theory.satisfied_by(m)) out.insert(std::move(m));
    }
    return out;
}

}  // namespace

std::set<Interpretation> enumerate_models(const CnfTheory& sigma,
                                          const std::vector<AtomId>& universe,
                                          int max_atoms) {
    return enumerate(sigma, universe, max_atoms);
}

std::set<Interpretation> enumerate_models(const DnfTheory& delta,
                                          const std::vector<AtomId>& universe,
                                          int max_atoms) {
    return enumerate(delta, universe, max_atoms);
}

}  // namespace forgetcnf
