#pragma once

#include <set>

#include "forgetcnf/theory.hpp"

namespace forgetcnf {

inline constexpr int kDefaultModelAtomLimit = 20;

// All interpretations over `universe` satisfying the theory. The universe
// must cover the theory's signature and stay within `max_atoms`.
std::set<Interpretation> enumerate_models(const CnfTheory& sigma,
                                          const std::vector<AtomId>& universe,
                                          int max_atoms = kDefaultModelAtomLimit);

std::set<Interpretation> enumerate_models(const DnfTheory& delta,
                                          const std::vector<AtomId>& universe,
                                          int max_atoms = kDefaultModelAtomLimit);

}  // namespace forgetcnf
