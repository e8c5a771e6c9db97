#pragma once

#include <optional>

#include "forgetcnf/models.hpp"
#include "forgetcnf/theory.hpp"

namespace forgetcnf {

// Variable split with per-clause bounds: at most two Q-variables, at most one
// positive H-variable, and mutual exclusion between the two.
struct QhPartition {
    std::vector<AtomId> q;
    std::vector<AtomId> h;
};

struct QHornWitness {
    std::vector<AtomId> renaming;
    QhPartition partition;
};

struct FragmentReport {
    bool horn = false;
    bool krom = false;
    std::optional<std::vector<AtomId>> renamable_horn;
    std::optional<QHornWitness> q_horn;
    std::optional<bool> double_horn;  // absent when the model guard trips
};

bool is_horn(const CnfTheory& sigma);
bool is_krom(const CnfTheory& sigma);

// A renaming set V with rename(sigma, V) Horn, or nullopt if none exists.
// Decided by a 2-SAT encoding over one selector atom per variable.
std::optional<std::vector<AtomId>> renamable_horn_witness(const CnfTheory& sigma);

// Checks the three QH-partition conditions; the partition must cover the
// theory signature.
bool qh_partition_check(const CnfTheory& sigma, const QhPartition& part);

// Exact feasibility search over per-atom weights in {0, 1/2, 1}: a q-Horn
// renaming plus partition, or nullopt.
std::optional<QHornWitness> q_horn_witness(const CnfTheory& sigma);

// Model-based check: both the model set and its complement are closed under
// pairwise intersection.
bool is_double_horn(const CnfTheory& sigma,
                    int max_atoms = kDefaultModelAtomLimit);

FragmentReport classify(const CnfTheory& sigma,
                        int max_atoms = kDefaultModelAtomLimit);

}  // namespace forgetcnf
