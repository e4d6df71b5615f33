#pragma once

#include <string>
#include <vector>

#include "chaincodes/idempotent_search.hpp"

namespace chaincodes {

/// Every nested chain of projective codes over F_p G for one ring, with the code it builds.
struct ChainUniverse {
    GroupPtr group;
    RingPtr ring;
    std::vector<ProjectiveCode> inventory;
    std::vector<CodeChain> chains;
    std::vector<RCode> codes;  // codes[i] = build_code_from_chain(chains[i])
};

ChainUniverse build_chain_universe(const GroupPtr& group, const RingPtr& ring, const ScanOptions& opts = {});

struct SuiteResult {
    std::string suite;
    bool passed = true;
    std::size_t checked = 0;
    std::size_t indeterminate = 0;
    std::vector<std::string> notes;  // failures and diagnostics

    void fail(std::string note) {
        passed = false;
        notes.push_back(std::move(note));
    }
};

/// chain -> code -> chain is the identity, distinct chains give distinct codes, every code decides Yes.
SuiteResult verify_roundtrip(const ChainUniverse& u);
/// Dual involution, dual-chain reversal, and the idempotent dual formula on every idempotent.
SuiteResult verify_duality(const ChainUniverse& u);
/// Theorem-mode Hamming distance against exact enumeration (elements, or coordinate supports above the budget).
SuiteResult verify_distance(const ChainUniverse& u, unsigned element_budget_log2 = 16);
/// d_E >= gamma on every code (integer flavor only).
SuiteResult verify_euclidean(const ChainUniverse& u, unsigned element_budget_log2 = 16);
/// Self-dual codes occur iff ell is even.
SuiteResult verify_parity(const ChainUniverse& u);
/// Lifted idempotents square to themselves and reduce correctly; uniqueness by scan on small abelian groups.
SuiteResult verify_lifting(const GroupPtr& group, const RingPtr& ring);

/// Number of self-dual codes found by verify_parity's scan.
std::size_t count_self_dual(const ChainUniverse& u);

}  // namespace chaincodes
