#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaincodes/field_codes.hpp"
#include "chaincodes/ring_algebra.hpp"

namespace chaincodes {

struct ScanOptions {
    unsigned budget_log2 = 30;   // refuse scans over more than 2^budget candidates
    unsigned workers = 1;
    std::string checkpoint_path; // empty: no checkpointing
};

/// All idempotents of F_p G by scanning every coefficient vector, sorted.
std::vector<FAlgebraElement> enumerate_idempotents_exhaustive(const GroupPtr& group, Coeff p,
                                                              const ScanOptions& opts = {});

/// Packed F_2 scan: bit masks of all idempotents in increasing order.
/// `scanned` receives the number of candidates examined in this call (excluding resumed work).
std::vector<std::uint64_t> scan_idempotents_f2(const GroupPtr& group, const ScanOptions& opts,
                                               std::uint64_t* scanned = nullptr);

/// Idempotents of F_p C_n through F_p[x]/(x^n - 1) = prod F_p[x]/(f_i); needs gcd(n, p) = 1.
std::vector<FAlgebraElement> enumerate_idempotents_cyclic(std::size_t n, Coeff p);

/// Distinct projective codes F_p G e with a generating idempotent each, ordered by canonical basis.
struct ProjectiveCode {
    GroupCodeF code;
    FAlgebraElement idempotent;
};
std::vector<ProjectiveCode> projective_code_inventory(const GroupPtr& group, Coeff p, const ScanOptions& opts = {});

/// Every nested chain of length ell drawn from `codes` (indices into the inventory).
std::vector<std::vector<std::size_t>> enumerate_chains(const std::vector<ProjectiveCode>& codes, unsigned ell);

struct SearchWitness {
    FAlgebraElement idempotent;
    CodeChain chain;
    RAlgebraElement generator;  // code = RG * generator
    RCode code;
    std::size_t distance;
    bool self_dual = false;     // code = code^perp
};

struct SearchCode {
    std::vector<std::uint64_t> key;  // packed canonical basis of C_0
    FAlgebraElement idempotent;
    std::size_t dim;
    std::size_t distance;            // d_H(C_0^perp): every relative projective code on this chain
    bool self_dual = false;          // some lift eps of a generator has eps eps* = 0
};

struct SearchReport {
    std::string group_spec;
    std::string ring_spec;
    std::string strategy;
    std::uint64_t candidates_scanned = 0;
    std::size_t idempotent_count = 0;
    std::size_t self_orthogonal_idempotents = 0;
    std::vector<SearchCode> codes;
    std::size_t best_distance = 0;            // over all chains C_0 <= C_0^perp
    std::size_t best_self_dual_distance = 0;  // over chains carrying a self-dual code
    std::vector<SearchWitness> optimal;
    std::size_t optimal_count = 0;
    double wall_seconds = 0;
};

struct SearchOptions {
    ScanOptions scan;
    DistanceOptions distance;
    std::size_t max_witnesses = 4;
};

/// Best minimum Hamming distance of relative projective codes over Z/4 in RD_{2n} whose
/// chain has the self-dual shape C_0 <= C_0^perp (C_0 = F_2 G e self-orthogonal). Each chain
/// is also tested for an actual self-dual code: one exists iff some generator e of C_0 has
/// a lift eps with eps eps* = 0, and then RG (eps + 2 (1 - eps*)) is one.
SearchReport search_selfdual_dihedral_z4(std::size_t two_n, const SearchOptions& opts = {});

/// Re-verifies a witness from scratch: chain shape, generator, self-duality flag,
/// relative projectivity, theorem distance.
bool recheck_witness(const SearchWitness& w);

}  // namespace chaincodes
