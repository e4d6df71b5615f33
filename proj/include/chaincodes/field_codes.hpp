#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chaincodes/field_algebra.hpp"

namespace chaincodes {

using FpRow = std::vector<Coeff>;
using FpMatrix = std::vector<FpRow>;

/// In-place reduced row echelon form over F_p; zero rows are dropped. Returns pivot columns.
std::vector<std::size_t> rref(FpMatrix& m, Coeff p);
/// Basis of { v : m v^T = 0 }.
FpMatrix nullspace(const FpMatrix& m, std::size_t cols, Coeff p);
/// Reduced echelon basis over F_2 for packed rows; rows come back sorted by pivot bit, low bit first.
std::vector<std::uint64_t> rref_bits(std::vector<std::uint64_t> rows);

/// Left ideal of F_p G, stored as its canonical reduced echelon basis.
class GroupCodeF {
public:
    /// Left ideal generated by `generators` (closes under left multiplication by G).
    static GroupCodeF left_ideal(GroupPtr group, Coeff p, const std::vector<FAlgebraElement>& generators);
    /// Row space of `rows`; throws if it is not a left ideal.
    static GroupCodeF from_rows(GroupPtr group, Coeff p, FpMatrix rows);
    static GroupCodeF zero(GroupPtr group, Coeff p);
    static GroupCodeF full(GroupPtr group, Coeff p);

    const FiniteGroup& group() const noexcept { return *group_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }
    Coeff p() const noexcept { return p_; }
    std::size_t length() const noexcept { return group_->order(); }
    std::size_t dim() const noexcept { return basis_.size(); }
    const FpMatrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    FAlgebraElement row(std::size_t i) const { return FAlgebraElement(group_, p_, basis_[i]); }

    bool contains(const FAlgebraElement& v) const;
    bool contains(const GroupCodeF& sub) const;
    /// Packed basis (p = 2 only); canonical key for deduplication.
    std::vector<std::uint64_t> packed_basis() const;

    friend bool operator==(const GroupCodeF& a, const GroupCodeF& b) {
        return a.p_ == b.p_ && a.length() == b.length() && a.basis_ == b.basis_;
    }

private:
    GroupCodeF(GroupPtr group, Coeff p, FpMatrix basis);

    GroupPtr group_;
    Coeff p_;
    FpMatrix basis_;
    std::vector<std::size_t> pivots_;
};

GroupCodeF code_from_idempotent(const FAlgebraElement& e);

/// Dual under the coordinate dot product. With an idempotent generator the formula
/// F_p G (1 - e*) is evaluated as well and must match the nullspace.
GroupCodeF dual_code_f(const GroupCodeF& c, const std::optional<FAlgebraElement>& e = std::nullopt);

/// An idempotent right identity e of c (so c = F_p G e), or nullopt if c is not projective.
std::optional<FAlgebraElement> projectivity_witness(const GroupCodeF& c);

bool is_self_orthogonal_f(const GroupCodeF& c);

struct DistanceOptions {
    unsigned cutoff_log2 = 28;  // refuse if the cheaper strategy needs more than 2^cutoff steps
    unsigned workers = 1;
};

enum class DistanceStrategy { Auto, Generator, ParityCheck };

/// Exact minimum Hamming weight; nullopt for the zero code.
std::optional<std::size_t> min_hamming_distance_f(const GroupCodeF& c, const DistanceOptions& opts = {},
                                                  DistanceStrategy strategy = DistanceStrategy::Auto);

/// Minimum euclidean weight with representatives in (-p/2, p/2]; nullopt for the zero code.
std::optional<std::uint64_t> min_euclidean_weight_f(const GroupCodeF& c, const DistanceOptions& opts = {});

}  // namespace chaincodes
