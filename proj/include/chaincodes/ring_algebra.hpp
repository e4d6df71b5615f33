#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chaincodes/chain_ring.hpp"
#include "chaincodes/field_codes.hpp"
#include "chaincodes/ring_matrix.hpp"

namespace chaincodes {

using RingPtr = std::shared_ptr<const ChainRing>;

RingPtr make_ring(const ChainRingSpec& spec);

/// Element of the group ring RG.
class RAlgebraElement {
public:
    RAlgebraElement(GroupPtr group, RingPtr ring);
    RAlgebraElement(GroupPtr group, RingPtr ring, std::vector<Scalar> coeffs);

    static RAlgebraElement one(GroupPtr group, RingPtr ring);
    /// Coefficientwise canonical lift of an F_p G element (alpha_0 section).
    static RAlgebraElement lift(const FAlgebraElement& e, RingPtr ring);

    const FiniteGroup& group() const noexcept { return *group_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }
    const ChainRing& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    Scalar operator[](std::size_t g) const noexcept { return coeffs_[g]; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

    RAlgebraElement operator+(const RAlgebraElement& o) const;
    RAlgebraElement operator-(const RAlgebraElement& o) const;
    RAlgebraElement operator*(const RAlgebraElement& o) const;
    RAlgebraElement scaled(Scalar c) const;

    /// alpha_0: reduction modulo the maximal ideal.
    FAlgebraElement reduce() const;
    bool is_idempotent() const { return *this * *this == *this; }

    friend bool operator==(const RAlgebraElement& a, const RAlgebraElement& b) { return a.coeffs_ == b.coeffs_; }

private:
    GroupPtr group_;
    RingPtr ring_;
    std::vector<Scalar> coeffs_;
};

/// Left ideal of RG held in canonical standard form: each row is pi^a times a row
/// with unit pivot, rows sorted by (a, pivot column).
class RCode {
public:
    static RCode left_ideal(GroupPtr group, RingPtr ring, const std::vector<RAlgebraElement>& generators);
    /// Submodule spanned by `rows`; throws invalid-parameter if it is not a left ideal.
    static RCode from_rows(GroupPtr group, RingPtr ring, RMatrix rows);
    static RCode zero(GroupPtr group, RingPtr ring);

    const FiniteGroup& group() const noexcept { return *group_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }
    const ChainRing& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    std::size_t length() const noexcept { return group_->order(); }

    const RMatrix& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivot_cols() const noexcept { return pivot_cols_; }
    const std::vector<unsigned>& pivot_vals() const noexcept { return pivot_vals_; }

    /// |C| = p^log_size().
    std::size_t log_size() const noexcept;
    bool contains(const RAlgebraElement& v) const;
    bool is_zero() const noexcept { return rows_.empty(); }

    /// Visits every element once (zero included); throws budget-exceeded above 2^budget_log2 elements.
    void for_each_element(const std::function<void(const std::vector<Scalar>&)>& visit,
                          unsigned budget_log2 = 24) const;

    friend bool operator==(const RCode& a, const RCode& b) {
        return a.ring_->spec() == b.ring_->spec() && a.length() == b.length() && a.rows_ == b.rows_;
    }

private:
    RCode(GroupPtr group, RingPtr ring, HowellForm form);

    GroupPtr group_;
    RingPtr ring_;
    RMatrix rows_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<unsigned> pivot_vals_;
};

/// Nested chain C_0 <= ... <= C_{ell-1} of codes over the residue field, with
/// right-identity idempotents where they exist.
struct CodeChain {
    ChainRingSpec spec;
    std::vector<GroupCodeF> codes;
    std::vector<std::optional<FAlgebraElement>> idems;

    bool all_projective() const;
    bool same_codes(const CodeChain& o) const;
};

/// Checks nesting and that every idempotent is a right identity generating its code.
void validate_chain(const CodeChain& chain);
/// Chain from codes alone; idempotents filled in by projectivity_witness.
CodeChain make_chain(const ChainRingSpec& spec, std::vector<GroupCodeF> codes);

struct LiftResult {
    RAlgebraElement value;
    unsigned iterations;
};

/// Lifts an idempotent of F_p G to RG with eps <- 3 eps^2 - 2 eps^3.
LiftResult lift_idempotent(const FAlgebraElement& e, const RingPtr& ring);

/// Nested commuting idempotents eps_0, ..., eps_{ell-1} of RG (eps_i eps_j = eps_j eps_i = eps_i
/// for i < j), eps_j reducing to an idempotent generator of C_j. Determined by the chain.
std::vector<RAlgebraElement> compatible_lifts(const CodeChain& chain, const RingPtr& ring);

/// RG * sum_j pi^j eps_j with the compatible lifts.
RCode build_code_from_chain(const CodeChain& chain, const RingPtr& ring);

/// a* = sum a_g g^-1.
RAlgebraElement star_r(const RAlgebraElement& a);

/// For ell = 2 and an idempotent e with e e* = 0: an idempotent lift eps with eps eps* = 0,
/// found among the conjugates (1 + pi t) eps0 (1 - pi t) of the canonical lift. Then
/// RG (eps + pi (1 - eps*)) is self-dual. nullopt when no conjugate works.
std::optional<RAlgebraElement> self_orthogonal_lift(const FAlgebraElement& e, const RingPtr& ring);
/// RG * sum_j pi^j lifts[j]; each lift must be an idempotent whose reduction generates C_j.
RCode build_code_from_lifts(const CodeChain& chain, const std::vector<RAlgebraElement>& lifts);

/// Higman's criterion for relative projectivity with respect to the trivial subgroup:
/// an R-linear beta on RG with beta(C) <= C and sum_g g beta g^-1 = id on C.
/// beta[a][b] is the coefficient of a in beta(b).
std::optional<RMatrix> higman_certificate(const RCode& c);
bool check_higman_certificate(const RCode& c, const RMatrix& beta);
CodeChain chain_extract(const RCode& c);

enum class YesBasis { Rebuilt, Higman };

struct VerdictYes {
    CodeChain chain;
    YesBasis basis = YesBasis::Rebuilt;
};
struct VerdictNo {
    std::optional<unsigned> layer;  // layer without projectivity witness
    std::string reason;
};
struct VerdictIndeterminate {
    CodeChain chain;
    RCode original;
    RCode rebuilt;
};
using RelativeProjectiveVerdict = std::variant<VerdictYes, VerdictNo, VerdictIndeterminate>;

/// When the ideal rebuilt from the extracted chain differs from `c` (lifts in a
/// noncommutative RG are not unique), Higman's criterion settles the question as
/// long as the group order is at most `higman_max_order`; past that the verdict is
/// Indeterminate.
RelativeProjectiveVerdict decide_relative_projective(const RCode& c, std::size_t higman_max_order = 32);

RCode dual_code_r(const RCode& c);

enum class HammingMode { Theorem, Exhaustive };

/// Minimum Hamming weight; nullopt for the zero ideal.
std::optional<std::size_t> min_hamming_r(const RCode& c, HammingMode mode, unsigned budget_log2 = 24,
                                         const DistanceOptions& field_opts = {});

/// Exact minimum Hamming weight by scanning coordinate supports of increasing size:
/// the smallest w such that some w coordinates carry a nonzero ideal element.
std::optional<std::size_t> min_hamming_support_scan(const RCode& c);

struct EuclideanReport {
    std::optional<std::uint64_t> exhaustive;  // nullopt for the zero ideal
    std::optional<std::uint64_t> gamma_bound; // nullopt when every layer is zero
};

/// Minimum euclidean weight (integer flavor only) and the layer bound min_j p^(2j) d_E(C_j).
EuclideanReport euclidean_weights(const RCode& c, unsigned budget_log2 = 24);

/// Exact minimum euclidean weight by enumerating short integer vectors and testing membership.
std::optional<std::uint64_t> min_euclidean_short_vectors(const RCode& c);

}  // namespace chaincodes
