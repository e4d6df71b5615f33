#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chaincodes {

enum class RingFlavor { IntegerResidue, Polynomial };

/// Z/p^ell Z (uniformizer p) or F_p[u]/(u^ell) (uniformizer u). Residue field is F_p.
struct ChainRingSpec {
    std::uint32_t p = 2;
    unsigned ell = 1;
    RingFlavor flavor = RingFlavor::IntegerResidue;

    std::string to_string() const;  // "Z:2^2" / "poly:2^2"
    friend bool operator==(const ChainRingSpec&, const ChainRingSpec&) = default;
};

ChainRingSpec parse_ring_spec(const std::string& spec);

/// Scalars are canonical codes in [0, p^ell): the residue itself for Z/p^ell,
/// base-p digits (digit i = coefficient of u^i) for the polynomial flavor.
using Scalar = std::uint64_t;

class ChainRing {
public:
    explicit ChainRing(ChainRingSpec spec);

    const ChainRingSpec& spec() const noexcept { return spec_; }
    std::uint32_t p() const noexcept { return spec_.p; }
    unsigned ell() const noexcept { return spec_.ell; }
    std::uint64_t size() const noexcept { return q_; }
    bool is_integer() const noexcept { return spec_.flavor == RingFlavor::IntegerResidue; }

    Scalar zero() const noexcept { return 0; }
    Scalar one() const noexcept { return 1; }
    Scalar from_int(std::int64_t v) const noexcept;

    Scalar add(Scalar a, Scalar b) const noexcept {
        return small_ ? add_[a * q_ + b] : add_slow(a, b);
    }
    Scalar mul(Scalar a, Scalar b) const noexcept {
        return small_ ? mul_[a * q_ + b] : mul_slow(a, b);
    }
    Scalar neg(Scalar a) const noexcept { return small_ ? neg_[a] : neg_slow(a); }
    Scalar sub(Scalar a, Scalar b) const noexcept { return add(a, neg(b)); }

    /// Largest j with x in m^j; valuation(0) = ell.
    unsigned valuation(Scalar x) const noexcept { return small_ ? val_[x] : valuation_slow(x); }
    bool is_unit(Scalar x) const noexcept { return valuation(x) == 0; }
    Scalar unit_inverse(Scalar u) const;

    /// pi^j (zero when j >= ell).
    Scalar pi_pow(unsigned j) const noexcept;
    /// Canonical y with pi^j * y = x, digits/values below p^(ell-j); requires valuation(x) >= j.
    Scalar divide_by_pi_pow(Scalar x, unsigned j) const;
    /// Canonical remainder of x modulo m^j: the representative in [0, p^j).
    Scalar reduce_mod_pi_pow(Scalar x, unsigned j) const noexcept;

    /// Layer map m^j / m^(j+1) -> F_p; throws not-in-layer if valuation(x) < j.
    std::uint32_t alpha(Scalar x, unsigned j) const;
    /// Section of alpha: pi^j times the canonical lift of f in {0, ..., p-1}.
    Scalar alpha_up(std::uint32_t f, unsigned j) const noexcept;

    /// Smallest squared integer representative (integer flavor only).
    std::uint64_t euclidean_weight(Scalar x) const;

    std::string to_text(Scalar x) const;

private:
    Scalar add_slow(Scalar a, Scalar b) const noexcept;
    Scalar mul_slow(Scalar a, Scalar b) const noexcept;
    Scalar neg_slow(Scalar a) const noexcept;
    unsigned valuation_slow(Scalar x) const noexcept;

    ChainRingSpec spec_;
    std::uint64_t q_;
    std::vector<std::uint64_t> pow_;  // p^0 .. p^ell
    bool small_ = false;
    std::vector<Scalar> add_, mul_, neg_;
    std::vector<unsigned> val_;
};

}  // namespace chaincodes
