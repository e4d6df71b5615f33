#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chaincodes/group.hpp"

namespace chaincodes {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;
Coeff inverse_mod(Coeff a, Coeff p);

/// Element of the group algebra F_p G; coeffs[g] is the coefficient of group element g.
class FAlgebraElement {
public:
    FAlgebraElement(GroupPtr group, Coeff p);
    FAlgebraElement(GroupPtr group, Coeff p, std::vector<Coeff> coeffs);

    static FAlgebraElement zero(GroupPtr group, Coeff p) { return FAlgebraElement(std::move(group), p); }
    static FAlgebraElement one(GroupPtr group, Coeff p);
    static FAlgebraElement basis(GroupPtr group, Coeff p, Elem g);
    /// Bit g of `bits` is the coefficient of g (p = 2, order <= 64).
    static FAlgebraElement from_bits(GroupPtr group, std::uint64_t bits);

    const FiniteGroup& group() const noexcept { return *group_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }
    Coeff p() const noexcept { return p_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    Coeff operator[](std::size_t g) const noexcept { return coeffs_[g]; }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    std::size_t weight() const noexcept;
    std::uint64_t to_bits() const;

    FAlgebraElement operator+(const FAlgebraElement& o) const;
    FAlgebraElement operator-(const FAlgebraElement& o) const;
    FAlgebraElement scaled(Coeff c) const;

    friend bool operator==(const FAlgebraElement& a, const FAlgebraElement& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator<(const FAlgebraElement& a, const FAlgebraElement& b) { return a.coeffs_ < b.coeffs_; }

private:
    GroupPtr group_;
    Coeff p_;
    std::vector<Coeff> coeffs_;
};

void check_compatible(const FAlgebraElement& a, const FAlgebraElement& b);

FAlgebraElement alg_mul(const FAlgebraElement& a, const FAlgebraElement& b);
/// Per-coordinate convolution, used for odd p and as the reference for the packed path.
FAlgebraElement alg_mul_generic(const FAlgebraElement& a, const FAlgebraElement& b);
FAlgebraElement star(const FAlgebraElement& a);
Coeff bilinear_form(const FAlgebraElement& a, const FAlgebraElement& b);
bool is_idempotent(const FAlgebraElement& a);

/// Multiplication in F_2 G for |G| <= 64 with elements packed into one machine word.
/// Left multiplication by g permutes bits; it is tabulated per input byte, so
/// g*b costs ceil(|G|/8) lookups.
class PackedF2Algebra {
public:
    explicit PackedF2Algebra(const FiniteGroup& group);

    std::size_t order() const noexcept { return order_; }
    std::uint64_t left_mul(Elem g, std::uint64_t b) const noexcept {
        std::uint64_t r = 0;
        const std::uint64_t* t = &table_[g * bytes_ * 256];
        for (std::size_t k = 0; k < bytes_; ++k, b >>= 8) r |= t[k * 256 + (b & 0xff)];
        return r;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t r = 0;
        while (a) {
            const Elem g = static_cast<Elem>(__builtin_ctzll(a));
            a &= a - 1;
            r ^= left_mul(g, b);
        }
        return r;
    }
    bool is_idempotent(std::uint64_t a) const noexcept { return mul(a, a) == a; }
    std::uint64_t star(std::uint64_t a) const noexcept {
        std::uint64_t r = 0;
        while (a) {
            const Elem g = static_cast<Elem>(__builtin_ctzll(a));
            a &= a - 1;
            r |= std::uint64_t{1} << inv_[g];
        }
        return r;
    }
    std::uint64_t full_mask() const noexcept { return order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1; }

private:
    std::size_t order_;
    std::size_t bytes_;
    std::vector<Elem> inv_;
    std::vector<std::uint64_t> table_;
};

}  // namespace chaincodes
