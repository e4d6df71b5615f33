#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace chaincodes {

/// Dense polynomial over F_p, coefficient i belongs to x^i, no trailing zeros.
class FpPoly {
public:
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs = {});
    static FpPoly monomial(std::uint32_t p, std::size_t degree, std::uint32_t c = 1);

    std::uint32_t p() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::uint32_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly monic() const;
    std::string to_string(char var = 'x') const;

    friend bool operator==(const FpPoly&, const FpPoly&) = default;
    friend bool operator<(const FpPoly& a, const FpPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

private:
    void trim();
    std::uint32_t p_;
    std::vector<std::uint32_t> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& mod);
/// Inverse of a modulo m (requires gcd(a, m) = 1).
FpPoly invmod(const FpPoly& a, const FpPoly& m);

/// Rabin's test.
bool is_irreducible(const FpPoly& f);

/// Monic irreducible factors of x^n - 1 over F_p, listed with multiplicity, sorted.
std::vector<FpPoly> factor_xn_minus_1(std::size_t n, std::uint32_t p);

}  // namespace chaincodes
