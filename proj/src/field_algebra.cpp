#include "chaincodes/field_algebra.hpp"

#include <algorithm>
#include <memory>
#include <utility>

#include "chaincodes/error.hpp"

namespace chaincodes {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Coeff inverse_mod(Coeff a, Coeff p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        const std::int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw Error(ErrorKind::InvalidParameter, "element is not invertible");
    return static_cast<Coeff>(t < 0 ? t + p : t);
}

FAlgebraElement::FAlgebraElement(GroupPtr group, Coeff p)
    : group_(std::move(group)), p_(p), coeffs_(group_->order(), 0) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidParameter, "modulus must be prime");
}

FAlgebraElement::FAlgebraElement(GroupPtr group, Coeff p, std::vector<Coeff> coeffs)
    : group_(std::move(group)), p_(p), coeffs_(std::move(coeffs)) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidParameter, "modulus must be prime");
    if (coeffs_.size() != group_->order())
        throw Error(ErrorKind::InvalidParameter, "coefficient count must equal the group order");
    for (auto& c : coeffs_) c %= p_;
}

FAlgebraElement FAlgebraElement::one(GroupPtr group, Coeff p) { return basis(std::move(group), p, 0); }

FAlgebraElement FAlgebraElement::basis(GroupPtr group, Coeff p, Elem g) {
    FAlgebraElement e(std::move(group), p);
    e.coeffs_.at(g) = 1;
    return e;
}

FAlgebraElement FAlgebraElement::from_bits(GroupPtr group, std::uint64_t bits) {
    FAlgebraElement e(std::move(group), 2);
    for (std::size_t g = 0; g < e.coeffs_.size(); ++g) e.coeffs_[g] = (bits >> g) & 1;
    return e;
}

bool FAlgebraElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

std::size_t FAlgebraElement::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; }));
}

std::uint64_t FAlgebraElement::to_bits() const {
    if (p_ != 2 || coeffs_.size() > 64) throw Error(ErrorKind::Unsupported, "bit packing needs p = 2 and |G| <= 64");
    std::uint64_t bits = 0;
    for (std::size_t g = 0; g < coeffs_.size(); ++g)
        if (coeffs_[g]) bits |= std::uint64_t{1} << g;
    return bits;
}

void check_compatible(const FAlgebraElement& a, const FAlgebraElement& b) {
    if (a.p() != b.p() || !(a.group_ptr() == b.group_ptr() || a.group() == b.group()))
        throw Error(ErrorKind::IncompatibleOperands, "operands live in different group algebras");
}

FAlgebraElement FAlgebraElement::operator+(const FAlgebraElement& o) const {
    check_compatible(*this, o);
    FAlgebraElement r = *this;
    for (std::size_t g = 0; g < coeffs_.size(); ++g) r.coeffs_[g] = (coeffs_[g] + o.coeffs_[g]) % p_;
    return r;
}

FAlgebraElement FAlgebraElement::operator-(const FAlgebraElement& o) const {
    check_compatible(*this, o);
    FAlgebraElement r = *this;
    for (std::size_t g = 0; g < coeffs_.size(); ++g) r.coeffs_[g] = (coeffs_[g] + p_ - o.coeffs_[g]) % p_;
    return r;
}

FAlgebraElement FAlgebraElement::scaled(Coeff c) const {
    FAlgebraElement r = *this;
    for (auto& v : r.coeffs_) v = static_cast<Coeff>((std::uint64_t{v} * c) % p_);
    return r;
}

FAlgebraElement alg_mul_generic(const FAlgebraElement& a, const FAlgebraElement& b) {
    check_compatible(a, b);
    const FiniteGroup& G = a.group();
    const std::size_t n = G.order();
    const Coeff p = a.p();
    std::vector<std::uint64_t> acc(n, 0);
    for (Elem g = 0; g < n; ++g) {
        if (a[g] == 0) continue;
        for (Elem h = 0; h < n; ++h)
            if (b[h] != 0) acc[G.mul(g, h)] = (acc[G.mul(g, h)] + std::uint64_t{a[g]} * b[h]) % p;
    }
    std::vector<Coeff> out(acc.begin(), acc.end());
    return FAlgebraElement(a.group_ptr(), p, std::move(out));
}

FAlgebraElement alg_mul(const FAlgebraElement& a, const FAlgebraElement& b) {
    check_compatible(a, b);
    if (a.p() == 2 && a.size() <= 64) {
        thread_local GroupPtr cached_group;
        thread_local std::unique_ptr<PackedF2Algebra> cached;
        if (!cached || !(cached_group == a.group_ptr())) {
            cached = std::make_unique<PackedF2Algebra>(a.group());
            cached_group = a.group_ptr();
        }
        const PackedF2Algebra& alg = *cached;
        return FAlgebraElement::from_bits(a.group_ptr(), alg.mul(a.to_bits(), b.to_bits()));
    }
    return alg_mul_generic(a, b);
}

FAlgebraElement star(const FAlgebraElement& a) {
    std::vector<Coeff> out(a.size());
    for (Elem g = 0; g < a.size(); ++g) out[g] = a[a.group().inv(g)];
    return FAlgebraElement(a.group_ptr(), a.p(), std::move(out));
}

Coeff bilinear_form(const FAlgebraElement& a, const FAlgebraElement& b) {
    check_compatible(a, b);
    std::uint64_t s = 0;
    for (std::size_t g = 0; g < a.size(); ++g) s = (s + std::uint64_t{a[g]} * b[g]) % a.p();
    return static_cast<Coeff>(s);
}

bool is_idempotent(const FAlgebraElement& a) { return alg_mul(a, a) == a; }

PackedF2Algebra::PackedF2Algebra(const FiniteGroup& group)
    : order_(group.order()), bytes_((group.order() + 7) / 8), inv_(group.inverses()) {
    if (order_ > 64) throw Error(ErrorKind::Unsupported, "packed F2 algebra needs |G| <= 64");
    table_.assign(order_ * bytes_ * 256, 0);
    for (Elem g = 0; g < order_; ++g)
        for (std::size_t k = 0; k < bytes_; ++k)
            for (std::size_t byte = 0; byte < 256; ++byte) {
                std::uint64_t r = 0;
                for (std::size_t bit = 0; bit < 8; ++bit) {
                    const std::size_t h = k * 8 + bit;
                    if (h < order_ && ((byte >> bit) & 1)) r |= std::uint64_t{1} << group.mul(g, static_cast<Elem>(h));
                }
                table_[(g * bytes_ + k) * 256 + byte] = r;
            }
}

}  // namespace chaincodes
