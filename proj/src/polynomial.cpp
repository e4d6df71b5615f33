#include "chaincodes/polynomial.hpp"

#include <algorithm>
#include <random>

#include "chaincodes/error.hpp"
#include "chaincodes/field_algebra.hpp"

namespace chaincodes {

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    trim();
}

FpPoly FpPoly::monomial(std::uint32_t p, std::size_t degree, std::uint32_t c) {
    std::vector<std::uint32_t> v(degree + 1, 0);
    v[degree] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((*this)[i] + o[i]) % p_;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((*this)[i] + p_ - o[i]) % p_;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i])
            for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{c_[i]} * o.c_[j]) % p_;
    return FpPoly(p_, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    const std::uint32_t inv = inverse_mod(lead(), p_);
    std::vector<std::uint32_t> r(c_);
    for (auto& v : r) v = static_cast<std::uint32_t>((std::uint64_t{v} * inv) % p_);
    return FpPoly(p_, std::move(r));
}

std::string FpPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const auto c = c_[static_cast<std::size_t>(i)];
        if (!c) continue;
        if (!out.empty()) out += "+";
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i > 0) out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidParameter, "polynomial division by zero");
    const std::uint32_t p = a.p();
    std::vector<std::uint32_t> r = a.coeffs();
    if (a.degree() < b.degree()) return {FpPoly(p), a};
    std::vector<std::uint32_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const std::uint32_t inv = inverse_mod(b.lead(), p);
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t i = r.size(); i-- > db;) {
        if (!r[i]) continue;
        const auto f = static_cast<std::uint32_t>((std::uint64_t{r[i]} * inv) % p);
        q[i - db] = f;
        for (std::size_t k = 0; k <= db; ++k)
            r[i - db + k] = static_cast<std::uint32_t>((r[i - db + k] + std::uint64_t{p - f} * b[k]) % p);
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& mod) {
    FpPoly result(base.p(), {1});
    result = divmod(result, mod).second;
    FpPoly b = divmod(base, mod).second;
    while (e) {
        if (e & 1) result = divmod(result * b, mod).second;
        b = divmod(b * b, mod).second;
        e >>= 1;
    }
    return result;
}

FpPoly invmod(const FpPoly& a, const FpPoly& m) {
    const std::uint32_t p = a.p();
    FpPoly r0 = m, r1 = divmod(a, m).second, s0(p), s1(p, {1});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        FpPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw Error(ErrorKind::InvalidParameter, "polynomial is not invertible modulo m");
    const std::uint32_t inv = inverse_mod(r0.lead(), p);
    return divmod(s0 * FpPoly(p, {inv}), m).second;
}

namespace {

std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// x^(p^k) mod f by repeated p-th powering.
FpPoly frobenius_power(const FpPoly& f, std::size_t k) {
    FpPoly x = divmod(FpPoly::monomial(f.p(), 1), f).second;
    for (std::size_t i = 0; i < k; ++i) x = powmod(x, f.p(), f);
    return x;
}

FpPoly x_poly(std::uint32_t p) { return FpPoly::monomial(p, 1); }

/// Distinct-degree factorization of a squarefree monic f: pairs (degree, product of factors of that degree).
std::vector<std::pair<std::size_t, FpPoly>> distinct_degree(FpPoly f) {
    const std::uint32_t p = f.p();
    std::vector<std::pair<std::size_t, FpPoly>> out;
    FpPoly h = divmod(x_poly(p), f).second;
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(f.degree()); ++d) {
        h = powmod(h, p, f);
        FpPoly g = gcd(f, h - x_poly(p));
        if (g.degree() > 0) {
            out.emplace_back(d, g);
            f = divmod(f, g).first;
            h = divmod(h, f).second;
        }
    }
    if (f.degree() > 0) out.emplace_back(static_cast<std::size_t>(f.degree()), f.monic());
    return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2).
void equal_degree(const FpPoly& f, std::size_t d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (static_cast<std::size_t>(f.degree()) == d) {
        out.push_back(f.monic());
        return;
    }
    const std::uint32_t p = f.p();
    std::uniform_int_distribution<std::uint32_t> coin(0, p - 1);
    while (true) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(f.degree()));
        for (auto& v : c) v = coin(rng);
        const FpPoly a(p, std::move(c));
        if (a.degree() < 1) continue;
        FpPoly b(p);
        if (p == 2) {
            FpPoly t = a, acc = a;
            for (std::size_t i = 1; i < d; ++i) {
                t = divmod(t * t, f).second;
                acc = acc + t;
            }
            b = acc;
        } else {
            std::uint64_t e = 1;
            for (std::size_t i = 0; i < d; ++i) e *= p;
            b = powmod(a, (e - 1) / 2, f) - FpPoly(p, {1});
        }
        const FpPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(divmod(f, g).first.monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) return false;
    const auto n = static_cast<std::size_t>(f.degree());
    const FpPoly g = f.monic();
    for (auto q : prime_divisors(n)) {
        const FpPoly h = frobenius_power(g, n / q) - divmod(x_poly(f.p()), g).second;
        if (gcd(g, h).degree() != 0) return false;
    }
    return (frobenius_power(g, n) - divmod(x_poly(f.p()), g).second).is_zero();
}

std::vector<FpPoly> factor_xn_minus_1(std::size_t n, std::uint32_t p) {
    if (n == 0 || !is_prime(p)) throw Error(ErrorKind::InvalidParameter, "factor_xn_minus_1 needs n >= 1 and prime p");
    // x^(m p^k) - 1 = (x^m - 1)^(p^k)
    std::size_t m = n, mult = 1;
    while (m % p == 0) m /= p, mult *= p;
    FpPoly f = FpPoly::monomial(p, m) - FpPoly(p, {1});
    std::mt19937_64 rng(0x5eed + n * 131 + p);
    std::vector<FpPoly> factors;
    for (auto& [d, g] : distinct_degree(f)) equal_degree(g, d, rng, factors);
    std::vector<FpPoly> out;
    for (const auto& g : factors)
        for (std::size_t i = 0; i < mult; ++i) out.push_back(g);
    std::sort(out.begin(), out.end());

    FpPoly product(p, {1});
    for (const auto& g : out) product = product * g;
    if (!(product == FpPoly::monomial(p, n) - FpPoly(p, {1})))
        throw Error(ErrorKind::InternalConsistency, "factors do not multiply back to x^n - 1");
    for (const auto& g : out)
        if (!is_irreducible(g)) throw Error(ErrorKind::InternalConsistency, "factor is not irreducible");
    return out;
}

}  // namespace chaincodes
