#include "chaincodes/chain_ring.hpp"

#include <charconv>

#include "chaincodes/error.hpp"
#include "chaincodes/field_algebra.hpp"

namespace chaincodes {

std::string ChainRingSpec::to_string() const {
    return std::string(flavor == RingFlavor::IntegerResidue ? "Z:" : "poly:") + std::to_string(p) + "^" +
           std::to_string(ell);
}

ChainRingSpec parse_ring_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const auto caret = spec.find('^');
    if (colon == std::string::npos || caret == std::string::npos || caret < colon)
        throw Error(ErrorKind::Parse, "ring spec must look like Z:p^ell or poly:p^ell: " + spec);
    ChainRingSpec out;
    const std::string family = spec.substr(0, colon);
    if (family == "Z")
        out.flavor = RingFlavor::IntegerResidue;
    else if (family == "poly")
        out.flavor = RingFlavor::Polynomial;
    else
        throw Error(ErrorKind::Parse, "unknown ring family: " + family);
    auto parse = [&](std::size_t from, std::size_t to, auto& value) {
        auto [ptr, ec] = std::from_chars(spec.data() + from, spec.data() + to, value);
        if (ec != std::errc{} || ptr != spec.data() + to) throw Error(ErrorKind::Parse, "bad number in ring spec: " + spec);
    };
    parse(colon + 1, caret, out.p);
    parse(caret + 1, spec.size(), out.ell);
    if (!is_prime(out.p) || out.ell == 0) throw Error(ErrorKind::Parse, "ring spec needs prime p and ell >= 1: " + spec);
    return out;
}

ChainRing::ChainRing(ChainRingSpec spec) : spec_(spec) {
    if (!is_prime(spec.p) || spec.ell == 0) throw Error(ErrorKind::InvalidParameter, "chain ring needs prime p, ell >= 1");
    pow_.push_back(1);
    for (unsigned i = 0; i < spec.ell; ++i) {
        if (pow_.back() > (std::uint64_t{1} << 40) / spec.p)
            throw Error(ErrorKind::InvalidParameter, "chain ring too large");
        pow_.push_back(pow_.back() * spec.p);
    }
    q_ = pow_.back();
    if (q_ <= 256) {
        small_ = true;
        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        neg_.resize(q_);
        val_.resize(q_);
        for (Scalar a = 0; a < q_; ++a) {
            neg_[a] = neg_slow(a);
            val_[a] = valuation_slow(a);
            for (Scalar b = 0; b < q_; ++b) {
                add_[a * q_ + b] = add_slow(a, b);
                mul_[a * q_ + b] = mul_slow(a, b);
            }
        }
    }
}

Scalar ChainRing::from_int(std::int64_t v) const noexcept {
    if (is_integer()) {
        const auto q = static_cast<std::int64_t>(q_);
        return static_cast<Scalar>(((v % q) + q) % q);
    }
    const auto p = static_cast<std::int64_t>(spec_.p);
    return static_cast<Scalar>(((v % p) + p) % p);
}

Scalar ChainRing::add_slow(Scalar a, Scalar b) const noexcept {
    if (is_integer()) return (a + b) % q_;
    Scalar r = 0;
    for (unsigned i = 0; i < spec_.ell; ++i) {
        const std::uint64_t d = ((a / pow_[i]) % spec_.p + (b / pow_[i]) % spec_.p) % spec_.p;
        r += d * pow_[i];
    }
    return r;
}

Scalar ChainRing::neg_slow(Scalar a) const noexcept {
    if (is_integer()) return (q_ - a) % q_;
    Scalar r = 0;
    for (unsigned i = 0; i < spec_.ell; ++i) r += ((spec_.p - (a / pow_[i]) % spec_.p) % spec_.p) * pow_[i];
    return r;
}

Scalar ChainRing::mul_slow(Scalar a, Scalar b) const noexcept {
    if (is_integer()) return static_cast<Scalar>((static_cast<unsigned __int128>(a) * b) % q_);
    std::vector<std::uint64_t> d(spec_.ell, 0);
    for (unsigned i = 0; i < spec_.ell; ++i) {
        const std::uint64_t ai = (a / pow_[i]) % spec_.p;
        if (!ai) continue;
        for (unsigned j = 0; i + j < spec_.ell; ++j) d[i + j] = (d[i + j] + ai * ((b / pow_[j]) % spec_.p)) % spec_.p;
    }
    Scalar r = 0;
    for (unsigned i = 0; i < spec_.ell; ++i) r += d[i] * pow_[i];
    return r;
}

unsigned ChainRing::valuation_slow(Scalar x) const noexcept {
    if (x == 0) return spec_.ell;
    unsigned v = 0;
    if (is_integer()) {
        while (x % spec_.p == 0) x /= spec_.p, ++v;
    } else {
        while ((x / pow_[v]) % spec_.p == 0) ++v;
    }
    return v;
}

Scalar ChainRing::unit_inverse(Scalar u) const {
    if (!is_unit(u)) throw Error(ErrorKind::InvalidParameter, "element is not a unit");
    // Newton iteration y <- y (2 - u y) doubles the precision each step.
    Scalar y = alpha_up(inverse_mod(static_cast<Coeff>(alpha(u, 0)), spec_.p), 0);
    for (unsigned prec = 1; prec < spec_.ell; prec *= 2) y = mul(y, sub(from_int(2), mul(u, y)));
    return y;
}

Scalar ChainRing::pi_pow(unsigned j) const noexcept {
    if (j >= spec_.ell) return 0;
    return pow_[j];
}

Scalar ChainRing::divide_by_pi_pow(Scalar x, unsigned j) const {
    if (valuation(x) < j) throw Error(ErrorKind::NotInLayer, "element is not divisible by pi^j");
    if (j >= spec_.ell) return 0;
    return x / pow_[j];
}

Scalar ChainRing::reduce_mod_pi_pow(Scalar x, unsigned j) const noexcept {
    if (j >= spec_.ell) return x;
    return x % pow_[j];
}

std::uint32_t ChainRing::alpha(Scalar x, unsigned j) const {
    if (j >= spec_.ell) throw Error(ErrorKind::InvalidParameter, "layer index must be below ell");
    if (valuation(x) < j) throw Error(ErrorKind::NotInLayer, "element does not lie in m^j");
    return static_cast<std::uint32_t>((x / pow_[j]) % spec_.p);
}

Scalar ChainRing::alpha_up(std::uint32_t f, unsigned j) const noexcept {
    if (j >= spec_.ell) return 0;
    return static_cast<Scalar>(f % spec_.p) * pow_[j];
}

std::uint64_t ChainRing::euclidean_weight(Scalar x) const {
    if (!is_integer()) throw Error(ErrorKind::UnsupportedRing, "euclidean weight needs Z/p^ell Z");
    const std::uint64_t m = std::min<std::uint64_t>(x, q_ - x);
    return m * m;
}

std::string ChainRing::to_text(Scalar x) const {
    if (is_integer()) return std::to_string(x);
    std::string out;
    for (unsigned i = 0; i < spec_.ell; ++i) {
        const std::uint64_t d = (x / pow_[i]) % spec_.p;
        if (!d) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += std::to_string(d);
        else {
            if (d != 1) out += std::to_string(d);
            out += i == 1 ? "u" : "u^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace chaincodes
