#include "chaincodes/group.hpp"

#include <charconv>

#include "chaincodes/error.hpp"

namespace chaincodes {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::IncompatibleOperands: return "incompatible-operands";
    case ErrorKind::InvalidGenerator: return "invalid-generator";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::NotInLayer: return "not-in-layer";
    case ErrorKind::LiftingFailure: return "lifting-failure";
    case ErrorKind::InvalidChain: return "invalid-chain";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::UnsupportedRing: return "unsupported-ring";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse-error";
    }
    return "unknown";
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> mul, std::vector<Elem> inv, std::string label,
                         GroupFamily family, std::size_t param)
    : order_(order), mul_(std::move(mul)), inv_(std::move(inv)), label_(std::move(label)), family_(family),
      param_(param) {
    if (order_ == 0) throw Error(ErrorKind::InvalidParameter, "group order must be positive");
    if (mul_.size() != order_ * order_ || inv_.size() != order_)
        throw Error(ErrorKind::InvalidParameter, "group table has wrong shape");
    for (Elem v : mul_)
        if (v >= order_) throw Error(ErrorKind::InvalidParameter, "group table entry out of range");
    for (Elem v : inv_)
        if (v >= order_) throw Error(ErrorKind::InvalidParameter, "inverse table entry out of range");
}

std::string FiniteGroup::spec() const {
    switch (family_) {
    case GroupFamily::Cyclic: return "cyclic:" + std::to_string(param_);
    case GroupFamily::Dihedral: return "dihedral:" + std::to_string(2 * param_);
    case GroupFamily::Table: break;
    }
    return label_;
}

bool FiniteGroup::is_abelian() const noexcept {
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::size_t FiniteGroup::element_order(Elem g) const noexcept {
    std::size_t k = 1;
    for (Elem x = g; x != identity(); x = mul(x, g)) ++k;
    return k;
}

GroupPtr make_cyclic(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "cyclic group needs n >= 1");
    std::vector<Elem> mul(n * n), inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = static_cast<Elem>((i + j) % n);
        inv[i] = static_cast<Elem>((n - i) % n);
    }
    return std::make_shared<const FiniteGroup>(n, std::move(mul), std::move(inv), "C" + std::to_string(n),
                                               GroupFamily::Cyclic, n);
}

GroupPtr make_dihedral(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "dihedral group needs n >= 1");
    const std::size_t order = 2 * n;
    std::vector<Elem> mul(order * order), inv(order);
    // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b xor d)
    for (std::size_t x = 0; x < order; ++x) {
        const std::size_t a = x % n, b = x / n;
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t c = y % n, d = y / n;
            const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
            mul[x * order + y] = static_cast<Elem>(rot + n * (b ^ d));
        }
        inv[x] = static_cast<Elem>(b == 0 ? (n - a) % n : x);
    }
    return std::make_shared<const FiniteGroup>(order, std::move(mul), std::move(inv), "D" + std::to_string(order),
                                               GroupFamily::Dihedral, n);
}

GroupPtr parse_group_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "group spec must look like family:N: " + spec);
    const std::string family = spec.substr(0, colon);
    const std::string num = spec.substr(colon + 1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size() || value == 0)
        throw Error(ErrorKind::Parse, "bad group order in spec: " + spec);
    if (family == "cyclic") return make_cyclic(value);
    if (family == "dihedral") {
        if (value % 2 != 0) throw Error(ErrorKind::Parse, "dihedral order must be even: " + spec);
        return make_dihedral(value / 2);
    }
    throw Error(ErrorKind::Parse, "unknown group family: " + family);
}

std::optional<GroupViolation> validate_group(const FiniteGroup& g) {
    using K = GroupViolation::Kind;
    const std::size_t n = g.order();
    for (Elem a = 0; a < n; ++a)
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            return GroupViolation{K::Identity, 0, a, 0, "identity law fails at element " + std::to_string(a)};
    // a a = a forces a = 1 in a group; report a second idempotent as an identity violation.
    for (Elem a = 1; a < n; ++a)
        if (g.mul(a, a) == a)
            return GroupViolation{K::Identity, a, a, 0, "element " + std::to_string(a) + " behaves as a second identity"};
    for (Elem a = 0; a < n; ++a)
        if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0)
            return GroupViolation{K::Inverse, a, g.inv(a), 0, "inverse law fails at element " + std::to_string(a)};
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            const Elem ab = g.mul(a, b);
            for (Elem c = 0; c < n; ++c)
                if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                    return GroupViolation{K::Associativity, a, b, c,
                                          "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                              "," + std::to_string(c) + ")"};
        }
    return std::nullopt;
}

}  // namespace chaincodes
