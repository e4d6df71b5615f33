#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace chaincodes {

using Elem = std::uint32_t;

enum class GroupFamily { Cyclic, Dihedral, Table };

/// A finite group given by its full multiplication table. Element 0 is the identity.
///
/// Index conventions are fixed so serialized codes stay portable:
///   cyclic:n    element i is x^i
///   dihedral:2n element i + n*j is r^i s^j  (0 <= i < n, j in {0,1})
class FiniteGroup {
public:
    FiniteGroup(std::size_t order, std::vector<Elem> mul, std::vector<Elem> inv, std::string label,
                GroupFamily family = GroupFamily::Table, std::size_t param = 0);

    std::size_t order() const noexcept { return order_; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * order_ + b]; }
    Elem inv(Elem a) const noexcept { return inv_[a]; }
    static constexpr Elem identity() noexcept { return 0; }
    const std::string& label() const noexcept { return label_; }

    GroupFamily family() const noexcept { return family_; }
    /// n for cyclic:n and for dihedral (order 2n).
    std::size_t family_param() const noexcept { return param_; }

    /// Spec string accepted by parse_group_spec ("cyclic:n", "dihedral:2n").
    std::string spec() const;

    bool is_abelian() const noexcept;
    std::size_t element_order(Elem g) const noexcept;

    const std::vector<Elem>& table() const noexcept { return mul_; }
    const std::vector<Elem>& inverses() const noexcept { return inv_; }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.order_ == b.order_ && a.mul_ == b.mul_;
    }

private:
    std::size_t order_;
    std::vector<Elem> mul_;
    std::vector<Elem> inv_;
    std::string label_;
    GroupFamily family_;
    std::size_t param_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_cyclic(std::size_t n);
GroupPtr make_dihedral(std::size_t n);

/// Parses "cyclic:n" or "dihedral:N" (N = 2n is the group order).
GroupPtr parse_group_spec(const std::string& spec);

struct GroupViolation {
    enum class Kind { TableShape, Identity, Inverse, Associativity } kind;
    Elem a = 0, b = 0, c = 0;
    std::string message;
};

/// Exhaustive check of the group axioms; nullopt means valid.
std::optional<GroupViolation> validate_group(const FiniteGroup& g);

}  // namespace chaincodes
