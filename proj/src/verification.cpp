#include "chaincodes/verification.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "chaincodes/error.hpp"
#include "chaincodes/literals.hpp"

namespace chaincodes {

ChainUniverse build_chain_universe(const GroupPtr& group, const RingPtr& ring, const ScanOptions& opts) {
    ChainUniverse u{group, ring, projective_code_inventory(group, ring->p(), opts), {}, {}};
    for (const auto& idx : enumerate_chains(u.inventory, ring->ell())) {
        CodeChain chain{ring->spec(), {}, {}};
        for (auto i : idx) {
            chain.codes.push_back(u.inventory[i].code);
            chain.idems.push_back(projectivity_witness(u.inventory[i].code));
        }
        u.codes.push_back(build_code_from_chain(chain, ring));
        u.chains.push_back(std::move(chain));
    }
    return u;
}

namespace {

std::string describe(const ChainUniverse& u, std::size_t i) {
    std::string s = u.group->spec() + " over " + u.ring->spec().to_string() + ", chain dims (";
    for (std::size_t j = 0; j < u.chains[i].codes.size(); ++j)
        s += (j ? "," : "") + std::to_string(u.chains[i].codes[j].dim());
    return s + ")";
}

}  // namespace

SuiteResult verify_roundtrip(const ChainUniverse& u) {
    SuiteResult r;
    r.suite = "roundtrip";
    std::set<RMatrix> seen;
    for (std::size_t i = 0; i < u.codes.size(); ++i) {
        ++r.checked;
        const CodeChain back = chain_extract(u.codes[i]);
        if (!back.same_codes(u.chains[i])) r.fail("chain_extract(build(chain)) differs: " + describe(u, i));
        if (!seen.insert(u.codes[i].rows()).second) r.fail("two chains build the same code: " + describe(u, i));
        const auto verdict = decide_relative_projective(u.codes[i]);
        if (std::holds_alternative<VerdictIndeterminate>(verdict)) {
            ++r.indeterminate;
            r.notes.push_back("indeterminate verdict: " + describe(u, i));
        } else if (!std::holds_alternative<VerdictYes>(verdict)) {
            r.fail("built code was not recognized as relative projective: " + describe(u, i));
        }
    }
    return r;
}

SuiteResult verify_duality(const ChainUniverse& u) {
    SuiteResult r;
    r.suite = "duality";
    for (std::size_t i = 0; i < u.codes.size(); ++i) {
        ++r.checked;
        const RCode dual = dual_code_r(u.codes[i]);
        if (!(dual_code_r(dual) == u.codes[i])) r.fail("dual is not an involution: " + describe(u, i));
        const CodeChain dual_chain = chain_extract(dual);
        const auto& codes = u.chains[i].codes;
        for (std::size_t j = 0; j < codes.size(); ++j)
            if (!(dual_chain.codes[j] == dual_code_f(codes[codes.size() - 1 - j])))
                r.fail("dual chain is not the reversed duals at layer " + std::to_string(j) + ": " + describe(u, i));
    }
    for (const auto& e : enumerate_idempotents_exhaustive(u.group, u.ring->p())) {
        ++r.checked;
        try {
            const GroupCodeF c = code_from_idempotent(e);
            const GroupCodeF d = dual_code_f(c, e);
            if (c.dim() + d.dim() != c.length()) r.fail("dual dimension mismatch for " + format_element(e));
        } catch (const Error& err) {
            r.fail(std::string("dual formula check failed for ") + format_element(e) + ": " + err.what());
        }
    }
    return r;
}

SuiteResult verify_distance(const ChainUniverse& u, unsigned element_budget_log2) {
    SuiteResult r;
    r.suite = "distance";
    for (std::size_t i = 0; i < u.codes.size(); ++i) {
        const RCode& c = u.codes[i];
        ++r.checked;
        const auto theorem = min_hamming_r(c, HammingMode::Theorem);
        const double bits = static_cast<double>(c.log_size()) * std::log2(static_cast<double>(u.ring->p()));
        const auto exact = bits <= element_budget_log2 ? min_hamming_r(c, HammingMode::Exhaustive, element_budget_log2)
                                                       : min_hamming_support_scan(c);
        if (theorem != exact)
            r.fail("theorem distance " + std::to_string(theorem.value_or(0)) + " != exhaustive " +
                   std::to_string(exact.value_or(0)) + ": " + describe(u, i));
    }
    return r;
}

SuiteResult verify_euclidean(const ChainUniverse& u, unsigned element_budget_log2) {
    SuiteResult r;
    r.suite = "euclidean";
    if (!u.ring->is_integer()) {
        r.notes.push_back("skipped: euclidean weight is defined for Z/p^ell Z only");
        return r;
    }
    for (std::size_t i = 0; i < u.codes.size(); ++i) {
        ++r.checked;
        const auto rep = euclidean_weights(u.codes[i], element_budget_log2);
        if (rep.exhaustive.has_value() != rep.gamma_bound.has_value())
            r.fail("zero-code mismatch between exhaustive d_E and gamma: " + describe(u, i));
        else if (rep.exhaustive && *rep.exhaustive < *rep.gamma_bound)
            r.fail("d_E " + std::to_string(*rep.exhaustive) + " below gamma " + std::to_string(*rep.gamma_bound) +
                   ": " + describe(u, i));
    }
    return r;
}

std::size_t count_self_dual(const ChainUniverse& u) {
    std::size_t n = 0;
    for (const auto& c : u.codes)
        if (dual_code_r(c) == c) ++n;
    return n;
}

SuiteResult verify_parity(const ChainUniverse& u) {
    SuiteResult r;
    r.suite = "parity";
    r.checked = u.codes.size();
    const std::size_t found = count_self_dual(u);
    const bool even = u.ring->ell() % 2 == 0;
    if (even && found == 0) r.fail("no self-dual code found although ell is even");
    if (!even && found > 0) r.fail(std::to_string(found) + " self-dual codes found although ell is odd");
    r.notes.push_back(found == 0 ? "no self-dual relative projective codes (ℓ odd)"
                                 : std::to_string(found) + " self-dual relative projective codes");
    return r;
}

SuiteResult verify_lifting(const GroupPtr& group, const RingPtr& ring) {
    SuiteResult r;
    r.suite = "lifting";
    const auto idems = enumerate_idempotents_exhaustive(group, ring->p());
    std::vector<RAlgebraElement> lifts;
    for (const auto& e : idems) {
        ++r.checked;
        const auto lifted = lift_idempotent(e, ring).value;
        if (!lifted.is_idempotent() || !(lifted.reduce() == e)) r.fail("bad lift of " + format_element(e));
        lifts.push_back(lifted);
    }
    const double bits = static_cast<double>(group->order()) * std::log2(static_cast<double>(ring->size()));
    if (!group->is_abelian() || bits > 20) return r;
    // Every idempotent of RG must be the lift of its reduction.
    const std::size_t n = group->order();
    std::vector<Scalar> c(n, 0);
    std::size_t found = 0;
    while (true) {
        RAlgebraElement x(group, ring, c);
        if (x.is_idempotent()) {
            ++found;
            const auto it = std::find(idems.begin(), idems.end(), x.reduce());
            if (it == idems.end() || !(lifts[static_cast<std::size_t>(it - idems.begin())] == x))
                r.fail("idempotent " + format_element(x) + " is not the computed lift of its reduction");
        }
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++c[i] < ring->size()) break;
            c[i] = 0;
        }
        if (i == n) break;
    }
    if (found != idems.size())
        r.fail("RG has " + std::to_string(found) + " idempotents, F_pG has " + std::to_string(idems.size()));
    r.notes.push_back("uniqueness checked by scanning " + std::to_string(found) + " idempotents of RG");
    return r;
}

}  // namespace chaincodes
