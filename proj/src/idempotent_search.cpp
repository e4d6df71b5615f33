#include "chaincodes/idempotent_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "chaincodes/error.hpp"
#include "chaincodes/polynomial.hpp"

namespace chaincodes {

namespace {

constexpr unsigned kChunkBits = 16;

struct Checkpoint {
    std::uint64_t next = 0;
    std::vector<std::uint64_t> found;
};

std::optional<Checkpoint> load_checkpoint(const std::string& path, const std::string& group_spec) {
    if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
    std::ifstream in(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
    if (j.value("group", "") != group_spec) return std::nullopt;
    return Checkpoint{j.at("next").get<std::uint64_t>(), j.at("found").get<std::vector<std::uint64_t>>()};
}

void save_checkpoint(const std::string& path, const std::string& group_spec, const Checkpoint& cp) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << nlohmann::json{{"group", group_spec}, {"next", cp.next}, {"found", cp.found}}.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::vector<std::uint64_t> scan_idempotents_f2(const GroupPtr& group, const ScanOptions& opts,
                                               std::uint64_t* scanned) {
    const std::size_t n = group->order();
    if (n > opts.budget_log2 || n > 63)
        throw Error(ErrorKind::BudgetExceeded, "scan needs 2^" + std::to_string(n) + " candidates, budget is 2^" +
                                                   std::to_string(opts.budget_log2));
    const PackedF2Algebra alg(*group);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t chunk = std::min<std::uint64_t>(total, std::uint64_t{1} << kChunkBits);
    const std::uint64_t chunks = total / chunk;
    const std::string spec = group->spec();

    Checkpoint cp = load_checkpoint(opts.checkpoint_path, spec).value_or(Checkpoint{});
    const std::uint64_t first_chunk = cp.next / chunk;

    std::mutex mu;
    std::map<std::uint64_t, std::vector<std::uint64_t>> pending;  // finished chunks past the high-water mark
    std::uint64_t high_water = first_chunk;
    std::atomic<std::uint64_t> next_chunk{first_chunk};
    std::uint64_t since_save = 0;

    auto work = [&] {
        while (true) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunks) return;
            std::vector<std::uint64_t> hits;
            const std::uint64_t lo = c * chunk, hi = lo + chunk;
            for (std::uint64_t x = lo; x < hi; ++x)
                if (alg.is_idempotent(x)) hits.push_back(x);
            std::lock_guard lock(mu);
            pending.emplace(c, std::move(hits));
            while (!pending.empty() && pending.begin()->first == high_water) {
                auto& h = pending.begin()->second;
                cp.found.insert(cp.found.end(), h.begin(), h.end());
                pending.erase(pending.begin());
                ++high_water;
            }
            cp.next = high_water * chunk;
            if (!opts.checkpoint_path.empty() && ++since_save >= 256) {
                save_checkpoint(opts.checkpoint_path, spec, cp);
                since_save = 0;
            }
        }
    };
    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (!opts.checkpoint_path.empty()) save_checkpoint(opts.checkpoint_path, spec, cp);
    if (scanned) *scanned = (chunks - first_chunk) * chunk;
    return cp.found;
}

std::vector<FAlgebraElement> enumerate_idempotents_exhaustive(const GroupPtr& group, Coeff p, const ScanOptions& opts) {
    const std::size_t n = group->order();
    std::vector<FAlgebraElement> out;
    if (p == 2 && n <= 63) {
        for (auto bits : scan_idempotents_f2(group, opts)) out.push_back(FAlgebraElement::from_bits(group, bits));
        std::sort(out.begin(), out.end());
        return out;
    }
    const double bits = static_cast<double>(n) * std::log2(static_cast<double>(p));
    if (bits > opts.budget_log2)
        throw Error(ErrorKind::BudgetExceeded, "scan needs 2^" + std::to_string(bits) + " candidates, budget is 2^" +
                                                   std::to_string(opts.budget_log2));
    std::vector<Coeff> c(n, 0);
    while (true) {
        FAlgebraElement e(group, p, c);
        if (alg_mul_generic(e, e) == e) out.push_back(std::move(e));
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FAlgebraElement> enumerate_idempotents_cyclic(std::size_t n, Coeff p) {
    if (n % p == 0) throw Error(ErrorKind::Unsupported, "cyclic idempotent construction needs gcd(n, p) = 1");
    const auto group = make_cyclic(n);
    const auto factors = factor_xn_minus_1(n, p);
    const FpPoly modulus = FpPoly::monomial(p, n) - FpPoly(p, {1});
    std::vector<FpPoly> theta;
    for (const auto& f : factors) {
        const FpPoly cofactor = divmod(modulus, f).first;
        theta.push_back(divmod(cofactor * invmod(cofactor, f), modulus).second);
    }
    if (factors.size() >= 30) throw Error(ErrorKind::BudgetExceeded, "too many irreducible factors");
    std::vector<FAlgebraElement> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << factors.size()); ++mask) {
        FpPoly s(p);
        for (std::size_t i = 0; i < factors.size(); ++i)
            if ((mask >> i) & 1) s = s + theta[i];
        std::vector<Coeff> c(n, 0);
        for (std::size_t i = 0; i < n; ++i) c[i] = s[i];
        out.emplace_back(group, p, std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ProjectiveCode> projective_code_inventory(const GroupPtr& group, Coeff p, const ScanOptions& opts) {
    std::vector<ProjectiveCode> out;
    for (auto& e : enumerate_idempotents_exhaustive(group, p, opts)) {
        GroupCodeF c = code_from_idempotent(e);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const ProjectiveCode& pc) { return pc.code == c; });
        if (!seen) out.push_back({std::move(c), std::move(e)});
    }
    std::sort(out.begin(), out.end(), [](const ProjectiveCode& a, const ProjectiveCode& b) {
        if (a.code.dim() != b.code.dim()) return a.code.dim() < b.code.dim();
        return a.code.basis() < b.code.basis();
    });
    return out;
}

std::vector<std::vector<std::size_t>> enumerate_chains(const std::vector<ProjectiveCode>& codes, unsigned ell) {
    const std::size_t m = codes.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) leq[a][b] = codes[b].code.contains(codes[a].code);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == ell) {
            out.push_back(cur);
            return;
        }
        for (std::size_t b = 0; b < m; ++b)
            if (cur.empty() || leq[cur.back()][b]) {
                cur.push_back(b);
                self(self);
                cur.pop_back();
            }
    };
    if (ell > 0) rec(rec);
    return out;
}

namespace {

// RG (eps + 2 (1 - eps*)) for a lift with eps eps* = 0; this ideal is self-dual.
std::optional<SearchWitness> self_dual_witness(const GroupCodeF& c0, const GroupCodeF& c0_dual,
                                               const FAlgebraElement& e, const RingPtr& ring, std::size_t d) {
    const auto eps = self_orthogonal_lift(e, ring);
    if (!eps) return std::nullopt;
    const GroupPtr& group = c0.group_ptr();
    CodeChain chain{ring->spec(), {c0, c0_dual}, {e, FAlgebraElement::one(group, 2) - star(e)}};
    const std::vector<RAlgebraElement> lifts{*eps, RAlgebraElement::one(group, ring) - star_r(*eps)};
    RCode code = build_code_from_lifts(chain, lifts);
    if (!(dual_code_r(code) == code))
        throw Error(ErrorKind::InternalConsistency, "self-orthogonal lift did not give a self-dual code");
    RAlgebraElement generator = lifts[0] + lifts[1].scaled(ring->pi_pow(1));
    return SearchWitness{e, std::move(chain), std::move(generator), std::move(code), d, true};
}

// The relative projective code of the chain C_0 <= C_0^perp built from compatible lifts.
SearchWitness chain_witness(const GroupCodeF& c0, const GroupCodeF& c0_dual, const FAlgebraElement& e,
                            const RingPtr& ring, std::size_t d) {
    CodeChain chain = make_chain(ring->spec(), {c0, c0_dual});
    const auto lifts = compatible_lifts(chain, ring);
    RAlgebraElement generator = lifts[0] + lifts[1].scaled(ring->pi_pow(1));
    RCode code = RCode::left_ideal(c0.group_ptr(), ring, {generator});
    const bool self_dual = dual_code_r(code) == code;
    return SearchWitness{e, std::move(chain), std::move(generator), std::move(code), d, self_dual};
}

}  // namespace

SearchReport search_selfdual_dihedral_z4(std::size_t two_n, const SearchOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    if (two_n == 0 || two_n % 2 != 0) throw Error(ErrorKind::InvalidParameter, "dihedral order must be even and positive");
    const GroupPtr group = make_dihedral(two_n / 2);
    const RingPtr ring = make_ring(ChainRingSpec{2, 2, RingFlavor::IntegerResidue});
    const PackedF2Algebra alg(*group);

    SearchReport report;
    report.group_spec = group->spec();
    report.ring_spec = ring->spec().to_string();
    report.strategy = "exhaustive";

    const auto idems = scan_idempotents_f2(group, opts.scan, &report.candidates_scanned);
    report.idempotent_count = idems.size();

    // Canonical key of C_0 -> every self-orthogonal idempotent generating it.
    std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> distinct;
    for (auto e : idems) {
        if (alg.mul(e, alg.star(e)) != 0) continue;
        ++report.self_orthogonal_idempotents;
        std::vector<std::uint64_t> translates;
        for (Elem g = 0; g < group->order(); ++g) translates.push_back(alg.left_mul(g, e));
        distinct[rref_bits(std::move(translates))].push_back(e);
    }

    std::vector<std::optional<SearchWitness>> self_dual;
    for (const auto& [key, generators] : distinct) {
        const FAlgebraElement first = FAlgebraElement::from_bits(group, generators.front());
        const GroupCodeF c0 = code_from_idempotent(first);
        if (c0.packed_basis() != key) throw Error(ErrorKind::InternalConsistency, "packed and generic echelon forms differ");
        if (!is_self_orthogonal_f(c0))
            throw Error(ErrorKind::InternalConsistency, "e e* = 0 but the code is not self-orthogonal");
        const GroupCodeF c0_dual = dual_code_f(c0, first);
        const std::size_t d = min_hamming_distance_f(c0_dual, opts.distance).value_or(0);
        // Whether a self-dual lift exists depends on the generator; try them all.
        std::optional<SearchWitness> w;
        for (auto bits : generators)
            if ((w = self_dual_witness(c0, c0_dual, FAlgebraElement::from_bits(group, bits), ring, d))) break;
        report.codes.push_back(SearchCode{key, w ? w->idempotent : first, c0.dim(), d, w.has_value()});
        report.best_distance = std::max(report.best_distance, d);
        if (w) report.best_self_dual_distance = std::max(report.best_self_dual_distance, d);
        self_dual.push_back(std::move(w));
    }

    // Witnesses for the optimum, self-dual ones first.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < report.codes.size(); ++i)
        if (report.codes[i].distance == report.best_distance) order.push_back(i);
    report.optimal_count = order.size();
    std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return self_dual[i].has_value(); });
    for (std::size_t i : order) {
        if (report.optimal.size() >= opts.max_witnesses) break;
        const SearchCode& sc = report.codes[i];
        SearchWitness w = self_dual[i] ? std::move(*self_dual[i])
                                       : chain_witness(code_from_idempotent(sc.idempotent),
                                                       dual_code_f(code_from_idempotent(sc.idempotent), sc.idempotent),
                                                       sc.idempotent, ring, sc.distance);
        if (!recheck_witness(w)) throw Error(ErrorKind::InternalConsistency, "optimal witness failed re-verification");
        report.optimal.push_back(std::move(w));
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool recheck_witness(const SearchWitness& w) {
    if (!is_idempotent(w.idempotent) || w.chain.codes.size() != 2) return false;
    const GroupCodeF& c0 = w.chain.codes.front();
    if (!is_self_orthogonal_f(c0) || !(code_from_idempotent(w.idempotent) == c0)) return false;
    if (!(dual_code_f(c0) == w.chain.codes.back())) return false;
    if (!(RCode::left_ideal(w.code.group_ptr(), w.code.ring_ptr(), {w.generator}) == w.code)) return false;
    if ((dual_code_r(w.code) == w.code) != w.self_dual) return false;
    const auto verdict = decide_relative_projective(w.code);
    const auto* yes = std::get_if<VerdictYes>(&verdict);
    if (!yes || !yes->chain.same_codes(w.chain)) return false;
    const auto d = min_hamming_r(w.code, HammingMode::Theorem);
    return d && *d == w.distance;
}

}  // namespace chaincodes
