#include "chaincodes/field_codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "chaincodes/error.hpp"

namespace chaincodes {

std::vector<std::size_t> rref(FpMatrix& m, Coeff p) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        const Coeff inv = inverse_mod(m[rank][col], p);
        for (auto& v : m[rank]) v = static_cast<Coeff>((std::uint64_t{v} * inv) % p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const std::uint64_t f = p - m[r][col];
            for (std::size_t k = col; k < cols; ++k) m[r][k] = static_cast<Coeff>((m[r][k] + f * m[rank][k]) % p);
        }
        pivots.push_back(col);
        ++rank;
    }
    m.resize(rank);
    return pivots;
}

FpMatrix nullspace(const FpMatrix& m, std::size_t cols, Coeff p) {
    FpMatrix a = m;
    const auto pivots = rref(a, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    FpMatrix out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        FpRow v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - a[r][free]) % p;
        out.push_back(std::move(v));
    }
    rref(out, p);
    return out;
}

std::vector<std::uint64_t> rref_bits(std::vector<std::uint64_t> rows) {
    std::vector<std::uint64_t> basis;
    for (auto r : rows) {
        for (auto b : basis)
            if (r & (b & -b)) r ^= b;
        if (!r) continue;
        const std::uint64_t lead = r & -r;
        for (auto& b : basis)
            if (b & lead) b ^= r;
        basis.push_back(r);
    }
    std::sort(basis.begin(), basis.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
    return basis;
}

GroupCodeF::GroupCodeF(GroupPtr group, Coeff p, FpMatrix basis)
    : group_(std::move(group)), p_(p), basis_(std::move(basis)) {
    pivots_ = rref(basis_, p_);
}

GroupCodeF GroupCodeF::left_ideal(GroupPtr group, Coeff p, const std::vector<FAlgebraElement>& generators) {
    const FiniteGroup& G = *group;
    FpMatrix rows;
    for (const auto& x : generators) {
        if (x.p() != p || x.size() != G.order())
            throw Error(ErrorKind::IncompatibleOperands, "generator outside the group algebra");
        for (Elem g = 0; g < G.order(); ++g) {
            FpRow r(G.order(), 0);
            for (Elem h = 0; h < G.order(); ++h) r[G.mul(g, h)] = x[h];
            rows.push_back(std::move(r));
        }
    }
    return GroupCodeF(std::move(group), p, std::move(rows));
}

GroupCodeF GroupCodeF::from_rows(GroupPtr group, Coeff p, FpMatrix rows) {
    for (const auto& r : rows)
        if (r.size() != group->order()) throw Error(ErrorKind::InvalidParameter, "row length must equal |G|");
    GroupCodeF c(group, p, std::move(rows));
    const FiniteGroup& G = *c.group_;
    for (const auto& r : c.basis_)
        for (Elem g = 1; g < G.order(); ++g) {
            std::vector<Coeff> shifted(G.order());
            for (Elem h = 0; h < G.order(); ++h) shifted[G.mul(g, h)] = r[h];
            if (!c.contains(FAlgebraElement(c.group_, p, std::move(shifted))))
                throw Error(ErrorKind::InvalidParameter, "row space is not a left ideal");
        }
    return c;
}

GroupCodeF GroupCodeF::zero(GroupPtr group, Coeff p) { return GroupCodeF(std::move(group), p, {}); }

GroupCodeF GroupCodeF::full(GroupPtr group, Coeff p) {
    FpMatrix id(group->order(), FpRow(group->order(), 0));
    for (std::size_t i = 0; i < id.size(); ++i) id[i][i] = 1;
    return GroupCodeF(std::move(group), p, std::move(id));
}

bool GroupCodeF::contains(const FAlgebraElement& v) const {
    if (v.size() != length() || v.p() != p_) return false;
    FpRow r(v.coeffs().begin(), v.coeffs().end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Coeff f = r[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = static_cast<Coeff>((r[k] + std::uint64_t{p_ - f} * basis_[i][k]) % p_);
    }
    return std::all_of(r.begin(), r.end(), [](Coeff c) { return c == 0; });
}

bool GroupCodeF::contains(const GroupCodeF& sub) const {
    for (std::size_t i = 0; i < sub.dim(); ++i)
        if (!contains(sub.row(i))) return false;
    return true;
}

std::vector<std::uint64_t> GroupCodeF::packed_basis() const {
    std::vector<std::uint64_t> out;
    out.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) out.push_back(row(i).to_bits());
    return out;
}

GroupCodeF code_from_idempotent(const FAlgebraElement& e) {
    if (!is_idempotent(e)) throw Error(ErrorKind::InvalidGenerator, "generator is not an idempotent");
    return GroupCodeF::left_ideal(e.group_ptr(), e.p(), {e});
}

GroupCodeF dual_code_f(const GroupCodeF& c, const std::optional<FAlgebraElement>& e) {
    GroupCodeF by_nullspace = GroupCodeF::from_rows(c.group_ptr(), c.p(), nullspace(c.basis(), c.length(), c.p()));
    if (by_nullspace.dim() + c.dim() != c.length())
        throw Error(ErrorKind::InternalConsistency, "dual dimension does not complement the code");
    if (e) {
        if (!(code_from_idempotent(*e) == c))
            throw Error(ErrorKind::PreconditionViolation, "idempotent does not generate the code");
        const GroupCodeF by_formula = code_from_idempotent(FAlgebraElement::one(c.group_ptr(), c.p()) - star(*e));
        if (!(by_formula == by_nullspace))
            throw Error(ErrorKind::InternalConsistency, "idempotent dual formula disagrees with the nullspace");
    }
    return by_nullspace;
}

namespace {

/// Solves a x = b over F_p; any solution (free variables zero) or nullopt.
std::optional<FpRow> solve(FpMatrix a, const FpRow& b, Coeff p) {
    const std::size_t unknowns = a.empty() ? 0 : a.front().size();
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    const auto pivots = rref(a, p);
    FpRow x(unknowns, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == unknowns) return std::nullopt;
        x[pivots[r]] = a[r][unknowns];
    }
    return x;
}

}  // namespace

std::optional<FAlgebraElement> projectivity_witness(const GroupCodeF& c) {
    const std::size_t k = c.dim(), n = c.length();
    const Coeff p = c.p();
    if (k == 0) return FAlgebraElement::zero(c.group_ptr(), p);
    // e = sum_k lambda_k b_k with b_i e = b_i for every basis row.
    std::vector<FAlgebraElement> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(c.row(i));
    FpMatrix a;
    FpRow rhs;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<FAlgebraElement> prods;
        for (std::size_t j = 0; j < k; ++j) prods.push_back(alg_mul(rows[i], rows[j]));
        for (std::size_t g = 0; g < n; ++g) {
            FpRow eq(k);
            for (std::size_t j = 0; j < k; ++j) eq[j] = prods[j][g];
            a.push_back(std::move(eq));
            rhs.push_back(rows[i][g]);
        }
    }
    const auto lambda = solve(std::move(a), rhs, p);
    if (!lambda) return std::nullopt;
    FAlgebraElement e = FAlgebraElement::zero(c.group_ptr(), p);
    for (std::size_t j = 0; j < k; ++j) e = e + rows[j].scaled((*lambda)[j]);
    if (!is_idempotent(e)) throw Error(ErrorKind::InternalConsistency, "right identity of an ideal is not idempotent");
    return e;
}

bool is_self_orthogonal_f(const GroupCodeF& c) {
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = i; j < c.dim(); ++j)
            if (bilinear_form(c.row(i), c.row(j)) != 0) return false;
    return true;
}

namespace {

double log2_binomial_sum(std::size_t n, std::size_t max_w) {
    double total = 0;
    double term = 1;
    for (std::size_t w = 1; w <= max_w && w <= n; ++w) {
        term = term * static_cast<double>(n - w + 1) / static_cast<double>(w);
        total += term;
    }
    return std::log2(std::max(total, 1.0));
}

std::size_t gray_min_weight_f2(const std::vector<std::uint64_t>& rows, unsigned workers) {
    const std::size_t k = rows.size();
    const std::uint64_t total = std::uint64_t{1} << k;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
    std::vector<std::size_t> best(workers, std::numeric_limits<std::size_t>::max());
    auto run = [&](unsigned w) {
        const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
        if (lo >= hi) return;
        const std::uint64_t g0 = lo ^ (lo >> 1);
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < k; ++i)
            if ((g0 >> i) & 1) word ^= rows[i];
        std::size_t local = word ? static_cast<std::size_t>(std::popcount(word)) : best[w];
        for (std::uint64_t i = lo + 1; i < hi; ++i) {
            word ^= rows[std::countr_zero(i)];
            const auto wt = static_cast<std::size_t>(std::popcount(word));
            if (word && wt < local) local = wt;
        }
        best[w] = local;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    return *std::min_element(best.begin(), best.end());
}

std::size_t odometer_min_weight(const FpMatrix& rows, std::size_t n, Coeff p) {
    const std::size_t k = rows.size();
    std::vector<Coeff> digits(k, 0);
    std::vector<Coeff> word(n, 0);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    while (true) {
        std::size_t i = 0;
        for (; i < k; ++i) {
            for (std::size_t g = 0; g < n; ++g) word[g] = (word[g] + rows[i][g]) % p;
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == k) break;
        const auto wt = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Coeff c) { return c; }));
        best = std::min(best, wt);
    }
    return best;
}

/// Smallest set of columns of the parity-check matrix summing to zero (p = 2).
std::size_t parity_check_min_weight_f2(const std::vector<std::uint64_t>& syndromes) {
    const std::size_t n = syndromes.size();
    for (std::size_t w = 1; w <= n; ++w) {
        // Depth-first over increasing column indices.
        std::vector<std::size_t> idx(w);
        std::vector<std::uint64_t> acc(w + 1, 0);
        std::size_t depth = 0;
        idx[0] = 0;
        while (true) {
            if (idx[depth] + (w - depth) > n) {
                if (depth == 0) break;
                --depth;
                ++idx[depth];
                continue;
            }
            acc[depth + 1] = acc[depth] ^ syndromes[idx[depth]];
            if (depth + 1 == w) {
                if (acc[w] == 0) return w;
                ++idx[depth];
            } else {
                idx[depth + 1] = idx[depth] + 1;
                ++depth;
            }
        }
    }
    return n + 1;
}

}  // namespace

std::optional<std::size_t> min_hamming_distance_f(const GroupCodeF& c, const DistanceOptions& opts,
                                                  DistanceStrategy strategy) {
    if (c.dim() == 0) return std::nullopt;
    const std::size_t n = c.length(), k = c.dim();
    const Coeff p = c.p();
    const double gen_cost = static_cast<double>(k) * std::log2(static_cast<double>(p));
    const bool packed = p == 2 && n <= 64;
    const double pc_cost = packed ? log2_binomial_sum(n, n - k + 1) : std::numeric_limits<double>::infinity();
    if (strategy == DistanceStrategy::Auto) strategy = gen_cost <= pc_cost ? DistanceStrategy::Generator
                                                                           : DistanceStrategy::ParityCheck;
    if (strategy == DistanceStrategy::ParityCheck && !packed)
        throw Error(ErrorKind::Unsupported, "parity-check distance search needs p = 2 and |G| <= 64");
    const double cost = strategy == DistanceStrategy::Generator ? gen_cost : pc_cost;
    if (cost > opts.cutoff_log2)
        throw Error(ErrorKind::BudgetExceeded, "minimum distance needs about 2^" + std::to_string(cost) +
                                                   " steps, cutoff is 2^" + std::to_string(opts.cutoff_log2));
    if (strategy == DistanceStrategy::Generator) {
        if (packed) return gray_min_weight_f2(c.packed_basis(), opts.workers);
        return odometer_min_weight(c.basis(), n, p);
    }
    const FpMatrix h = nullspace(c.basis(), n, p);
    std::vector<std::uint64_t> syndromes(n, 0);
    for (std::size_t r = 0; r < h.size(); ++r)
        for (std::size_t g = 0; g < n; ++g)
            if (h[r][g]) syndromes[g] |= std::uint64_t{1} << r;
    return parity_check_min_weight_f2(syndromes);
}

std::optional<std::uint64_t> min_euclidean_weight_f(const GroupCodeF& c, const DistanceOptions& opts) {
    if (c.dim() == 0) return std::nullopt;
    const Coeff p = c.p();
    if (static_cast<double>(c.dim()) * std::log2(static_cast<double>(p)) > opts.cutoff_log2)
        throw Error(ErrorKind::BudgetExceeded, "euclidean weight enumeration exceeds cutoff");
    if (p == 2) return min_hamming_distance_f(c, opts);
    std::vector<std::uint64_t> sq(p);
    for (Coeff v = 0; v < p; ++v) {
        const std::uint64_t m = std::min(v, p - v);
        sq[v] = m * m;
    }
    const std::size_t n = c.length(), k = c.dim();
    std::vector<Coeff> digits(k, 0), word(n, 0);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    while (true) {
        std::size_t i = 0;
        for (; i < k; ++i) {
            for (std::size_t g = 0; g < n; ++g) word[g] = (word[g] + c.basis()[i][g]) % p;
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == k) break;
        std::uint64_t w = 0;
        for (auto v : word) w += sq[v];
        best = std::min(best, w);
    }
    return best;
}

}  // namespace chaincodes
