#include "chaincodes/ring_matrix.hpp"

#include <algorithm>

namespace chaincodes {

namespace {

bool is_zero_row(const RRow& r) {
    return std::all_of(r.begin(), r.end(), [](Scalar x) { return x == 0; });
}

// r -= f * s, from column `from` on.
void axpy(const ChainRing& ring, RRow& r, Scalar f, const RRow& s, std::size_t from) {
    const Scalar nf = ring.neg(f);
    for (std::size_t k = from; k < r.size(); ++k)
        if (s[k]) r[k] = ring.add(r[k], ring.mul(nf, s[k]));
}

void scale(const ChainRing& ring, RRow& r, Scalar f) {
    for (auto& x : r) x = ring.mul(f, x);
}

}  // namespace

HowellForm howell_form(const ChainRing& ring, RMatrix rows, std::size_t cols) {
    const unsigned ell = ring.ell();
    RMatrix work;
    for (auto& r : rows)
        if (!is_zero_row(r)) work.push_back(std::move(r));

    HowellForm out;
    for (std::size_t col = 0; col < cols && !work.empty(); ++col) {
        std::size_t best = work.size();
        unsigned best_val = ell;
        for (std::size_t i = 0; i < work.size(); ++i) {
            const unsigned v = ring.valuation(work[i][col]);
            if (v < best_val) best_val = v, best = i;
            if (v == 0) break;
        }
        if (best == work.size()) continue;

        RRow pivot = std::move(work[best]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
        scale(ring, pivot, ring.unit_inverse(ring.divide_by_pi_pow(pivot[col], best_val)));

        for (auto& r : work)
            if (r[col]) axpy(ring, r, ring.divide_by_pi_pow(r[col], best_val), pivot, col);
        if (best_val > 0) {
            RRow extra = pivot;
            scale(ring, extra, ring.pi_pow(ell - best_val));
            work.push_back(std::move(extra));
        }
        std::erase_if(work, is_zero_row);

        out.rows.push_back(std::move(pivot));
        out.pivot_cols.push_back(col);
        out.pivot_vals.push_back(best_val);
    }

    // Reduce entries above each pivot into [0, pi^a).
    for (std::size_t k = 0; k < out.rows.size(); ++k)
        for (std::size_t i = k + 1; i < out.rows.size(); ++i) {
            const std::size_t col = out.pivot_cols[i];
            const Scalar x = out.rows[k][col];
            const Scalar rem = ring.reduce_mod_pi_pow(x, out.pivot_vals[i]);
            if (x == rem) continue;
            axpy(ring, out.rows[k], ring.divide_by_pi_pow(ring.sub(x, rem), out.pivot_vals[i]), out.rows[i], col);
        }
    return out;
}

bool module_contains(const ChainRing& ring, const HowellForm& form, RRow v) {
    std::size_t next = 0;
    for (std::size_t col = 0; col < v.size(); ++col) {
        while (next < form.pivot_cols.size() && form.pivot_cols[next] < col) ++next;
        if (!v[col]) continue;
        if (next == form.pivot_cols.size() || form.pivot_cols[next] != col) return false;
        if (ring.valuation(v[col]) < form.pivot_vals[next]) return false;
        axpy(ring, v, ring.divide_by_pi_pow(v[col], form.pivot_vals[next]), form.rows[next], col);
    }
    return true;
}

std::optional<RRow> solve_left(const ChainRing& ring, const RMatrix& m, const RRow& b, std::size_t cols) {
    const std::size_t n = m.size();
    RMatrix aug;
    aug.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        RRow r(cols + n, 0);
        std::copy(m[i].begin(), m[i].end(), r.begin());
        r[cols + i] = 1;
        aug.push_back(std::move(r));
    }
    const HowellForm h = howell_form(ring, std::move(aug), cols + n);
    // Reduce [b | 0] on the first `cols` columns; what is left on the right is -x.
    RRow v(cols + n, 0);
    std::copy(b.begin(), b.end(), v.begin());
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        while (next < h.pivot_cols.size() && h.pivot_cols[next] < col) ++next;
        if (!v[col]) continue;
        if (next == h.pivot_cols.size() || h.pivot_cols[next] != col) return std::nullopt;
        if (ring.valuation(v[col]) < h.pivot_vals[next]) return std::nullopt;
        axpy(ring, v, ring.divide_by_pi_pow(v[col], h.pivot_vals[next]), h.rows[next], col);
    }
    RRow x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = ring.neg(v[cols + i]);
    return x;
}

HowellForm left_kernel(const ChainRing& ring, const RMatrix& a, std::size_t cols) {
    const std::size_t m = a.size();
    RMatrix aug;
    aug.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        RRow r(cols + m, 0);
        std::copy(a[i].begin(), a[i].end(), r.begin());
        r[cols + i] = 1;
        aug.push_back(std::move(r));
    }
    HowellForm h = howell_form(ring, std::move(aug), cols + m);
    RMatrix kernel;
    for (std::size_t i = 0; i < h.rows.size(); ++i)
        if (h.pivot_cols[i] >= cols)
            kernel.emplace_back(h.rows[i].begin() + static_cast<std::ptrdiff_t>(cols), h.rows[i].end());
    return howell_form(ring, std::move(kernel), m);
}

}  // namespace chaincodes
