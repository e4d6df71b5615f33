#include "chaincodes/ring_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "chaincodes/error.hpp"

namespace chaincodes {

RingPtr make_ring(const ChainRingSpec& spec) { return std::make_shared<const ChainRing>(spec); }

// ---------------------------------------------------------------------------
// RAlgebraElement

RAlgebraElement::RAlgebraElement(GroupPtr group, RingPtr ring)
    : group_(std::move(group)), ring_(std::move(ring)), coeffs_(group_->order(), 0) {}

RAlgebraElement::RAlgebraElement(GroupPtr group, RingPtr ring, std::vector<Scalar> coeffs)
    : group_(std::move(group)), ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_->order())
        throw Error(ErrorKind::InvalidParameter, "coefficient count must equal the group order");
    for (auto c : coeffs_)
        if (c >= ring_->size()) throw Error(ErrorKind::InvalidParameter, "coefficient is not canonically reduced");
}

RAlgebraElement RAlgebraElement::one(GroupPtr group, RingPtr ring) {
    RAlgebraElement e(std::move(group), std::move(ring));
    e.coeffs_[0] = 1;
    return e;
}

RAlgebraElement RAlgebraElement::lift(const FAlgebraElement& e, RingPtr ring) {
    if (e.p() != ring->p()) throw Error(ErrorKind::IncompatibleOperands, "residue characteristic mismatch");
    std::vector<Scalar> c(e.size());
    for (std::size_t g = 0; g < e.size(); ++g) c[g] = ring->alpha_up(e[g], 0);
    return RAlgebraElement(e.group_ptr(), std::move(ring), std::move(c));
}

namespace {

void check_compatible(const RAlgebraElement& a, const RAlgebraElement& b) {
    if (!(a.ring().spec() == b.ring().spec()) || a.size() != b.size() ||
        !(a.group_ptr() == b.group_ptr() || a.group() == b.group()))
        throw Error(ErrorKind::IncompatibleOperands, "operands live in different group rings");
}

}  // namespace

RAlgebraElement RAlgebraElement::operator+(const RAlgebraElement& o) const {
    check_compatible(*this, o);
    RAlgebraElement r = *this;
    for (std::size_t g = 0; g < size(); ++g) r.coeffs_[g] = ring_->add(coeffs_[g], o.coeffs_[g]);
    return r;
}

RAlgebraElement RAlgebraElement::operator-(const RAlgebraElement& o) const {
    check_compatible(*this, o);
    RAlgebraElement r = *this;
    for (std::size_t g = 0; g < size(); ++g) r.coeffs_[g] = ring_->sub(coeffs_[g], o.coeffs_[g]);
    return r;
}

RAlgebraElement RAlgebraElement::operator*(const RAlgebraElement& o) const {
    check_compatible(*this, o);
    const FiniteGroup& G = *group_;
    RAlgebraElement r(group_, ring_);
    for (Elem g = 0; g < size(); ++g) {
        if (!coeffs_[g]) continue;
        for (Elem h = 0; h < size(); ++h) {
            if (!o.coeffs_[h]) continue;
            Scalar& t = r.coeffs_[G.mul(g, h)];
            t = ring_->add(t, ring_->mul(coeffs_[g], o.coeffs_[h]));
        }
    }
    return r;
}

RAlgebraElement RAlgebraElement::scaled(Scalar c) const {
    RAlgebraElement r = *this;
    for (auto& x : r.coeffs_) x = ring_->mul(c, x);
    return r;
}

FAlgebraElement RAlgebraElement::reduce() const {
    std::vector<Coeff> c(size());
    for (std::size_t g = 0; g < size(); ++g) c[g] = ring_->alpha(ring_->reduce_mod_pi_pow(coeffs_[g], 1), 0);
    return FAlgebraElement(group_, ring_->p(), std::move(c));
}

// ---------------------------------------------------------------------------
// RCode

RCode::RCode(GroupPtr group, RingPtr ring, HowellForm form) : group_(std::move(group)), ring_(std::move(ring)) {
    std::vector<std::size_t> order(form.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return form.pivot_vals[a] < form.pivot_vals[b];
    });
    for (auto i : order) {
        rows_.push_back(std::move(form.rows[i]));
        pivot_cols_.push_back(form.pivot_cols[i]);
        pivot_vals_.push_back(form.pivot_vals[i]);
    }
}

namespace {

RMatrix translates(const FiniteGroup& G, const std::vector<Scalar>& x) {
    RMatrix out;
    for (Elem g = 0; g < G.order(); ++g) {
        RRow r(G.order(), 0);
        for (Elem h = 0; h < G.order(); ++h) r[G.mul(g, h)] = x[h];
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

RCode RCode::left_ideal(GroupPtr group, RingPtr ring, const std::vector<RAlgebraElement>& generators) {
    RMatrix rows;
    for (const auto& x : generators) {
        if (!(x.ring().spec() == ring->spec()) || x.size() != group->order())
            throw Error(ErrorKind::IncompatibleOperands, "generator outside the group ring");
        for (auto& r : translates(*group, x.coeffs())) rows.push_back(std::move(r));
    }
    HowellForm h = howell_form(*ring, std::move(rows), group->order());
    return RCode(std::move(group), std::move(ring), std::move(h));
}

RCode RCode::from_rows(GroupPtr group, RingPtr ring, RMatrix rows) {
    for (const auto& r : rows)
        if (r.size() != group->order()) throw Error(ErrorKind::InvalidParameter, "row length must equal |G|");
    HowellForm h = howell_form(*ring, std::move(rows), group->order());
    RCode c(group, ring, std::move(h));
    for (const auto& r : c.rows_)
        for (auto& t : translates(*group, r))
            if (!c.contains(RAlgebraElement(group, ring, t)))
                throw Error(ErrorKind::InvalidParameter, "row module is not a left ideal");
    return c;
}

RCode RCode::zero(GroupPtr group, RingPtr ring) {
    return RCode(std::move(group), std::move(ring), HowellForm{});
}

std::size_t RCode::log_size() const noexcept {
    std::size_t s = 0;
    for (auto a : pivot_vals_) s += ring_->ell() - a;
    return s;
}

bool RCode::contains(const RAlgebraElement& v) const {
    if (v.size() != length() || !(v.ring().spec() == ring_->spec())) return false;
    const ChainRing& R = *ring_;
    std::vector<std::size_t> row_at(length(), rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) row_at[pivot_cols_[i]] = i;
    std::vector<Scalar> x = v.coeffs();
    for (std::size_t col = 0; col < length(); ++col) {
        if (!x[col]) continue;
        const std::size_t i = row_at[col];
        if (i == rows_.size() || R.valuation(x[col]) < pivot_vals_[i]) return false;
        const Scalar f = R.neg(R.divide_by_pi_pow(x[col], pivot_vals_[i]));
        for (std::size_t k = col; k < length(); ++k) x[k] = R.add(x[k], R.mul(f, rows_[i][k]));
    }
    return true;
}

void RCode::for_each_element(const std::function<void(const std::vector<Scalar>&)>& visit,
                             unsigned budget_log2) const {
    const ChainRing& R = *ring_;
    const double bits = static_cast<double>(log_size()) * std::log2(static_cast<double>(R.p()));
    if (bits > budget_log2)
        throw Error(ErrorKind::BudgetExceeded, "ideal has 2^" + std::to_string(bits) + " elements, budget is 2^" +
                                                   std::to_string(budget_log2));
    const std::size_t k = rows_.size(), n = length();
    std::vector<std::uint64_t> radix(k), digit(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        radix[i] = 1;
        for (unsigned t = pivot_vals_[i]; t < R.ell(); ++t) radix[i] *= R.p();
    }
    std::vector<Scalar> word(n, 0);
    visit(word);
    while (true) {
        std::size_t i = 0;
        for (; i < k; ++i) {
            const Scalar old = digit[i];
            digit[i] = (digit[i] + 1) % radix[i];
            const Scalar delta = R.sub(digit[i], old);
            for (std::size_t g = 0; g < n; ++g)
                if (rows_[i][g]) word[g] = R.add(word[g], R.mul(delta, rows_[i][g]));
            if (digit[i] != 0) break;
        }
        if (i == k) break;
        visit(word);
    }
}

// ---------------------------------------------------------------------------
// Chains

bool CodeChain::all_projective() const {
    return std::all_of(idems.begin(), idems.end(), [](const auto& e) { return e.has_value(); });
}

bool CodeChain::same_codes(const CodeChain& o) const {
    return spec == o.spec && codes == o.codes;
}

void validate_chain(const CodeChain& chain) {
    if (chain.codes.size() != chain.spec.ell || chain.idems.size() != chain.spec.ell)
        throw Error(ErrorKind::InvalidChain, "chain length must equal the ring length");
    for (std::size_t j = 0; j < chain.codes.size(); ++j) {
        const GroupCodeF& c = chain.codes[j];
        if (c.p() != chain.spec.p) throw Error(ErrorKind::InvalidChain, "chain code over the wrong field");
        if (j + 1 < chain.codes.size() && !chain.codes[j + 1].contains(c))
            throw Error(ErrorKind::InvalidChain, "chain is not nested at layer " + std::to_string(j));
        if (!chain.idems[j]) continue;
        const FAlgebraElement& e = *chain.idems[j];
        if (!is_idempotent(e) || !c.contains(e))
            throw Error(ErrorKind::InvalidChain, "layer " + std::to_string(j) + " idempotent does not lie in its code");
        for (std::size_t i = 0; i < c.dim(); ++i)
            if (!(alg_mul(c.row(i), e) == c.row(i)))
                throw Error(ErrorKind::InvalidChain, "layer " + std::to_string(j) + " idempotent is not a right identity");
    }
}

CodeChain make_chain(const ChainRingSpec& spec, std::vector<GroupCodeF> codes) {
    CodeChain chain{spec, std::move(codes), {}};
    for (const auto& c : chain.codes) chain.idems.push_back(projectivity_witness(c));
    validate_chain(chain);
    return chain;
}

LiftResult lift_idempotent(const FAlgebraElement& e, const RingPtr& ring) {
    if (!is_idempotent(e)) throw Error(ErrorKind::InvalidGenerator, "cannot lift a non-idempotent");
    RAlgebraElement eps = RAlgebraElement::lift(e, ring);
    const Scalar three = ring->from_int(3), two = ring->from_int(2);
    unsigned iterations = 0;
    for (unsigned i = 1; i <= ring->ell(); ++i) {
        const RAlgebraElement sq = eps * eps;
        if (sq == eps) break;
        eps = sq.scaled(three) - (sq * eps).scaled(two);
        ++iterations;
    }
    if (!eps.is_idempotent() || !(eps.reduce() == e))
        throw Error(ErrorKind::LiftingFailure, "idempotent lifting did not converge");
    return {std::move(eps), iterations};
}

std::vector<RAlgebraElement> compatible_lifts(const CodeChain& chain, const RingPtr& ring) {
    validate_chain(chain);
    if (!(chain.spec == ring->spec())) throw Error(ErrorKind::InvalidChain, "chain and ring disagree");
    if (!chain.all_projective()) throw Error(ErrorKind::InvalidChain, "every chain layer needs an idempotent");
    const GroupPtr& group = chain.codes.front().group_ptr();
    const RAlgebraElement one = RAlgebraElement::one(group, ring);
    const Scalar three = ring->from_int(3), two = ring->from_int(2);

    std::vector<RAlgebraElement> out;
    std::optional<FAlgebraElement> prev;  // e'_{j-1}
    for (unsigned j = 0; j < chain.codes.size(); ++j) {
        // e'_j = f + e'_{j-1} - f e'_{j-1} generates C_j and commutes with e'_{j-1}.
        const FAlgebraElement& f = *chain.idems[j];
        const FAlgebraElement e = prev ? f + *prev - alg_mul(f, *prev) : f;
        if (!prev) {
            out.push_back(lift_idempotent(e, ring).value);
        } else {
            // Lift e'_j - e'_{j-1} inside the corner ring (1 - eps) RG (1 - eps).
            const RAlgebraElement comp = one - out.back();
            RAlgebraElement d = comp * RAlgebraElement::lift(e - *prev, ring) * comp;
            for (unsigned i = 0; i <= ring->ell() && !d.is_idempotent(); ++i) {
                const RAlgebraElement sq = d * d;
                d = sq.scaled(three) - (sq * d).scaled(two);
            }
            if (!d.is_idempotent()) throw Error(ErrorKind::LiftingFailure, "corner idempotent lifting did not converge");
            out.push_back(out.back() + d);
        }
        if (!(out.back().reduce() == e)) throw Error(ErrorKind::LiftingFailure, "lift does not reduce to its idempotent");
        prev = e;
    }
    return out;
}

RCode build_code_from_chain(const CodeChain& chain, const RingPtr& ring) {
    const std::vector<RAlgebraElement> lifts = compatible_lifts(chain, ring);
    const GroupPtr& group = chain.codes.front().group_ptr();
    RAlgebraElement gen(group, ring);
    for (unsigned j = 0; j < ring->ell(); ++j) gen = gen + lifts[j].scaled(ring->pi_pow(j));
    RCode code = RCode::left_ideal(group, ring, {gen});
    std::size_t expected = 0;
    for (const auto& c : chain.codes) expected += c.dim();
    if (code.log_size() != expected)
        throw Error(ErrorKind::InternalConsistency, "built code has the wrong cardinality");
    return code;
}

RAlgebraElement star_r(const RAlgebraElement& a) {
    std::vector<Scalar> out(a.size());
    for (std::size_t g = 0; g < a.size(); ++g) out[a.group().inv(g)] = a[g];
    return RAlgebraElement(a.group_ptr(), a.ring_ptr(), std::move(out));
}

std::optional<RAlgebraElement> self_orthogonal_lift(const FAlgebraElement& e, const RingPtr& ring) {
    if (ring->ell() != 2) throw Error(ErrorKind::UnsupportedRing, "self-orthogonal lifts are implemented for ell = 2");
    if (e.p() != ring->p()) throw Error(ErrorKind::IncompatibleOperands, "idempotent over the wrong field");
    const Coeff p = e.p();
    const GroupPtr& group = e.group_ptr();
    const std::size_t n = group->order();
    if (!alg_mul(e, star(e)).is_zero()) throw Error(ErrorKind::PreconditionViolation, "e e* must vanish");

    const RAlgebraElement eps = lift_idempotent(e, ring).value;
    const RAlgebraElement prod = eps * star_r(eps);
    if (prod == RAlgebraElement(group, ring)) return eps;
    const FAlgebraElement es = star(e);

    // Conjugating by 1 + pi t changes eps eps* by pi L(t) with
    // L(t) = (t e - e t) e* + e (t e - e t)*; solve L(t) = -alpha_1(eps eps*).
    FpMatrix sys(n, FpRow(n + 1, 0));
    for (std::size_t g = 0; g < n; ++g) {
        const FAlgebraElement t = FAlgebraElement::basis(group, p, g);
        const FAlgebraElement d = alg_mul(t, e) - alg_mul(e, t);
        const FAlgebraElement l = alg_mul(d, es) + alg_mul(e, star(d));
        for (std::size_t x = 0; x < n; ++x) sys[x][g] = l[x];
    }
    for (std::size_t x = 0; x < n; ++x) sys[x][n] = static_cast<Coeff>((p - ring->alpha(prod[x], 1)) % p);
    const auto pivots = rref(sys, p);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    std::vector<Scalar> t(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) t[pivots[i]] = ring->from_int(sys[i][n]);
    const RAlgebraElement pt = RAlgebraElement(group, ring, std::move(t)).scaled(ring->pi_pow(1));
    RAlgebraElement out = eps + pt * eps - eps * pt;
    if (!out.is_idempotent() || !(out.reduce() == e) || !(out * star_r(out) == RAlgebraElement(group, ring)))
        throw Error(ErrorKind::InternalConsistency, "conjugated lift is not a self-orthogonal idempotent");
    return out;
}

RCode build_code_from_lifts(const CodeChain& chain, const std::vector<RAlgebraElement>& lifts) {
    validate_chain(chain);
    if (lifts.size() != chain.codes.size()) throw Error(ErrorKind::InvalidChain, "one lift per layer is required");
    if (!chain.all_projective()) throw Error(ErrorKind::InvalidChain, "every chain layer needs an idempotent");
    const RingPtr& ring = lifts.front().ring_ptr();
    if (!(chain.spec == ring->spec())) throw Error(ErrorKind::InvalidChain, "chain and ring disagree");
    RAlgebraElement gen(lifts.front().group_ptr(), ring);
    for (unsigned j = 0; j < lifts.size(); ++j) {
        if (!lifts[j].is_idempotent() || !(code_from_idempotent(lifts[j].reduce()) == chain.codes[j]))
            throw Error(ErrorKind::InvalidGenerator, "layer " + std::to_string(j) + " lift is not an idempotent generating its layer");
        gen = gen + lifts[j].scaled(ring->pi_pow(j));
    }
    return RCode::left_ideal(lifts.front().group_ptr(), ring, {gen});
}

namespace {

struct HigmanSystem {
    RMatrix m;  // n^2 unknowns by equations
    RRow rhs;
};

HigmanSystem higman_system(const RCode& c) {
    const ChainRing& R = c.ring();
    const FiniteGroup& G = c.group();
    const std::size_t n = c.length();
    const RMatrix& gens = c.rows();
    const RCode dual = dual_code_r(c);
    const RMatrix& checks = dual.rows();
    const std::size_t eq_keep = gens.size() * checks.size();
    const std::size_t eq_trace = gens.size() * n;

    HigmanSystem sys;
    sys.m.assign(n * n, RRow(eq_keep + eq_trace, 0));
    sys.rhs.assign(eq_keep + eq_trace, 0);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t a_inv = G.inv(a);
        for (std::size_t b = 0; b < n; ++b) {
            RRow& row = sys.m[a * n + b];
            std::size_t col = 0;
            // beta(C) <= C: <h, beta(r)> = 0 for every check h and generator r.
            for (const auto& r : gens)
                for (const auto& h : checks) row[col++] = R.mul(h[a], r[b]);
            // (sum_g g beta g^-1)(r)[x] = sum_{a,b} beta[a][b] r[x a^-1 b].
            for (const auto& r : gens)
                for (std::size_t x = 0; x < n; ++x) row[col++] = r[G.mul(G.mul(x, a_inv), b)];
        }
    }
    std::size_t col = eq_keep;
    for (const auto& r : gens)
        for (std::size_t x = 0; x < n; ++x) sys.rhs[col++] = r[x];
    return sys;
}

}  // namespace

std::optional<RMatrix> higman_certificate(const RCode& c) {
    const std::size_t n = c.length();
    if (c.is_zero()) return RMatrix(n, RRow(n, 0));
    const HigmanSystem sys = higman_system(c);
    const auto x = solve_left(c.ring(), sys.m, sys.rhs, sys.rhs.size());
    if (!x) return std::nullopt;
    RMatrix beta(n, RRow(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) beta[a][b] = (*x)[a * n + b];
    return beta;
}

bool check_higman_certificate(const RCode& c, const RMatrix& beta) {
    const std::size_t n = c.length();
    if (beta.size() != n) return false;
    RRow x(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (beta[a].size() != n) return false;
        for (std::size_t b = 0; b < n; ++b) x[a * n + b] = beta[a][b];
    }
    if (c.is_zero()) return true;
    const ChainRing& R = c.ring();
    const HigmanSystem sys = higman_system(c);
    for (std::size_t e = 0; e < sys.rhs.size(); ++e) {
        Scalar acc = 0;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k] && sys.m[k][e]) acc = R.add(acc, R.mul(x[k], sys.m[k][e]));
        if (acc != sys.rhs[e]) return false;
    }
    return true;
}

CodeChain chain_extract(const RCode& c) {
    const ChainRing& R = c.ring();
    const std::size_t n = c.length();
    std::vector<GroupCodeF> codes;
    for (unsigned j = 0; j < R.ell(); ++j) {
        // C ∩ m^j RG = { x in C : pi^(ell-j) x = 0 }.
        RMatrix scaled = c.rows();
        for (auto& r : scaled)
            for (auto& x : r) x = R.mul(R.pi_pow(R.ell() - j), x);
        const HowellForm ker = left_kernel(R, scaled, n);
        FpMatrix layer;
        for (const auto& coef : ker.rows) {
            RRow x(n, 0);
            for (std::size_t i = 0; i < coef.size(); ++i)
                if (coef[i])
                    for (std::size_t g = 0; g < n; ++g) x[g] = R.add(x[g], R.mul(coef[i], c.rows()[i][g]));
            FpRow f(n);
            for (std::size_t g = 0; g < n; ++g) f[g] = R.alpha(x[g], j);
            layer.push_back(std::move(f));
        }
        codes.push_back(GroupCodeF::from_rows(c.group_ptr(), R.p(), std::move(layer)));
    }
    return make_chain(R.spec(), std::move(codes));
}

RelativeProjectiveVerdict decide_relative_projective(const RCode& c, std::size_t higman_max_order) {
    CodeChain chain = chain_extract(c);
    for (unsigned j = 0; j < chain.idems.size(); ++j)
        if (!chain.idems[j]) return VerdictNo{j, "layer " + std::to_string(j) + " is not a projective code"};
    std::size_t total = 0;
    for (const auto& code : chain.codes) total += code.dim();
    if (total != c.log_size()) return VerdictNo{std::nullopt, "layer dimensions do not account for |C|"};
    RCode rebuilt = build_code_from_chain(chain, c.ring_ptr());
    if (rebuilt == c) return VerdictYes{std::move(chain), YesBasis::Rebuilt};
    if (c.length() <= higman_max_order) {
        if (higman_certificate(c)) return VerdictYes{std::move(chain), YesBasis::Higman};
        return VerdictNo{std::nullopt, "Higman's criterion has no solution"};
    }
    return VerdictIndeterminate{std::move(chain), c, std::move(rebuilt)};
}

RCode dual_code_r(const RCode& c) {
    const ChainRing& R = c.ring();
    const std::size_t n = c.length(), m = c.rows().size();
    RMatrix transposed(n, RRow(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t g = 0; g < n; ++g) transposed[g][i] = c.rows()[i][g];
    HowellForm ker = left_kernel(R, transposed, m);
    RCode dual = RCode::from_rows(c.group_ptr(), c.ring_ptr(), std::move(ker.rows));
    if (dual.log_size() + c.log_size() != R.ell() * n)
        throw Error(ErrorKind::InternalConsistency, "|C| |C^perp| != |R|^n");
    return dual;
}

std::optional<std::size_t> min_hamming_r(const RCode& c, HammingMode mode, unsigned budget_log2,
                                         const DistanceOptions& field_opts) {
    if (c.is_zero()) return std::nullopt;
    if (mode == HammingMode::Theorem) {
        const auto verdict = decide_relative_projective(c);
        const auto* yes = std::get_if<VerdictYes>(&verdict);
        if (!yes) throw Error(ErrorKind::PreconditionViolation, "theorem mode needs a relative projective code");
        return min_hamming_distance_f(yes->chain.codes.back(), field_opts);
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    c.for_each_element([&](const std::vector<Scalar>& w) {
        const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Scalar x) { return x; }));
        if (wt && wt < best) best = wt;
    }, budget_log2);
    return best;
}

std::optional<std::size_t> min_hamming_support_scan(const RCode& c) {
    if (c.is_zero()) return std::nullopt;
    const ChainRing& R = c.ring();
    const std::size_t n = c.length(), m = c.rows().size();
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<bool> in_support(n, false);
        std::fill(in_support.end() - static_cast<std::ptrdiff_t>(w), in_support.end(), true);
        do {
            // Coefficient vectors whose combination vanishes off the support.
            RMatrix outside;
            for (std::size_t g = 0; g < n; ++g) {
                if (in_support[g]) continue;
                RRow col(m);
                for (std::size_t i = 0; i < m; ++i) col[i] = c.rows()[i][g];
                outside.push_back(std::move(col));
            }
            RMatrix a(m, RRow(outside.size(), 0));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t t = 0; t < outside.size(); ++t) a[i][t] = outside[t][i];
            const HowellForm ker = left_kernel(R, a, outside.size());
            for (const auto& coef : ker.rows)
                for (std::size_t g = 0; g < n; ++g) {
                    if (!in_support[g]) continue;
                    Scalar x = 0;
                    for (std::size_t i = 0; i < m; ++i) x = R.add(x, R.mul(coef[i], c.rows()[i][g]));
                    if (x) return w;
                }
        } while (std::next_permutation(in_support.begin(), in_support.end()));
    }
    return n;
}

namespace {

std::optional<std::uint64_t> layer_gamma(const RCode& c) {
    const CodeChain chain = chain_extract(c);
    std::optional<std::uint64_t> gamma;
    std::uint64_t scale = 1;
    for (unsigned j = 0; j < chain.codes.size(); ++j, scale *= std::uint64_t{c.ring().p()} * c.ring().p()) {
        const auto d = min_euclidean_weight_f(chain.codes[j]);
        if (!d) continue;
        const std::uint64_t v = scale * *d;
        gamma = gamma ? std::min(*gamma, v) : v;
    }
    return gamma;
}

}  // namespace

std::optional<std::uint64_t> min_euclidean_short_vectors(const RCode& c) {
    const ChainRing& R = c.ring();
    if (!R.is_integer()) throw Error(ErrorKind::UnsupportedRing, "euclidean weight needs Z/p^ell Z");
    if (c.is_zero()) return std::nullopt;
    const std::size_t n = c.length();
    const auto q = static_cast<std::int64_t>(R.size());

    // Upper bound from the generator rows and their pi-multiples.
    std::uint64_t bound = std::numeric_limits<std::uint64_t>::max();
    for (const auto& row : c.rows())
        for (unsigned t = 0; t < R.ell(); ++t) {
            std::uint64_t w = 0;
            bool nonzero = false;
            for (auto x : row) {
                const Scalar y = R.mul(R.pi_pow(t), x);
                nonzero |= y != 0;
                w += R.euclidean_weight(y);
            }
            if (nonzero) bound = std::min(bound, w);
        }

    // Membership: v in C iff every dual row is orthogonal to v.
    const RCode dual = dual_code_r(c);
    const std::size_t h = dual.rows().size();
    std::vector<std::vector<Scalar>> cols(n, std::vector<Scalar>(h));
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t g = 0; g < n; ++g) cols[g][r] = dual.rows()[r][g];

    // Candidate coordinate values ordered by weight: 0, 1, -1, 2, -2, ...
    std::vector<std::pair<Scalar, std::uint64_t>> values;
    for (std::int64_t a = 0; a <= q / 2; ++a) {
        values.emplace_back(static_cast<Scalar>(a), static_cast<std::uint64_t>(a * a));
        if (a != 0 && q - a != a) values.emplace_back(static_cast<Scalar>(q - a), static_cast<std::uint64_t>(a * a));
    }

    std::vector<std::vector<Scalar>> syndrome(n + 1, std::vector<Scalar>(h, 0));
    std::vector<std::size_t> choice(n, 0);
    std::vector<std::uint64_t> norm(n + 1, 0);
    std::size_t depth = 0;
    // Iterative depth-first search over coordinates with norm pruning.
    while (true) {
        if (choice[depth] == values.size() || norm[depth] + values[choice[depth]].second > bound) {
            if (depth == 0) break;
            choice[depth] = 0;
            --depth;
            ++choice[depth];
            continue;
        }
        const auto [val, wt] = values[choice[depth]];
        norm[depth + 1] = norm[depth] + wt;
        for (std::size_t r = 0; r < h; ++r)
            syndrome[depth + 1][r] = R.add(syndrome[depth][r], R.mul(val, cols[depth][r]));
        if (depth + 1 == n) {
            const bool member = std::all_of(syndrome[n].begin(), syndrome[n].end(), [](Scalar s) { return s == 0; });
            if (member && norm[n] > 0 && norm[n] < bound) bound = norm[n];
            ++choice[depth];
        } else {
            ++depth;
        }
    }
    return bound;
}

EuclideanReport euclidean_weights(const RCode& c, unsigned budget_log2) {
    const ChainRing& R = c.ring();
    if (!R.is_integer()) throw Error(ErrorKind::UnsupportedRing, "euclidean weight needs Z/p^ell Z");
    EuclideanReport out;
    out.gamma_bound = layer_gamma(c);
    if (c.is_zero()) return out;
    const double bits = static_cast<double>(c.log_size()) * std::log2(static_cast<double>(R.p()));
    if (bits > budget_log2) {
        out.exhaustive = min_euclidean_short_vectors(c);
        return out;
    }
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    c.for_each_element([&](const std::vector<Scalar>& w) {
        std::uint64_t s = 0;
        for (auto x : w) s += R.euclidean_weight(x);
        if (s && s < best) best = s;
    }, budget_log2);
    out.exhaustive = best;
    return out;
}

}  // namespace chaincodes
