#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "closure.hpp"
#include "elementary.hpp"
#include "form_ring.hpp"
#include "matrix.hpp"
#include "ring.hpp"
#include "unitary.hpp"

namespace elgroups {

/// Right-unimodularity witness: b with sum a_i b_i = 1, found by exhaustive
/// search over R^n.
inline std::optional<std::vector<RingElement>> is_unimodular(
    const std::vector<RingElement>& v, const RingPtr& R) {
    if (!R->is_finite())
        throw Unsupported("is_unimodular requires a finite ring");
    if (v.empty()) return std::nullopt;
    const std::size_t n = v.size();
    const auto elems = ring_elements(R);
    double space = 1;
    for (std::size_t i = 0; i < n; ++i) space *= static_cast<double>(elems.size());
    if (space > 2e7) throw Unsupported("is_unimodular witness space too large");

    std::vector<std::size_t> odo(n, 0);
    const RingElement one = RingElement::one(R);
    for (;;) {
        RingElement sum = RingElement::zero(R);
        for (std::size_t i = 0; i < n; ++i) sum = sum + v[i] * elems[odo[i]];
        if (sum == one) {
            std::vector<RingElement> b;
            for (std::size_t i = 0; i < n; ++i) b.push_back(elems[odo[i]]);
            return b;
        }
        std::size_t k = 0;
        while (k < n && ++odo[k] == elems.size()) odo[k++] = 0;
        if (k == n) return std::nullopt;
    }
}

struct SrResult {
    bool holds = false;
    // first failing unimodular vector, when !holds
    std::optional<std::vector<RingElement>> counterexample;
};

/// Stable range condition sr_m: every right unimodular (m+1)-vector
/// (a_1..a_{m+1}) shortens, i.e. some b makes (a_i + a_{m+1} b_i)_i<=m right
/// unimodular. Exhaustive over finite rings.
inline SrResult check_sr(const RingPtr& R, std::size_t m) {
    if (m < 1) throw BadIndex("check_sr requires m >= 1");
    if (!R->is_finite()) throw Unsupported("check_sr requires a finite ring");
    const auto elems = ring_elements(R);

    std::vector<std::size_t> odo(m + 1, 0);
    for (;;) {
        std::vector<RingElement> a;
        for (std::size_t i = 0; i <= m; ++i) a.push_back(elems[odo[i]]);
        if (is_unimodular(a, R)) {
            bool shortened = false;
            std::vector<std::size_t> bo(m, 0);
            for (;;) {
                std::vector<RingElement> shorter;
                for (std::size_t i = 0; i < m; ++i)
                    shorter.push_back(a[i] + a[m] * elems[bo[i]]);
                if (is_unimodular(shorter, R)) {
                    shortened = true;
                    break;
                }
                std::size_t k = 0;
                while (k < m && ++bo[k] == elems.size()) bo[k++] = 0;
                if (k == m) break;
            }
            if (!shortened) return {false, a};
        }
        std::size_t k = 0;
        while (k <= m && ++odo[k] == elems.size()) odo[k++] = 0;
        if (k == m + 1) return {true, std::nullopt};
    }
}

/// All of Lambda_k over a finite form ring: off-diagonal upper entries range
/// over R (lower mirror forced), diagonal over Lambda.
inline std::vector<Matrix> lambda_k_elements(const FormRing& F, std::size_t k) {
    const RingPtr& R = F.base();
    if (!R->is_finite()) throw Unsupported("Lambda_k enumeration requires a finite ring");
    const auto elems = ring_elements(R);
    const auto lam = F.lambda_elements();
    const std::size_t off = k * (k - 1) / 2;
    double count = 1;
    for (std::size_t i = 0; i < off; ++i) count *= static_cast<double>(elems.size());
    for (std::size_t i = 0; i < k; ++i) count *= static_cast<double>(lam.size());
    if (count > 2e6) throw Unsupported("Lambda_k enumeration too large");

    std::vector<Matrix> out;
    std::vector<std::size_t> odo(off + k, 0);
    for (;;) {
        Matrix g(R, k, k);
        std::size_t t = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                const RingElement& v = elems[odo[t++]];
                g.set(i, j, v);
                g.set(j, i, -(v.star() * F.eps()));
            }
        for (std::size_t i = 0; i < k; ++i) g.set(i, i, lam[odo[off + i]]);
        out.push_back(std::move(g));
        std::size_t x = 0;
        while (x < odo.size() &&
               ++odo[x] == (x < off ? elems.size() : lam.size()))
            odo[x++] = 0;
        if (x == odo.size()) break;
    }
    return out;
}

/// Lambda-stable range condition of Bak-Tang at m: sr_m holds and for every
/// right unimodular 2(m+1)-vector (a, b) some gamma in Lambda_{m+1} makes
/// a + b gamma right unimodular. Exhaustive over finite form rings.
inline SrResult check_lambda_sr(const FormRing& F, std::size_t m) {
    if (m < 1) throw BadIndex("check_lambda_sr requires m >= 1");
    const RingPtr& R = F.base();
    if (!R->is_finite()) throw Unsupported("check_lambda_sr requires a finite ring");
    SrResult sr = check_sr(R, m);
    if (!sr.holds) return sr;

    const auto elems = ring_elements(R);
    const auto gammas = lambda_k_elements(F, m + 1);
    const std::size_t len = 2 * (m + 1);

    std::vector<std::size_t> odo(len, 0);
    for (;;) {
        std::vector<RingElement> v;
        for (std::size_t i = 0; i < len; ++i) v.push_back(elems[odo[i]]);
        if (is_unimodular(v, R)) {
            std::vector<RingElement> a(v.begin(), v.begin() + (m + 1));
            std::vector<RingElement> b(v.begin() + (m + 1), v.end());
            bool fixed = false;
            for (const auto& g : gammas) {
                // a + b gamma, row vector times matrix
                std::vector<RingElement> cand;
                for (std::size_t j = 0; j <= m; ++j) {
                    RingElement s = a[j];
                    for (std::size_t i = 0; i <= m; ++i) s = s + b[i] * g.at(i, j);
                    cand.push_back(s);
                }
                if (is_unimodular(cand, R)) {
                    fixed = true;
                    break;
                }
            }
            if (!fixed) return {false, v};
        }
        std::size_t k = 0;
        while (k < len && ++odo[k] == elems.size()) odo[k++] = 0;
        if (k == len) return {true, std::nullopt};
    }
}

/// e_ij(1) generators of E_n(R); over Z/m their powers give every e_ij(r).
inline std::vector<GroupElement> elementary_generators(const RingPtr& R, std::size_t n) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (i != j) gens.push_back(e(i, j, 1, R, n));
    return gens;
}

/// E_n(R) plus unit dilations diag(u,1,..,1); for the finite commutative
/// rings in the catalog this generates all of GL_n(R).
inline std::vector<GroupElement> general_linear_generators(const RingPtr& R, std::size_t n) {
    std::vector<GroupElement> gens = elementary_generators(R, n);
    for (const auto& u : units_of(R)) {
        if (u.is_one()) continue;
        // locate u^{-1} by exhaustive pairing
        RingElement uinv = RingElement::one(R);
        for (const auto& v : ring_elements(R))
            if (u * v == RingElement::one(R)) {
                uinv = v;
                break;
            }
        Matrix d = Matrix::identity(R, n);
        d.set(0, 0, u);
        Matrix di = Matrix::identity(R, n);
        di.set(0, 0, uinv);
        gens.push_back(GroupElement(d, di));
    }
    return gens;
}

struct K1LevelReport {
    std::size_t n = 0;
    std::size_t gl_order = 0;
    std::size_t e_order = 0;
    std::size_t index = 0;  // [GL_n : E_n]
    bool complete = true;
};

struct K1Report {
    K1LevelReport at_n, at_n1;
    std::size_t unit_count = 0;
    bool index_matches_units = false;
    bool stable = false;  // same index at n and n+1
    bool ok() const { return index_matches_units && stable && at_n.complete && at_n1.complete; }
};

/// K_1 stabilization at desk scale: for finite commutative R and
/// n >= sr(R)+1, [GL_n : E_n] should equal |R*| (the determinant realizes
/// the quotient) and be independent of n.
inline K1Report k1_stabilization_check(const RingPtr& R, std::size_t n,
                                       const ClosureOptions& opts = {}) {
    if (!R->is_finite()) throw Unsupported("k1_stabilization_check requires a finite ring");
    if (n < 2) throw BadIndex("k1_stabilization_check requires n >= 2");
    K1Report rep;
    rep.unit_count = units_of(R).size();
    auto level = [&](std::size_t k) {
        K1LevelReport lv;
        lv.n = k;
        FiniteGroupTable gl = bfs_closure(general_linear_generators(R, k), opts);
        FiniteGroupTable en = bfs_closure(elementary_generators(R, k), opts);
        lv.complete = gl.complete() && en.complete();
        lv.gl_order = gl.size();
        lv.e_order = en.size();
        lv.index = lv.complete && lv.e_order > 0 && lv.gl_order % lv.e_order == 0
                       ? lv.gl_order / lv.e_order
                       : 0;
        return lv;
    };
    rep.at_n = level(n);
    rep.at_n1 = level(n + 1);
    rep.index_matches_units =
        rep.at_n.index == rep.unit_count && rep.at_n1.index == rep.unit_count;
    rep.stable = rep.at_n.index == rep.at_n1.index && rep.at_n.index != 0;
    return rep;
}

/// Generators of EU_2n(R,Lambda) over a finite form ring: all long roots
/// rho_ij(1) and all short roots rho_{i,sigma i}(lambda).
inline std::vector<GroupElement> elementary_unitary_generators(const FormRing& F,
                                                               std::size_t n) {
    const RingPtr& R = F.base();
    if (!R->is_finite()) throw Unsupported("unitary generator enumeration requires a finite ring");
    std::vector<GroupElement> gens;
    for (std::size_t i = 1; i <= 2 * n; ++i)
        for (std::size_t j = 1; j <= 2 * n; ++j) {
            if (i == j || j == sigma(i, n)) continue;
            gens.push_back(rho(i, j, 1, F, n));
        }
    for (std::size_t i = 1; i <= 2 * n; ++i) {
        const auto dom = i > n ? F.lambda_elements() : F.lambda_star_elements();
        for (const auto& l : dom) {
            if (l.is_zero()) continue;
            gens.push_back(rho(i, sigma(i, n), l, F, n));
        }
    }
    return gens;
}

struct KU1LevelReport {
    std::size_t n = 0;
    std::size_t eu_order = 0;
    std::size_t u_order = 0;       // exact when enumerated, else observed
    std::size_t index = 1;         // observed cosets of EU in U
    bool exact = false;            // full matrix-space enumeration used
    bool complete = true;
};

struct KU1Report {
    KU1LevelReport at_n, at_n1;
    bool partial = false;  // any level probe-based or capped
    bool stable = false;
};

/// KU_1 stabilization probe. |U_2n| is enumerated exactly when
/// |R|^(4n^2) <= 2^24 (full matrix space filtered by membership); otherwise
/// the EU table is combined with seeded random membership-passing candidates
/// to probe for extra cosets and the level is marked non-exact.
inline KU1Report ku1_stabilization_probe(const FormRing& F, std::size_t n,
                                         const ClosureOptions& opts = {},
                                         const SampleConfig& cfg = {}) {
    const RingPtr& R = F.base();
    if (!R->is_finite()) throw Unsupported("ku1_stabilization_probe requires a finite ring");
    if (n < 2) throw BadIndex("ku1_stabilization_probe requires n >= 2");

    auto level = [&](std::size_t half) {
        KU1LevelReport lv;
        lv.n = half;
        FiniteGroupTable eu = bfs_closure(elementary_unitary_generators(F, half), opts);
        lv.complete = eu.complete();
        lv.eu_order = eu.size();

        const std::size_t dim = 2 * half;
        double space = 1;
        bool small = true;
        for (std::size_t i = 0; i < dim * dim && small; ++i) {
            space *= static_cast<double>(R->modulus().convert_to<double>());
            if (space > 16777216.0) small = false;
        }
        if (small && lv.complete) {
            lv.exact = true;
            std::size_t count = 0;
            const auto elems = ring_elements(R);
            std::vector<std::size_t> odo(dim * dim, 0);
            Matrix M(R, dim, dim);
            for (;;) {
                std::size_t t = 0;
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j) M.set(i, j, elems[odo[t++]]);
                if (unitary_membership(M, F)) ++count;
                std::size_t k = 0;
                while (k < odo.size() && ++odo[k] == elems.size()) odo[k++] = 0;
                if (k == odo.size()) break;
            }
            lv.u_order = count;
            lv.index = lv.eu_order ? count / lv.eu_order : 0;
            return lv;
        }

        // probe: seeded random matrices filtered by membership; each hit either
        // lands in a known coset of EU or witnesses a new one
        lv.exact = false;
        std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ull + half);
        const std::size_t m = R->modulus().convert_to<std::size_t>();
        std::vector<GroupElement> coset_reps;
        const std::size_t probes = 20000;
        for (std::size_t t = 0; t < probes; ++t) {
            Matrix M(R, dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    M.set(i, j, RingElement::from_int(R, static_cast<long long>(rng() % m)));
            if (!unitary_membership(M, F)) continue;
            if (eu.contains(M)) continue;
            bool known = false;
            for (const auto& rep : coset_reps)
                if (eu.contains(M * rep.inverse())) {
                    known = true;
                    break;
                }
            if (!known) coset_reps.push_back(unitary_inverse(M, F));
        }
        lv.index = 1 + coset_reps.size();
        lv.u_order = lv.eu_order * lv.index;
        return lv;
    };

    KU1Report rep;
    rep.at_n = level(n);
    rep.at_n1 = level(n + 1);
    rep.partial = !rep.at_n.exact || !rep.at_n1.exact || !rep.at_n.complete ||
                  !rep.at_n1.complete;
    rep.stable = rep.at_n.index == rep.at_n1.index;
    return rep;
}

}  // namespace elgroups
