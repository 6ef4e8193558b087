#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "elementary.hpp"
#include "form_ring.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "ring.hpp"

namespace elgroups {

/// sigma k = k+n for k <= n, k-n for k > n (1-based); an involution pairing
/// the two blocks of the hyperbolic space.
inline std::size_t sigma(std::size_t k, std::size_t n) {
    if (k < 1 || k > 2 * n) throw BadIndex("sigma requires 1 <= k <= 2n");
    return k <= n ? k + n : k - n;
}

namespace detail {

/// a' in the long-root formula rho_ij(a) = I + a E_ij - a' E_{sigma j, sigma i}:
/// a* / eps* a* / a* eps / eps* a* eps according to the positions of i, j.
inline RingElement a_prime(const RingElement& a, const FormRing& F, std::size_t i,
                           std::size_t j, std::size_t n) {
    const RingElement es = F.eps().star();
    if (i <= n && j <= n) return a.star();
    if (i <= n && j > n) return es * a.star();
    if (j <= n && i > n) return a.star() * F.eps();
    return es * a.star() * F.eps();
}

}  // namespace detail

/// Elementary unitary matrix. Short roots (j = sigma i): I + a E_{i,sigma i}
/// with a in Lambda when n+1 <= i and a* in Lambda when i <= n. Long roots:
/// rho_ij(a) = rho_{sigma j, sigma i}(-a') = I + a E_ij - a' E_{sigma j, sigma i}.
inline GroupElement rho(std::size_t i, std::size_t j, const RingElement& a,
                        const FormRing& F, std::size_t n) {
    if (i < 1 || j < 1 || i > 2 * n || j > 2 * n || i == j)
        throw BadIndex("rho requires 1 <= i != j <= 2n");
    const RingPtr& R = F.base();
    if (!R->same_ring(*a.owner()))
        throw OwnerMismatch("rho parameter from a different ring");
    if (j == sigma(i, n)) {
        bool ok = i > n ? F.lambda_contains(a) : F.lambda_star_contains(a);
        if (!ok)
            throw LambdaViolation("short root rho_{" + std::to_string(i) + "," +
                                  std::to_string(j) + "}(" + a.str() +
                                  ") violates the Lambda condition over " + F.describe());
        Matrix v = Matrix::identity(R, 2 * n);
        v.set(i - 1, j - 1, a);
        Matrix w = Matrix::identity(R, 2 * n);
        w.set(i - 1, j - 1, -a);
        return trusted_group_element(std::move(v), std::move(w));
    }
    const RingElement ap = detail::a_prime(a, F, i, j, n);
    const std::size_t si = sigma(i, n), sj = sigma(j, n);
    Matrix v = Matrix::identity(R, 2 * n);
    v.set(i - 1, j - 1, a);
    v.set(sj - 1, si - 1, -ap);
    Matrix w = Matrix::identity(R, 2 * n);
    w.set(i - 1, j - 1, -a);
    w.set(sj - 1, si - 1, ap);
    return trusted_group_element(std::move(v), std::move(w));
}

inline GroupElement rho(std::size_t i, std::size_t j, long a, const FormRing& F,
                        std::size_t n) {
    return rho(i, j, RingElement::from_int(F.base(), a), F, n);
}

/// Quadrant view (alpha beta; gamma delta) of a 2n x 2n matrix.
struct UnitaryBlockView {
    Matrix alpha, beta, gamma, delta;

    explicit UnitaryBlockView(const Matrix& M)
        : alpha(M.block(0, 0, M.rows() / 2, M.cols() / 2)),
          beta(M.block(0, M.cols() / 2, M.rows() / 2, M.cols() / 2)),
          gamma(M.block(M.rows() / 2, 0, M.rows() / 2, M.cols() / 2)),
          delta(M.block(M.rows() / 2, M.cols() / 2, M.rows() / 2, M.cols() / 2)) {
        if (M.rows() != M.cols() || M.rows() % 2 != 0)
            throw BadDimension("block view requires an even square matrix");
    }

    Matrix reassemble() const { return Matrix::from_quadrants(alpha, beta, gamma, delta); }
};

/// Membership in U_2n(R,Lambda): alpha* delta + gamma* eps beta = I and
/// alpha* gamma, beta* delta in Lambda_n, with X* the entrywise-star transpose.
inline bool unitary_membership(const Matrix& M, const FormRing& F) {
    if (M.rows() != M.cols() || M.rows() % 2 != 0)
        throw BadDimension("unitary membership requires a 2n x 2n matrix");
    UnitaryBlockView b(M);
    const Matrix as = b.alpha.star();
    Matrix lhs = as * b.delta + b.gamma.star().scaled_right(F.eps()) * b.beta;
    if (!lhs.is_identity()) return false;
    if (!F.lambda_n_contains(as * b.gamma)) return false;
    return F.lambda_n_contains(b.beta.star() * b.delta);
}

/// The block inverse (eps* delta* eps, eps* beta*; gamma* eps, alpha*) of a
/// unitary matrix; membership is required and the result is identity-checked.
inline GroupElement unitary_inverse(const Matrix& M, const FormRing& F) {
    if (!unitary_membership(M, F))
        throw BadInverse("unitary_inverse: matrix fails unitary membership");
    UnitaryBlockView b(M);
    const RingElement eps = F.eps(), es = F.eps().star();
    Matrix inv = Matrix::from_quadrants(b.delta.star().scaled_left(es).scaled_right(eps),
                                        b.beta.star().scaled_left(es),
                                        b.gamma.star().scaled_right(eps), b.alpha.star());
    return GroupElement(M, inv);  // checked constructor
}

/// diag(A, (A*)^-1) = diag(A, (A^-1)*); lands in U_2n for any invertible A.
inline GroupElement hyperbolic_embed(const GroupElement& A, const FormRing& F) {
    if (!F.base()->same_ring(*A.value().owner()))
        throw OwnerMismatch("hyperbolic embedding over a different ring");
    return trusted_group_element(Matrix::direct_sum(A.value(), A.inverse().star()),
                                 Matrix::direct_sum(A.inverse(), A.value().star()));
}

/// C_i = rho_{i,n+i}(1) rho_{n+i,i}(-1) rho_{i,n+i}(1) rho_{n+i,i}(-1);
/// requires 1 in Lambda, has order dividing 3.
inline GroupElement c_matrix(std::size_t i, std::size_t n, const FormRing& F) {
    if (i < 1 || i > n) throw BadIndex("c_matrix requires 1 <= i <= n");
    const RingElement one = RingElement::one(F.base());
    if (!F.lambda_contains(one))
        throw LambdaViolation("c_matrix requires 1 in Lambda, violated over " + F.describe());
    return rho(i, n + i, 1, F, n) * rho(n + i, i, -1, F, n) * rho(i, n + i, 1, F, n) *
           rho(n + i, i, -1, F, n);
}

namespace detail {

/// Slot values for unitary suites. Unconstrained slots: letters (free) or
/// ring samples. Lambda-constrained slots over a free involutive base use
/// the generic member y - y* eps of R^eps (the universal point for every
/// form parameter); finite rings filter by the exact sidedness condition.
struct USlots {
    bool symbolic = false;
    FormRing form;
    std::vector<RingElement> free_a;    // unconstrained samples
    std::vector<RingElement> lam;       // a in Lambda
    std::vector<RingElement> lam_star;  // a* in Lambda
};

inline USlots unitary_slots(const FormRing& F, const SampleConfig& cfg) {
    const RingPtr& R = F.base();
    if (R->kind() == RingKind::Free) {
        if (!R->free_involution())
            throw Unsupported("unitary suites over a free ring require an involution");
        std::vector<std::string> names = R->generator_names();
        while (names.size() < 2) names.push_back("s" + std::to_string(names.size() + 1));
        RingPtr ext = names.size() == R->generator_names().size()
                          ? R
                          : RingSpec::free_ring(names, true, R->epsilon_sign());
        FormRing Fe(ext, F.epsilon_sign(), F.strategy());
        RingElement a = RingElement::generator(ext, 0);
        RingElement y = RingElement::generator(ext, 2);
        RingElement generic = Fe.r_eps_of(y);  // y - y* eps
        USlots s{true, Fe, {a}, {generic}, {generic}};
        return s;
    }
    USlots s{false, F, {}, {}, {}};
    if (R->is_finite()) {
        s.free_a = ring_elements(R);
        s.lam = F.lambda_elements();
        s.lam_star = F.lambda_star_elements();
        return s;
    }
    s.free_a = slot_samples(R, cfg.trials, cfg.seed, 0);
    std::vector<RingElement> pool = slot_samples(R, cfg.trials, cfg.seed, 1);
    for (long c : {0L, 1L, -1L, 2L}) pool.push_back(RingElement::from_int(R, c));
    const std::size_t base_count = pool.size();
    for (std::size_t k = 0; k < base_count; ++k)
        pool.push_back(F.r_eps_of(pool[k]));  // guaranteed members keep the domains nonempty
    for (const auto& x : pool) {
        try {
            if (F.lambda_contains(x)) s.lam.push_back(x);
        } catch (const UndecidableStrategy&) {
        }
        try {
            if (F.lambda_star_contains(x)) s.lam_star.push_back(x);
        } catch (const UndecidableStrategy&) {
        }
    }
    if (s.lam.empty() || s.lam_star.empty())
        throw UndecidableStrategy("no decidable Lambda samples over " + F.describe());
    return s;
}

}  // namespace detail

/// The four commutator families for elementary unitary matrices, over all
/// admissible index tuples and all case branches:
///   (1) rho_ij(a+b) = rho_ij(a) rho_ij(b)
///   (2) [rho_ij(a), rho_jk(b)] = rho_ik(ab)        (i,j,k,si,sj,sk distinct)
///   (3) [rho_ij(a), rho_{j,si}(b)] = rho_{i,si}(ab - c),
///         c = b* a* eps (n+1 <= i), c = eps* b* a* (i <= n)
///   (4) [rho_ij(a), rho_{j,sj}(b)] = rho_{i,sj}(ab) rho_{i,si}(c),
///         (b* in Lambda, c = a b a*)        for i,j <= n
///         (b* in Lambda, c = a b a* eps)    for j <= n < i
///         (b  in Lambda, c = -a b* a*)      for i <= n < j
///         (b  in Lambda, c = -a b* a* eps)  for n+1 <= i,j
inline Report verify_ucom(std::size_t n, const FormRing& F, const SampleConfig& cfg = {}) {
    if (n < 3) throw BadIndex("verify_ucom requires n >= 3");
    Report rep;
    detail::USlots slots = detail::unitary_slots(F, cfg);
    const FormRing& G = slots.form;
    const RingElement eps = G.eps(), es = G.eps().star();
    const std::size_t N = 2 * n;

    auto pos_tag = [&](std::size_t i, std::size_t j) {
        if (i <= n && j <= n) return std::string("i,j<=n");
        if (i <= n && j > n) return std::string("i<=n<j");
        if (j <= n && i > n) return std::string("j<=n<i");
        return std::string("n+1<=i,j");
    };

    // (1) additivity: long roots over free a,b; short roots over Lambda-sided slots
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j) {
            if (i == j) continue;
            const bool is_short = j == sigma(i, n);
            const auto& dom = is_short ? (i > n ? slots.lam : slots.lam_star) : slots.free_a;
            bool ok = true;
            std::string w;
            for (const auto& a : dom) {
                for (const auto& b : dom) {
                    if (rho(i, j, a + b, G, n) != rho(i, j, a, G, n) * rho(i, j, b, G, n)) {
                        ok = false;
                        w = "a=" + a.str() + ", b=" + b.str();
                        break;
                    }
                }
                if (!ok) break;
            }
            rep.add("ucom.1.additivity.i" + std::to_string(i) + ".j" + std::to_string(j) +
                        (is_short ? ".short" : ".long." + pos_tag(i, j)),
                    cite::unitary_commutators, ok, w);
        }

    // (2)
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j)
            for (std::size_t k = 1; k <= N; ++k) {
                if (i == j || j == k || i == k) continue;
                const std::size_t si = sigma(i, n), sj = sigma(j, n), sk = sigma(k, n);
                if (si == j || si == k || sj == i || sj == k || sk == i || sk == j) continue;
                bool ok = true;
                std::string w;
                for (const auto& a : slots.free_a) {
                    for (const auto& b : slots.free_a) {
                        if (commutator(rho(i, j, a, G, n), rho(j, k, b, G, n)) !=
                            rho(i, k, a * b, G, n)) {
                            ok = false;
                            w = "a=" + a.str() + ", b=" + b.str();
                            break;
                        }
                    }
                    if (!ok) break;
                }
                rep.add("ucom.2.triple.i" + std::to_string(i) + ".j" + std::to_string(j) +
                            ".k" + std::to_string(k),
                        cite::unitary_commutators, ok, w);
            }

    // (3)
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j) {
            if (i == j || j == sigma(i, n)) continue;
            const std::size_t si = sigma(i, n);
            bool ok = true;
            std::string w;
            for (const auto& a : slots.free_a) {
                for (const auto& b : slots.free_a) {
                    RingElement c = i > n ? b.star() * a.star() * eps : es * b.star() * a.star();
                    try {
                        if (commutator(rho(i, j, a, G, n), rho(j, si, b, G, n)) !=
                            rho(i, si, a * b - c, G, n)) {
                            ok = false;
                            w = "a=" + a.str() + ", b=" + b.str();
                        }
                    } catch (const LambdaViolation& ex) {
                        ok = false;
                        w = std::string("lambda violation: ") + ex.what();
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
            rep.add("ucom.3.short-product.i" + std::to_string(i) + ".j" + std::to_string(j) +
                        (i > n ? ".c=b*a*eps" : ".c=eps*b*a*"),
                    cite::unitary_commutators, ok, w);
        }

    // (4)
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j) {
            if (i == j || j == sigma(i, n)) continue;
            const std::size_t si = sigma(i, n), sj = sigma(j, n);
            const bool b_starred = j <= n;  // b* in Lambda for j <= n, b in Lambda otherwise
            const auto& dom = b_starred ? slots.lam_star : slots.lam;
            bool ok = true;
            std::string w;
            for (const auto& a : slots.free_a) {
                for (const auto& b : dom) {
                    RingElement c = RingElement::zero(G.base());
                    if (i <= n && j <= n)
                        c = a * b * a.star();
                    else if (j <= n && i > n)
                        c = a * b * a.star() * eps;
                    else if (i <= n && j > n)
                        c = -(a * b.star() * a.star());
                    else
                        c = -(a * b.star() * a.star() * eps);
                    try {
                        if (commutator(rho(i, j, a, G, n), rho(j, sj, b, G, n)) !=
                            rho(i, sj, a * b, G, n) * rho(i, si, c, G, n)) {
                            ok = false;
                            w = "a=" + a.str() + ", b=" + b.str();
                        }
                    } catch (const LambdaViolation& ex) {
                        ok = false;
                        w = std::string("lambda violation: ") + ex.what();
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
            rep.add("ucom.4.short-factor.i" + std::to_string(i) + ".j" + std::to_string(j) +
                        "." + pos_tag(i, j),
                    cite::unitary_commutators, ok, w);
        }
    rep.sort();
    return rep;
}

/// rho_{1,n+1}(r) = rho_{1,n+2}(-r) [rho_12(1), rho_{2,n+2}(r)]
///                = [rho_13(1), rho_{3,n+2}(-r)] [rho_12(1), rho_{2,n+2}(r)]
/// for r with r in Lambda*.
inline bool verify_fuu_unitary(std::size_t n, const FormRing& F, const SampleConfig& cfg = {}) {
    if (n < 3) throw BadIndex("verify_fuu_unitary requires n >= 3");
    detail::USlots slots = detail::unitary_slots(F, cfg);
    const FormRing& G = slots.form;
    for (const auto& r : slots.lam_star) {
        GroupElement lhs = rho(1, n + 1, r, G, n);
        GroupElement inner = commutator(rho(1, 2, 1, G, n), rho(2, n + 2, r, G, n));
        if (lhs != rho(1, n + 2, -r, G, n) * inner) return false;
        if (lhs != commutator(rho(1, 3, 1, G, n), rho(3, n + 2, -r, G, n)) * inner)
            return false;
    }
    return true;
}

/// The Gamma-subgroup identities and companions:
///   rho_{n,2n-1}(r) rho_{n,2n}(x)
///     = rho_{n,2n-1}(r-x) [rho_{n,n-1}(1), rho_{n-1,2n-1}(x)]
///     = [rho_{n1}(r-x), rho_{1,2n-1}(1)] [rho_{n,n-1}(1), rho_{n-1,2n-1}(x)]
///   rho_{i,2n}(r) = [rho_{i,n-1}(1), rho_{n-1,2n}(r)]   (1 <= i <= n-2)
///   rho_{ij}(r)   = [rho_{in}(1), rho_{nj}(r)]          (i < n < j < 2n, j != n+i)
/// with x ranging over Lambda*.
inline bool verify_gamma_identities(std::size_t n, const FormRing& F,
                                    const SampleConfig& cfg = {}) {
    if (n < 3) throw BadIndex("verify_gamma_identities requires n >= 3");
    detail::USlots slots = detail::unitary_slots(F, cfg);
    const FormRing& G = slots.form;
    for (const auto& r : slots.free_a)
        for (const auto& x : slots.lam_star) {
            GroupElement lhs = rho(n, 2 * n - 1, r, G, n) * rho(n, 2 * n, x, G, n);
            GroupElement bracket =
                commutator(rho(n, n - 1, 1, G, n), rho(n - 1, 2 * n - 1, x, G, n));
            if (lhs != rho(n, 2 * n - 1, r - x, G, n) * bracket) return false;
            if (lhs != commutator(rho(n, 1, r - x, G, n), rho(1, 2 * n - 1, 1, G, n)) * bracket)
                return false;
        }
    for (const auto& r : slots.free_a) {
        for (std::size_t i = 1; i + 1 < n; ++i)
            if (rho(i, 2 * n, r, G, n) !=
                commutator(rho(i, n - 1, 1, G, n), rho(n - 1, 2 * n, r, G, n)))
                return false;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = n + 1; j < 2 * n; ++j) {
                if (j == n + i) continue;
                if (rho(i, j, r, G, n) != commutator(rho(i, n, 1, G, n), rho(n, j, r, G, n)))
                    return false;
            }
    }
    return true;
}

/// Duality rho_{i,2n}(r) = rho_{n,n+i}(-eps* r*) for 1 <= i < n.
inline bool verify_row_column_duality(std::size_t n, const FormRing& F,
                                      const SampleConfig& cfg = {}) {
    if (n < 2) throw BadIndex("verify_row_column_duality requires n >= 2");
    detail::USlots slots = detail::unitary_slots(F, cfg);
    const FormRing& G = slots.form;
    const RingElement es = G.eps().star();
    for (const auto& r : slots.free_a)
        for (std::size_t i = 1; i < n; ++i)
            if (rho(i, 2 * n, r, G, n) != rho(n, n + i, -(es * r.star()), G, n)) return false;
    return true;
}

}  // namespace elgroups
