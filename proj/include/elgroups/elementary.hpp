#pragma once

#include <functional>
#include <string>
#include <vector>

#include "form_ring.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "ring.hpp"

namespace elgroups {

/// e_ij(r) = I + r E_ij, inverse I - r E_ij. Indices are 1-based.
inline GroupElement e(std::size_t i, std::size_t j, const RingElement& r, std::size_t n) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw BadIndex("e_ij requires 1 <= i != j <= n");
    const RingPtr& R = r.owner();
    Matrix v = Matrix::identity(R, n);
    v.set(i - 1, j - 1, r);
    Matrix w = Matrix::identity(R, n);
    w.set(i - 1, j - 1, -r);
    return trusted_group_element(std::move(v), std::move(w));
}

inline GroupElement e(std::size_t i, std::size_t j, long r, const RingPtr& R, std::size_t n) {
    return e(i, j, RingElement::from_int(R, r), n);
}

/// A word in elementary generators with formula-based inversion.
struct ElemLetter {
    std::size_t i, j;
    RingElement r;
    int exp = 1;  // +1 or -1
};

class ElemWord {
public:
    ElemWord(RingPtr owner, std::size_t n) : owner_(std::move(owner)), n_(n) {}

    ElemWord& append(std::size_t i, std::size_t j, RingElement r, int exp = 1) {
        if (exp != 1 && exp != -1) throw Error("elementary word exponent must be +-1");
        if (i == j || i < 1 || j < 1 || i > n_ || j > n_)
            throw BadIndex("elementary word letter index out of range");
        letters_.push_back({i, j, std::move(r), exp});
        return *this;
    }

    const std::vector<ElemLetter>& letters() const { return letters_; }
    std::size_t size_n() const { return n_; }
    const RingPtr& owner() const { return owner_; }

    GroupElement evaluate() const {
        GroupElement acc = GroupElement::identity(owner_, n_);
        for (const auto& l : letters_) {
            GroupElement g = e(l.i, l.j, l.r, n_);
            acc = acc * (l.exp == 1 ? g : g.inverted());
        }
        return acc;
    }

    /// The reversed word with inverted letters; e_ij(r)^-1 = e_ij(-r).
    ElemWord inverse_word() const {
        ElemWord w(owner_, n_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back({it->i, it->j, it->r, -it->exp});
        return w;
    }

private:
    RingPtr owner_;
    std::size_t n_;
    std::vector<ElemLetter> letters_;
};

namespace detail {

/// Formula slots for (r, s): one symbolic pass over free rings, exhaustive
/// over finite rings, seeded samples over Z / group rings.
struct SlotPlan {
    bool symbolic = false;
    RingPtr ring;                                   // possibly extended free ring
    std::vector<std::vector<RingElement>> values;   // per slot
};

inline SlotPlan plan_slots(const RingPtr& R, std::size_t nslots, const SampleConfig& cfg) {
    SlotPlan plan;
    plan.ring = R;
    if (R->kind() == RingKind::Free) {
        plan.symbolic = true;
        std::vector<std::string> names = R->generator_names();
        std::size_t k = names.size();
        for (std::size_t s = k; s < nslots; ++s) names.push_back("s" + std::to_string(s + 1));
        if (names.size() != k)
            plan.ring = RingSpec::free_ring(names, R->free_involution(), R->epsilon_sign());
        for (std::size_t s = 0; s < nslots; ++s) {
            std::uint16_t letter =
                static_cast<std::uint16_t>(plan.ring->free_involution() ? 2 * s : s);
            plan.values.push_back({RingElement::generator(plan.ring, letter)});
        }
        return plan;
    }
    for (std::size_t s = 0; s < nslots; ++s)
        plan.values.push_back(slot_samples(R, cfg.trials, cfg.seed, static_cast<int>(s)));
    return plan;
}

inline void for_each_pair(const SlotPlan& p,
                          const std::function<void(const RingElement&, const RingElement&)>& f) {
    for (const auto& a : p.values.at(0))
        for (const auto& b : p.values.at(1)) f(a, b);
}

}  // namespace detail

/// The three commutator formula families for E_n(R):
///   (1) e_ij(r+s) = e_ij(r) e_ij(s)
///   (2) [e_ij(r), e_jk(s)] = e_ik(rs)          (i, j, k distinct)
///   (3) [e_ij(r), e_kl(s)] = I                 (i, j, k, l distinct)
/// over ALL admissible index tuples; symbolic over free rings (a universal
/// proof), exhaustive over finite rings.
inline Report verify_ecom(std::size_t n, const RingPtr& ring, const SampleConfig& cfg = {}) {
    if (n < 3) throw BadIndex("verify_ecom requires n >= 3");
    Report rep;
    detail::SlotPlan plan = detail::plan_slots(ring, 2, cfg);
    const RingPtr& R = plan.ring;

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            bool ok = true;
            std::string w;
            detail::for_each_pair(plan, [&](const RingElement& r, const RingElement& s) {
                if (!ok) return;
                if (e(i, j, r + s, n) != e(i, j, r, n) * e(i, j, s, n)) {
                    ok = false;
                    w = "r=" + r.str() + ", s=" + s.str();
                }
            });
            rep.add("ecom.1.additivity.i" + std::to_string(i) + ".j" + std::to_string(j),
                    cite::elem_commutators, ok, w);
        }

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                bool ok = true;
                std::string w;
                detail::for_each_pair(plan, [&](const RingElement& r, const RingElement& s) {
                    if (!ok) return;
                    if (commutator(e(i, j, r, n), e(j, k, s, n)) != e(i, k, r * s, n)) {
                        ok = false;
                        w = "r=" + r.str() + ", s=" + s.str();
                    }
                });
                rep.add("ecom.2.triple.i" + std::to_string(i) + ".j" + std::to_string(j) +
                            ".k" + std::to_string(k),
                        cite::elem_commutators, ok, w);
            }

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                for (std::size_t l = 1; l <= n; ++l) {
                    if (i == j || k == l) continue;
                    // all four distinct
                    if (i == k || i == l || j == k || j == l) continue;
                    bool ok = true;
                    std::string w;
                    detail::for_each_pair(plan, [&](const RingElement& r, const RingElement& s) {
                        if (!ok) return;
                        if (!commutator(e(i, j, r, n), e(k, l, s, n)).is_identity()) {
                            ok = false;
                            w = "r=" + r.str() + ", s=" + s.str();
                        }
                    });
                    rep.add("ecom.3.disjoint.i" + std::to_string(i) + ".j" + std::to_string(j) +
                                ".k" + std::to_string(k) + ".l" + std::to_string(l),
                            cite::elem_commutators, ok, w);
                }
    rep.sort();
    return rep;
}

/// A_ij: diagonal with -1 in slots i and j, 1 elsewhere; self-inverse.
/// Over characteristic 2 this silently equals I.
inline GroupElement a_diag(std::size_t i, std::size_t j, std::size_t n, const RingPtr& R) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw BadIndex("A_ij requires 1 <= i != j <= n");
    Matrix m = Matrix::identity(R, n);
    m.set(i - 1, i - 1, RingElement::from_int(R, -1));
    m.set(j - 1, j - 1, RingElement::from_int(R, -1));
    return trusted_group_element(m, m);
}

/// The six-factor decomposition showing A_12 lies in E_n(R):
/// e_12(1) e_21(-1) e_12(1) e_12(1) e_21(-1) e_12(1).
inline GroupElement a_diag_decomposition(std::size_t i, std::size_t j, std::size_t n,
                                         const RingPtr& R) {
    return e(i, j, 1, R, n) * e(j, i, -1, R, n) * e(i, j, 1, R, n) * e(i, j, 1, R, n) *
           e(j, i, -1, R, n) * e(i, j, 1, R, n);
}

/// e_12(r) . A . e_12(-r) . A^{-1} = e_12(2r) with A = diag(1,-1,-1,1,...).
inline bool verify_normal_conjugation(std::size_t n, const RingPtr& ring,
                                      const SampleConfig& cfg = {}) {
    if (n < 3) throw BadIndex("verify_normal_conjugation requires n >= 3");
    detail::SlotPlan plan = detail::plan_slots(ring, 1, cfg);
    const RingPtr& R = plan.ring;
    GroupElement A = a_diag(2, 3, n, R);
    for (const auto& r : plan.values.at(0)) {
        GroupElement lhs = e(1, 2, r, n) * A * e(1, 2, -r, n) * A.inverted();
        RingElement two_r = r + r;
        if (lhs != e(1, 2, two_r, n)) return false;
    }
    return true;
}

/// B_i = e_{2i-1,2i}(1) e_{2i,2i-1}(-1) e_{2i-1,2i}(1) e_{2i,2i-1}(-1); order 3.
inline GroupElement b_matrix(std::size_t i, std::size_t n, const RingPtr& R) {
    if (n < 2 || n % 2 != 0) throw BadIndex("b_matrix requires even n");
    if (i < 1 || i > n / 2) throw BadIndex("b_matrix requires 1 <= i <= n/2");
    const std::size_t a = 2 * i - 1, b = 2 * i;
    return e(a, b, 1, R, n) * e(b, a, -1, R, n) * e(a, b, 1, R, n) * e(b, a, -1, R, n);
}

/// [e_32(1), B_1] = e_31(-1) e_32(2) and [e_31(-1) e_32(2), e_12(-1)] = e_32(1).
inline bool verify_b_regeneration(const RingPtr& R, std::size_t n = 4) {
    if (n < 3) throw BadIndex("verify_b_regeneration requires n >= 3");
    GroupElement b1 = n % 2 == 0 ? b_matrix(1, n, R)
                                 : e(1, 2, 1, R, n) * e(2, 1, -1, R, n) * e(1, 2, 1, R, n) *
                                       e(2, 1, -1, R, n);
    GroupElement mid = e(3, 1, -1, R, n) * e(3, 2, 2, R, n);
    if (commutator(e(3, 2, 1, R, n), b1) != mid) return false;
    return commutator(mid, e(1, 2, -1, R, n)) == e(3, 2, 1, R, n);
}

/// Generation of all of E_n(R) from the n root subgroups used for the
/// fixed-point argument: upper entries via nested commutators of
/// superdiagonal generators, lower entries through column n and row n->1.
inline Report verify_generation_identities(std::size_t n, const RingPtr& ring,
                                           const SampleConfig& cfg = {}) {
    if (n < 3) throw BadIndex("verify_generation_identities requires n >= 3");
    Report rep;
    detail::SlotPlan plan = detail::plan_slots(ring, 1, cfg);
    const RingPtr& R = plan.ring;
    const RingElement one = RingElement::one(R);

    // nested tower T(a, j) with T(j-1, j) = e_{j-1,j}(1)
    std::function<GroupElement(std::size_t, std::size_t)> tower =
        [&](std::size_t a, std::size_t j) -> GroupElement {
        if (a + 1 == j) return e(a, j, one, n);
        return commutator(e(a, a + 1, one, n), tower(a + 1, j));
    };

    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            const std::string ij = ".i" + std::to_string(i) + ".j" + std::to_string(j);
            if (j > i + 1) {
                bool flat_ok = true, nest_ok = true;
                std::string w;
                for (const auto& r : plan.values.at(0)) {
                    if (commutator(e(i, i + 1, r, n), e(i + 1, j, one, n)) != e(i, j, r, n))
                        flat_ok = false;
                    if (commutator(e(i, i + 1, r, n), tower(i + 1, j)) != e(i, j, r, n))
                        nest_ok = false;
                    if (!flat_ok || !nest_ok) {
                        w = "r=" + r.str();
                        break;
                    }
                }
                rep.add("generation.upper" + ij, cite::generation, flat_ok, w);
                rep.add("generation.upper-nested" + ij, cite::generation, nest_ok, w);
            }
            // lower-triangular e_ji(r)
            bool low_ok = true;
            bool have_low = false;
            bool nest_ok = true;
            bool have_nest = false;
            std::string w;
            for (const auto& r : plan.values.at(0)) {
                if (j < n) {
                    have_low = true;
                    if (commutator(e(j, n, r, n), e(n, i, one, n)) != e(j, i, r, n))
                        low_ok = false;
                    if (i != 1) {
                        have_nest = true;
                        if (commutator(e(j, n, r, n),
                                       commutator(e(n, 1, one, n), e(1, i, one, n))) !=
                            e(j, i, r, n))
                            nest_ok = false;
                    }
                } else if (i != 1) {  // j == n: e_ni(r) = [e_n1(r), e_1i(1)]
                    have_low = true;
                    if (commutator(e(n, 1, r, n), e(1, i, one, n)) != e(n, i, r, n))
                        low_ok = false;
                }
                if (!low_ok || !nest_ok) {
                    w = "r=" + r.str();
                    break;
                }
            }
            if (have_low) rep.add("generation.lower" + ij, cite::generation, low_ok, w);
            if (have_nest)
                rep.add("generation.lower-nested" + ij, cite::generation, nest_ok, w);
        }
    rep.sort();
    return rep;
}

/// e_12(r) = [e_13(1), e_32(r)], and the witness that U = <e_13(*), e_32(*)>
/// is nilpotent: the commutator e_12(xy) is central in U.
inline bool verify_fuu_linear(const RingPtr& ring, std::size_t n = 3,
                              const SampleConfig& cfg = {}) {
    if (n < 3) throw BadIndex("verify_fuu_linear requires n >= 3");
    detail::SlotPlan plan = detail::plan_slots(ring, 4, cfg);
    const RingPtr& R = plan.ring;
    const RingElement one = RingElement::one(R);
    for (const auto& r : plan.values.at(0))
        if (commutator(e(1, 3, one, n), e(3, 2, r, n)) != e(1, 2, r, n)) return false;
    for (const auto& x : plan.values.at(0))
        for (const auto& y : plan.values.at(1)) {
            GroupElement c = commutator(e(1, 3, x, n), e(3, 2, y, n));
            if (c != e(1, 2, x * y, n)) return false;
            for (const auto& z : plan.values.at(2))
                if (!commutator(c, e(1, 3, z, n)).is_identity()) return false;
            for (const auto& w : plan.values.at(3))
                if (!commutator(c, e(3, 2, w, n)).is_identity()) return false;
        }
    return true;
}

}  // namespace elgroups
