#pragma once

#include <string>
#include <vector>

#include "elementary.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "ring.hpp"

namespace elgroups {

/// A word in the Steinberg symbols x_ij(r). The group St_n(R) is presented
/// by St1-St3; this module only evaluates words through the surjection
/// x_ij(r) -> e_ij(r) and certifies that the relations hold under it. The
/// word problem (kernel membership) is out of scope.
struct StLetter {
    std::size_t i, j;
    RingElement r;
    int exp = 1;
};

class StWord {
public:
    StWord(RingPtr owner, std::size_t n) : owner_(std::move(owner)), n_(n) {
        if (n < 3) throw BadIndex("Steinberg words require n >= 3");
    }

    StWord& append(std::size_t i, std::size_t j, RingElement r, int exp = 1) {
        if (exp != 1 && exp != -1) throw Error("Steinberg letter exponent must be +-1");
        if (i == j || i < 1 || j < 1 || i > n_ || j > n_)
            throw BadIndex("Steinberg letter index out of range");
        if (!owner_->same_ring(*r.owner()))
            throw OwnerMismatch("Steinberg letter parameter from a different ring");
        letters_.push_back({i, j, std::move(r), exp});
        return *this;
    }

    const std::vector<StLetter>& letters() const { return letters_; }
    std::size_t size_n() const { return n_; }
    const RingPtr& owner() const { return owner_; }

    StWord concat(const StWord& o) const {
        StWord w = *this;
        w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
        return w;
    }

private:
    RingPtr owner_;
    std::size_t n_;
    std::vector<StLetter> letters_;
};

/// The surjection St_n(R) -> E_n(R).
inline GroupElement st_evaluate(const StWord& w) {
    GroupElement acc = GroupElement::identity(w.owner(), w.size_n());
    for (const auto& l : w.letters()) {
        GroupElement g = e(l.i, l.j, l.r, w.size_n());
        acc = acc * (l.exp == 1 ? g : g.inverted());
    }
    return acc;
}

/// Removes zero-parameter letters and adjacent exact inverse pairs until
/// stable. Merging x_ij(r) x_ij(s) is a St1 rewrite, not free reduction,
/// and is deliberately not performed.
inline StWord st_free_reduce(const StWord& w) {
    std::vector<StLetter> out;
    for (const auto& l : w.letters()) {
        if (l.r.is_zero()) continue;
        if (!out.empty()) {
            const StLetter& p = out.back();
            if (p.i == l.i && p.j == l.j && p.r == l.r && p.exp == -l.exp) {
                out.pop_back();
                continue;
            }
        }
        out.push_back(l);
    }
    StWord r(w.owner(), w.size_n());
    for (auto& l : out) r.append(l.i, l.j, l.r, l.exp);
    return r;
}

/// Relation consistency of St1-St3 under the evaluation map, i.e. the
/// well-definedness of the surjection onto E_n(R):
///   St1: x_ij(r+s) = x_ij(r) x_ij(s)
///   St2: [x_ij(r), x_jk(s)] = x_ik(rs)  for i != k
///   St3: [x_ij(r), x_kl(s)] = 1         for i != l, j != k
inline Report verify_st_relations(std::size_t n, const RingPtr& ring,
                                  const SampleConfig& cfg = {}) {
    if (n < 3) throw BadIndex("verify_st_relations requires n >= 3");
    Report rep;
    detail::SlotPlan plan = detail::plan_slots(ring, 2, cfg);
    const RingPtr& R = plan.ring;

    auto eval_comm = [&](std::size_t i, std::size_t j, const RingElement& r, std::size_t k,
                         std::size_t l, const RingElement& s) {
        StWord w(R, n);
        w.append(i, j, r).append(k, l, s).append(i, j, r, -1).append(k, l, s, -1);
        return st_evaluate(w);
    };

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            bool ok = true;
            std::string w;
            detail::for_each_pair(plan, [&](const RingElement& r, const RingElement& s) {
                if (!ok) return;
                StWord lhs(R, n), rhs(R, n);
                lhs.append(i, j, r + s);
                rhs.append(i, j, r).append(i, j, s);
                if (st_evaluate(lhs) != st_evaluate(rhs)) {
                    ok = false;
                    w = "r=" + r.str() + ", s=" + s.str();
                }
            });
            rep.add("st.1.additivity.i" + std::to_string(i) + ".j" + std::to_string(j),
                    cite::steinberg_relations, ok, w);
        }

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                bool ok = true;
                std::string w;
                detail::for_each_pair(plan, [&](const RingElement& r, const RingElement& s) {
                    if (!ok) return;
                    if (eval_comm(i, j, r, j, k, s) != e(i, k, r * s, n)) {
                        ok = false;
                        w = "r=" + r.str() + ", s=" + s.str();
                    }
                });
                rep.add("st.2.triple.i" + std::to_string(i) + ".j" + std::to_string(j) + ".k" +
                            std::to_string(k),
                        cite::steinberg_relations, ok, w);
            }

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                for (std::size_t l = 1; l <= n; ++l) {
                    if (i == j || k == l) continue;
                    if (i == l || j == k) continue;  // St3 admits i=k and j=l
                    bool ok = true;
                    std::string w;
                    detail::for_each_pair(plan, [&](const RingElement& r, const RingElement& s) {
                        if (!ok) return;
                        if (!eval_comm(i, j, r, k, l, s).is_identity()) {
                            ok = false;
                            w = "r=" + r.str() + ", s=" + s.str();
                        }
                    });
                    rep.add("st.3.disjoint.i" + std::to_string(i) + ".j" + std::to_string(j) +
                                ".k" + std::to_string(k) + ".l" + std::to_string(l),
                            cite::steinberg_relations, ok, w);
                }
    rep.sort();
    return rep;
}

}  // namespace elgroups
