#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "closure.hpp"
#include "elementary.hpp"
#include "form_ring.hpp"
#include "json_io.hpp"
#include "report.hpp"
#include "ring.hpp"
#include "stable_range.hpp"
#include "steinberg.hpp"
#include "unitary.hpp"

namespace elgroups {

/// One CLI/test invocation: which suite, over which ring or form ring, at
/// which size, with deterministic sampling knobs. A fixed config (including
/// seed) yields a byte-identical JSON report.
struct SuiteConfig {
    std::string suite;
    std::optional<RingPtr> ring;
    std::optional<FormRing> form;
    std::size_t n = 3;
    std::size_t m = 1;              // stable range index
    SampleConfig sample;
    std::size_t cap = 5'000'000;
    std::vector<std::string> seeds; // matrix json or e(i,j,lit) literals, normal-closure only
};

namespace detail {

inline void timed(Report& rep, const std::string& id, const std::string& citation,
                  const std::function<bool(std::string&)>& run) {
    std::string witness;
    auto t0 = std::chrono::steady_clock::now();
    CheckStatus st;
    try {
        st = run(witness) ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const Error& e) {
        st = CheckStatus::Fail;
        witness = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.add_status(id, citation, st, witness);
    rep.checks.back().wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
}

inline RingPtr suite_ring(const SuiteConfig& cfg) {
    if (cfg.ring) return *cfg.ring;
    if (cfg.form) return cfg.form->base();
    throw ParseError("suite requires --ring or --form");
}

inline FormRing suite_form(const SuiteConfig& cfg) {
    if (cfg.form) return *cfg.form;
    throw ParseError("suite requires --form");
}

inline GroupElement parse_seed(const std::string& text, const RingPtr& R, std::size_t n) {
    if (!text.empty() && text[0] == '{') {
        Matrix m = matrix_from_json(json::parse(text), R);
        Matrix mi = matrix_from_json(json::parse(text), R);
        return GroupElement(m, mi);  // requires self-inverse matrix input
    }
    // "e(i,j,literal)"
    if (text.size() > 2 && text[0] == 'e' && text[1] == '(') {
        std::string body = text.substr(2, text.size() - 3);
        auto c1 = body.find(',');
        auto c2 = body.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParseError("seed literal must be e(i,j,element): " + text);
        std::size_t i = std::stoul(body.substr(0, c1));
        std::size_t j = std::stoul(body.substr(c1 + 1, c2 - c1 - 1));
        return e(i, j, parse_element(R, body.substr(c2 + 1)), n);
    }
    throw ParseError("seed must be a matrix json object or e(i,j,element): " + text);
}

}  // namespace detail

inline Report run_prop_suite(std::size_t n, const RingPtr& R, std::size_t cap) {
    Report rep;
    detail::timed(rep, "prop.a12-six-factor-decomposition", cite::diag_involutions,
                  [&](std::string&) {
                      return a_diag(1, 2, n, R) == a_diag_decomposition(1, 2, n, R);
                  });
    detail::timed(rep, "prop.family-self-inverse", cite::diag_involutions, [&](std::string& w) {
        for (std::size_t i = 1; i < n; ++i) {
            GroupElement a = a_diag(i, i + 1, n, R);
            if (!(a * a).is_identity()) {
                w = "i=" + std::to_string(i);
                return false;
            }
        }
        return true;
    });
    detail::timed(rep, "prop.family-commutes", cite::diag_involutions, [&](std::string& w) {
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                if (!commutator(a_diag(i, i + 1, n, R), a_diag(j, j + 1, n, R))
                         .is_identity()) {
                    w = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
                    return false;
                }
        return true;
    });
    detail::timed(rep, "prop.closure-order", cite::diag_involutions, [&](std::string& w) {
        std::vector<GroupElement> gens;
        for (std::size_t i = 1; i < n; ++i) gens.push_back(a_diag(i, i + 1, n, R));
        FiniteGroupTable t = bfs_closure(gens, {cap});
        std::size_t expect = 1;
        if (R->characteristic() != 2)
            for (std::size_t i = 1; i < n; ++i) expect *= 2;
        w = "order " + std::to_string(t.size()) + ", expected " + std::to_string(expect);
        return t.complete() && t.size() == expect;
    });
    rep.sort();
    return rep;
}

inline Report run_b_suite(std::size_t n_even, const RingPtr& R, std::size_t cap) {
    Report rep;
    detail::timed(rep, "b.top-left-block", cite::order3_linear, [&](std::string& w) {
        GroupElement b1 = b_matrix(1, n_even, R);
        Matrix expect = Matrix::identity(R, n_even);
        expect.set(0, 0, RingElement::from_int(R, -1));
        expect.set(0, 1, RingElement::from_int(R, 1));
        expect.set(1, 0, RingElement::from_int(R, -1));
        expect.set(1, 1, RingElement::from_int(R, 0));
        w = "B1 block vs [[-1,1],[-1,0]]";
        return b1.value() == expect;
    });
    detail::timed(rep, "b.order-three", cite::order3_linear, [&](std::string& w) {
        for (std::size_t i = 1; i <= n_even / 2; ++i) {
            GroupElement b = b_matrix(i, n_even, R);
            if (!(b * b * b).is_identity()) {
                w = "i=" + std::to_string(i);
                return false;
            }
        }
        return true;
    });
    detail::timed(rep, "b.pairwise-commute", cite::order3_linear, [&](std::string& w) {
        for (std::size_t i = 1; i <= n_even / 2; ++i)
            for (std::size_t j = 1; j <= n_even / 2; ++j)
                if (!commutator(b_matrix(i, n_even, R), b_matrix(j, n_even, R))
                         .is_identity()) {
                    w = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
                    return false;
                }
        return true;
    });
    detail::timed(rep, "b.regeneration-identities", cite::order3_linear,
                  [&](std::string&) { return verify_b_regeneration(R, n_even); });
    if (n_even >= 4) {
        detail::timed(rep, "b.pair-closure-order-9", cite::order3_linear, [&](std::string& w) {
            FiniteGroupTable t =
                bfs_closure({b_matrix(1, n_even, R), b_matrix(2, n_even, R)}, {cap});
            w = "order " + std::to_string(t.size());
            return t.complete() && t.size() == 9;
        });
    }
    rep.sort();
    return rep;
}

inline Report run_c_suite(std::size_t n, const FormRing& F, std::size_t cap) {
    Report rep;
    detail::timed(rep, "c.order-three", cite::order3_unitary, [&](std::string& w) {
        for (std::size_t i = 1; i <= n; ++i) {
            GroupElement c = c_matrix(i, n, F);
            if (!(c * c * c).is_identity()) {
                w = "i=" + std::to_string(i);
                return false;
            }
            if (!unitary_membership(c.value(), F)) {
                w = "membership failed at i=" + std::to_string(i);
                return false;
            }
        }
        return true;
    });
    if (n >= 2) {
        detail::timed(rep, "c.pair-closure-order-9", cite::order3_unitary, [&](std::string& w) {
            FiniteGroupTable t = bfs_closure({c_matrix(1, n, F), c_matrix(2, n, F)}, {cap});
            w = "order " + std::to_string(t.size());
            return t.complete() && t.size() == 9;
        });
    }
    rep.sort();
    return rep;
}

inline Report run_embed_suite(std::size_t n, const FormRing& F, const SampleConfig& sample) {
    Report rep;
    const RingPtr& R = F.base();
    detail::timed(rep, "embed.identity", cite::hyperbolic, [&](std::string&) {
        return hyperbolic_embed(GroupElement::identity(R, n), F).is_identity();
    });
    detail::timed(rep, "embed.membership", cite::hyperbolic, [&](std::string& w) {
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                if (i == j) continue;
                GroupElement g = hyperbolic_embed(e(i, j, 1, R, n), F);
                if (!unitary_membership(g.value(), F)) {
                    w = "e(" + std::to_string(i) + "," + std::to_string(j) + ",1)";
                    return false;
                }
            }
        return true;
    });
    detail::timed(rep, "embed.homomorphism", cite::hyperbolic, [&](std::string& w) {
        auto vals = detail::slot_samples(R->is_finite() ? R : R, sample.trials,
                                         sample.seed, 3);
        std::size_t checked = 0;
        for (const auto& x : vals)
            for (const auto& y : vals) {
                GroupElement A = e(1, 2, x, n), B = e(2, 1, y, n);
                if (hyperbolic_embed(A * B, F) !=
                    hyperbolic_embed(A, F) * hyperbolic_embed(B, F)) {
                    w = "x=" + x.str() + ", y=" + y.str();
                    return false;
                }
                if (++checked > 64) return true;
            }
        return true;
    });
    rep.sort();
    return rep;
}

inline Report run_membership_inverse_suite(std::size_t n, const FormRing& F,
                                           const SampleConfig& sample, std::size_t products) {
    Report rep;
    detail::timed(rep, "unitary.generators-pass-membership", cite::unitary_group,
                  [&](std::string& w) {
                      detail::USlots slots = detail::unitary_slots(F, sample);
                      const FormRing& G = slots.form;
                      for (std::size_t i = 1; i <= 2 * n; ++i)
                          for (std::size_t j = 1; j <= 2 * n; ++j) {
                              if (i == j) continue;
                              const bool is_short = j == sigma(i, n);
                              const auto& dom =
                                  is_short ? (i > n ? slots.lam : slots.lam_star)
                                           : slots.free_a;
                              for (const auto& a : dom) {
                                  GroupElement g = rho(i, j, a, G, n);
                                  if (!unitary_membership(g.value(), G)) {
                                      w = "rho(" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + a.str() + ")";
                                      return false;
                                  }
                              }
                          }
                      return true;
                  });
    detail::timed(rep, "unitary.duality-both-readings", cite::unitary_group,
                  [&](std::string& w) {
                      detail::USlots slots = detail::unitary_slots(F, sample);
                      const FormRing& G = slots.form;
                      for (std::size_t i = 1; i <= 2 * n; ++i)
                          for (std::size_t j = 1; j <= 2 * n; ++j) {
                              if (i == j || j == sigma(i, n)) continue;
                              for (const auto& a : slots.free_a) {
                                  RingElement ap = detail::a_prime(a, G, i, j, n);
                                  if (rho(i, j, a, G, n) !=
                                      rho(sigma(j, n), sigma(i, n), -ap, G, n)) {
                                      w = "rho(" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + a.str() + ")";
                                      return false;
                                  }
                              }
                          }
                      return true;
                  });
    detail::timed(
        rep, "unitary.inverse-formula-random-products", cite::unitary_group,
        [&](std::string& w) {
            if (!F.base()->is_finite()) {
                w = "skipped: random products need a finite ring";
                return true;
            }
            std::mt19937_64 rng(sample.seed * 0x9e3779b97f4a7c15ull + 17);
            std::vector<GroupElement> gens = elementary_unitary_generators(F, n);
            for (std::size_t t = 0; t < products; ++t) {
                GroupElement g = GroupElement::identity(F.base(), 2 * n);
                for (int k = 0; k < 5; ++k) g = g * gens[rng() % gens.size()];
                if (!unitary_membership(g.value(), F)) {
                    w = "product " + std::to_string(t) + " failed membership";
                    return false;
                }
                GroupElement inv = unitary_inverse(g.value(), F);  // identity-checked
                if (inv.inverse() != g.inverse()) {
                    w = "product " + std::to_string(t) + ": formula inverse differs";
                    return false;
                }
            }
            return true;
        });
    rep.sort();
    return rep;
}

/// Dispatch a named suite. Verification verbs return per-identity reports;
/// oracle verbs (closure, k1, ...) return summary records.
inline Report run_suite(const SuiteConfig& cfg) {
    Report rep;
    const std::string& s = cfg.suite;
    const SampleConfig& smp = cfg.sample;

    auto add_elementary = [&](const RingPtr& R) {
        if (s == "ecom" || s == "all") rep.merge(verify_ecom(cfg.n, R, smp));
        if (s == "prop" || s == "all") rep.merge(run_prop_suite(cfg.n, R, cfg.cap));
        if (s == "normal-conj" || s == "all")
            detail::timed(rep, "normal-conj", cite::relative_subgroup, [&](std::string&) {
                return verify_normal_conjugation(cfg.n, R, smp);
            });
        if (s == "b-identities" || s == "all")
            rep.merge(run_b_suite(cfg.n % 2 == 0 ? cfg.n : cfg.n + 1, R, cfg.cap));
        if (s == "generation" || s == "all")
            rep.merge(verify_generation_identities(cfg.n, R, smp));
        if (s == "fuu" || s == "all")
            detail::timed(rep, "fuu.linear", cite::nilpotent_witness, [&](std::string&) {
                return verify_fuu_linear(R, cfg.n, smp);
            });
        if (s == "st" || s == "all") rep.merge(verify_st_relations(cfg.n, R, smp));
    };

    auto add_unitary = [&](const FormRing& F) {
        if (s == "ucom" || s == "all") rep.merge(verify_ucom(cfg.n, F, smp));
        if (s == "fuu-unitary" || s == "all")
            detail::timed(rep, "fuu.unitary", cite::nilpotent_witness,
                          [&](std::string&) { return verify_fuu_unitary(cfg.n, F, smp); });
        if (s == "gamma" || s == "all") {
            detail::timed(rep, "gamma.identities", cite::generation,
                          [&](std::string&) { return verify_gamma_identities(cfg.n, F, smp); });
            detail::timed(rep, "gamma.row-column-duality", cite::unitary_group,
                          [&](std::string&) { return verify_row_column_duality(cfg.n, F, smp); });
        }
        if (s == "c-order" || s == "all") rep.merge(run_c_suite(cfg.n, F, cfg.cap));
        if (s == "embed" || s == "all") rep.merge(run_embed_suite(cfg.n, F, smp));
        if (s == "membership" || s == "all")
            rep.merge(run_membership_inverse_suite(cfg.n, F, smp, 1000));
        if (s == "validate-form" || s == "all") rep.merge(validate_form_ring(F, smp));
    };

    const bool elementary_suite = s == "ecom" || s == "prop" || s == "normal-conj" ||
                                  s == "b-identities" || s == "generation" || s == "fuu" ||
                                  s == "st";
    const bool unitary_suite = s == "ucom" || s == "fuu-unitary" || s == "gamma" ||
                               s == "c-order" || s == "embed" || s == "membership" ||
                               s == "validate-form";

    if (elementary_suite) {
        add_elementary(detail::suite_ring(cfg));
    } else if (unitary_suite) {
        add_unitary(detail::suite_form(cfg));
    } else if (s == "all") {
        add_elementary(detail::suite_ring(cfg));
        if (cfg.form) add_unitary(*cfg.form);
    } else if (s == "closure") {
        const RingPtr R = detail::suite_ring(cfg);
        detail::timed(rep, "closure.elementary-group", cite::plumbing, [&](std::string& w) {
            FiniteGroupTable t = bfs_closure(elementary_generators(R, cfg.n), {cfg.cap});
            w = "order " + std::to_string(t.size()) +
                (t.complete() ? "" : " (capped, incomplete)");
            return t.complete();
        });
    } else if (s == "normal-closure") {
        const RingPtr R = detail::suite_ring(cfg);
        detail::timed(rep, "normal-closure", cite::relative_subgroup, [&](std::string& w) {
            FiniteGroupTable ambient = bfs_closure(elementary_generators(R, cfg.n), {cfg.cap});
            if (!ambient.complete()) {
                w = "ambient capped";
                return false;
            }
            std::vector<GroupElement> seeds;
            if (cfg.seeds.empty()) {
                seeds.push_back(e(1, 2, 1, R, cfg.n));
            } else {
                for (const auto& t : cfg.seeds)
                    seeds.push_back(detail::parse_seed(t, R, cfg.n));
            }
            FiniteGroupTable nc = normal_closure(seeds, ambient, {cfg.cap});
            w = "normal closure order " + std::to_string(nc.size()) + " in ambient " +
                std::to_string(ambient.size());
            return nc.complete();
        });
    } else if (s == "perfect") {
        const RingPtr R = detail::suite_ring(cfg);
        detail::timed(rep, "perfect.elementary-group", cite::perfectness, [&](std::string& w) {
            FiniteGroupTable t = bfs_closure(elementary_generators(R, cfg.n), {cfg.cap});
            if (!t.complete()) {
                w = "capped";
                return false;
            }
            w = "order " + std::to_string(t.size());
            return verify_perfect(t, {cfg.cap});
        });
    } else if (s == "sr") {
        const RingPtr R = detail::suite_ring(cfg);
        detail::timed(rep, "sr.condition", cite::stable_range, [&](std::string& w) {
            SrResult r = check_sr(R, cfg.m);
            if (!r.holds && r.counterexample) {
                w = "counterexample: (";
                for (const auto& x : *r.counterexample) w += x.str() + ",";
                w += ")";
            }
            return r.holds;
        });
    } else if (s == "lambda-sr") {
        FormRing F = detail::suite_form(cfg);
        detail::timed(rep, "lambda-sr.condition", cite::lambda_stable_range,
                      [&](std::string& w) {
                          SrResult r = check_lambda_sr(F, cfg.m);
                          if (!r.holds && r.counterexample) {
                              w = "counterexample: (";
                              for (const auto& x : *r.counterexample) w += x.str() + ",";
                              w += ")";
                          }
                          return r.holds;
                      });
    } else if (s == "k1") {
        const RingPtr R = detail::suite_ring(cfg);
        detail::timed(rep, "k1.stabilization", cite::k1_stabilization, [&](std::string& w) {
            K1Report r = k1_stabilization_check(R, cfg.n, {cfg.cap});
            w = "[GL:E] = " + std::to_string(r.at_n.index) + " at n=" +
                std::to_string(r.at_n.n) + ", " + std::to_string(r.at_n1.index) + " at n=" +
                std::to_string(r.at_n1.n) + ", units " + std::to_string(r.unit_count);
            return r.ok();
        });
    } else if (s == "ku1") {
        FormRing F = detail::suite_form(cfg);
        std::string witness;
        auto t0 = std::chrono::steady_clock::now();
        KU1Report r = ku1_stabilization_probe(F, cfg.n, {cfg.cap}, smp);
        auto t1 = std::chrono::steady_clock::now();
        witness = "[U:EU] = " + std::to_string(r.at_n.index) + " at n=" +
                  std::to_string(r.at_n.n) + " (|EU|=" + std::to_string(r.at_n.eu_order) +
                  (r.at_n.exact ? ", exact" : ", probed") + "), " +
                  std::to_string(r.at_n1.index) + " at n=" + std::to_string(r.at_n1.n) +
                  " (|EU|=" + std::to_string(r.at_n1.eu_order) +
                  (r.at_n1.exact ? ", exact" : ", probed") + ")";
        CheckStatus st = !r.stable ? CheckStatus::Fail
                                   : (r.partial ? CheckStatus::Partial : CheckStatus::Pass);
        rep.add_status("ku1.stabilization", cite::ku1_stabilization, st, witness);
        rep.checks.back().wall_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
    } else {
        throw ParseError("unknown suite: " + s);
    }

    rep.sort();
    return rep;
}

}  // namespace elgroups
