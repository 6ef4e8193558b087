#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace elgroups {

enum class CheckStatus { Pass, Fail, Partial };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "pass";
        case CheckStatus::Fail:
            return "fail";
        case CheckStatus::Partial:
            return "partial";
    }
    return "?";
}

/// One verified identity/oracle instance. Every record carries a citation
/// string from the fixed table below (or "artifact plumbing"), and a
/// witness describing the instance (and the counterexample on failure).
/// wall_ms is informational only and excluded from canonical serialization.
struct CheckRecord {
    std::string id;
    std::string citation;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
    double wall_ms = 0.0;
};

struct Report {
    std::vector<CheckRecord> checks;

    void add(std::string id, std::string citation, bool ok, std::string witness = "") {
        checks.push_back({std::move(id), std::move(citation),
                          ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness), 0.0});
    }

    void add_status(std::string id, std::string citation, CheckStatus st,
                    std::string witness = "") {
        checks.push_back({std::move(id), std::move(citation), st, std::move(witness), 0.0});
    }

    void merge(const Report& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }

    /// Canonical order: sorted by check id, independent of execution order.
    void sort() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status != CheckStatus::Pass) return false;
        return true;
    }
    bool any_failed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return true;
        return false;
    }
    bool any_partial() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Partial) return true;
        return false;
    }
    std::size_t count(CheckStatus s) const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }
};

/// Fixed citation table. Checks name classical sources for the algebra they
/// exercise; everything invented for the artifact is tagged as plumbing.
namespace cite {
inline constexpr const char* plumbing = "artifact plumbing";
inline constexpr const char* elem_commutators =
    "elementary matrix commutator formulas (Magurn, An Algebraic Introduction to "
    "K-Theory, Lemma 9.4)";
inline constexpr const char* steinberg_relations =
    "Steinberg relations St1-St3 (Milnor; Magurn Ch. 13)";
inline constexpr const char* form_ring_axioms =
    "form rings and form parameters (Bak, K-Theory of Forms)";
inline constexpr const char* unitary_group =
    "quadratic/unitary groups over form rings (Bak; Hahn-O'Meara, The Classical "
    "Groups and K-Theory)";
inline constexpr const char* unitary_commutators =
    "elementary unitary commutator formulas (Bak; Hahn-O'Meara 9.2B; Vaserstein-You)";
inline constexpr const char* diag_involutions =
    "diagonal sign matrices A_ij generating Z_2^(n-1) inside E_n(R)";
inline constexpr const char* relative_subgroup =
    "relative elementary subgroup E_n(R,I) and its normal generation";
inline constexpr const char* order3_linear =
    "order-3 products of elementary transvections in E_n(R)";
inline constexpr const char* order3_unitary =
    "order-3 products of short-root unitary transvections (requires 1 in Lambda)";
inline constexpr const char* nilpotent_witness =
    "nilpotent subgroups supplying commutator expressions of elementary generators";
inline constexpr const char* generation =
    "generation of E_n(R) / EU_2n(R,Lambda) by few root subgroups via nested "
    "commutators";
inline constexpr const char* hyperbolic =
    "hyperbolic embedding A -> diag(A, (A*)^-1) of GL_n into U_2n";
inline constexpr const char* stable_range =
    "stable range condition sr_m (Bass; Magurn Sec. 4E)";
inline constexpr const char* lambda_stable_range =
    "Lambda-stable range condition of Bak-Tang";
inline constexpr const char* k1_stabilization =
    "K_1 stabilization GL_n/E_n -> K_1 for n >= sr(R)+1 (Magurn, Theorem 10.15)";
inline constexpr const char* ku1_stabilization =
    "KU_1 stabilization U_2n/EU_2n -> KU_1 for n >= Lambda-sr(R)+1 (Bak-Tang)";
inline constexpr const char* perfectness =
    "perfectness of E_n(R) for n >= 3";
}  // namespace cite

}  // namespace elgroups
