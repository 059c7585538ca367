#pragma once

// Built-in verification suites shared by the command line tool and the test
// harness. Each suite returns named results; a suite marked non-gating only
// reports.

#include "curvedt/closed_forms.hpp"
#include "curvedt/golden.hpp"
#include "curvedt/pipeline.hpp"
#include "curvedt/strata.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace curvedt {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    bool gating = true;
    std::string detail;
};

struct VerifyScope {
    /// largest rank for golden tables, closed forms and resolutions
    int max_rank = 4;
    /// largest rank for the integrality and duality properties
    int property_rank = 5;
    /// largest rank for the strata suite
    int strata_rank = 6;
    std::vector<int> genera{2, 3};
    std::uint32_t seed = 20240611u;
    int random_series = 20;
    int random_assignments = 3;

    static VerifyScope quick() {
        VerifyScope s;
        s.max_rank = 3;
        s.property_rank = 3;
        s.strata_rank = 3;
        s.random_series = 5;
        return s;
    }
};

namespace detail {

inline std::string label(int genus, ChernClass gamma) {
    return "g=" + std::to_string(genus) + " (" + std::to_string(gamma.rank) + "," + std::to_string(gamma.degree) + ")";
}

/// Runs body; exceptions become failures carrying the message.
inline CheckResult guarded(std::string suite, std::string name, const std::function<bool(std::string&)>& body,
                           bool gating = true) {
    CheckResult res{std::move(suite), std::move(name), false, gating, ""};
    try {
        res.passed = body(res.detail);
    } catch (const std::exception& e) {
        res.passed = false;
        res.detail = std::string("exception: ") + e.what();
    }
    return res;
}

/// First index where the computed prefix differs from the table.
inline bool compare_prefix(const std::vector<long>& expected, const std::vector<Integer>& actual, std::string& detail) {
    if (actual.size() < expected.size()) {
        detail = "computed list has " + std::to_string(actual.size()) + " entries, table has " +
                 std::to_string(expected.size());
        return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (actual[i] != expected[i]) {
            detail = "index " + std::to_string(i) + ": expected " + std::to_string(expected[i]) + ", got " +
                     actual[i].get_str();
            return false;
        }
    detail = std::to_string(expected.size()) + " entries match";
    return true;
}

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 3, int span = 2) {
    std::uniform_int_distribution<int> count(1, max_terms), expo(-span, span), coef(-3, 3), den(1, 3);
    std::vector<LaurentPoly::Term> terms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        int c = coef(rng);
        if (c == 0)
            c = 1;
        terms.emplace_back(Monomial{expo(rng), expo(rng)}, make_rational(c, den(rng)));
    }
    return LaurentPoly::from_terms(std::move(terms));
}

inline RingElem random_elem(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    const int k = pick(rng);
    if (k == 0)
        return RingElem(random_poly(rng));
    return RingElem(random_poly(rng), CycloDenominator::factor(k));
}

/// Independent expansion of (1-ut)^g (1-vt)^g / ((1-t)(1-uvt)) at t^n.
inline LaurentPoly zeta_coefficient(int genus, int n) {
    LaurentPoly total;
    for (int i = 0; i <= std::min(n, genus); ++i)
        for (int j = 0; i + j <= n && j <= genus; ++j) {
            Integer bi, bj;
            mpz_bin_uiui(bi.get_mpz_t(), static_cast<unsigned long>(genus), static_cast<unsigned long>(i));
            mpz_bin_uiui(bj.get_mpz_t(), static_cast<unsigned long>(genus), static_cast<unsigned long>(j));
            Rational c(bi * bj);
            if ((i + j) % 2)
                c = -c;
            // sum over t^a (uv)^b t^b with a + b = n - i - j
            for (int b = 0; b <= n - i - j; ++b)
                total = total + LaurentPoly::monomial({2 * (i + b), 2 * (j + b)}, c);
        }
    return total;
}

} // namespace detail

inline std::vector<CheckResult> check_golden_betti(const VerifyScope& scope) {
    std::vector<CheckResult> out;
    for (const auto& row : golden::betti_half()) {
        if (row.gamma.rank > scope.max_rank)
            continue;
        out.push_back(detail::guarded("golden-betti", detail::label(row.genus, row.gamma), [&](std::string& d) {
            return detail::compare_prefix(row.values, ih_poincare(row.genus, row.gamma).betti, d);
        }));
    }
    return out;
}

inline std::vector<CheckResult> check_golden_determinant(const VerifyScope& scope) {
    std::vector<CheckResult> out;
    for (const auto& row : golden::fixed_determinant_half()) {
        if (row.gamma.rank > scope.max_rank)
            continue;
        out.push_back(detail::guarded("golden-detfactor", detail::label(row.genus, row.gamma), [&](std::string& d) {
            return detail::compare_prefix(row.values, determinant_factor(row.genus, row.gamma), d);
        }));
    }
    return out;
}

inline std::vector<CheckResult> check_closed_forms(const VerifyScope& scope) {
    std::vector<CheckResult> out;
    for (int g : scope.genera)
        for (int r = 2; r <= std::min(scope.max_rank, 4); ++r)
            for (int d = 0; d <= r / 2; ++d) {
                const ChernClass gamma{r, d};
                if (!has_closed_poincare(gamma))
                    continue;
                out.push_back(detail::guarded("closed-form", detail::label(g, gamma), [&](std::string&) {
                    return ih_closed_form_check(g, gamma);
                }));
            }
    return out;
}

inline std::vector<CheckResult> check_resolutions(const VerifyScope& scope) {
    std::vector<CheckResult> out;
    const int rmax = std::min(scope.max_rank, 4);
    for (int g : scope.genera) {
        std::vector<UniFrac> q_closed;
        for (int r = 1; r <= 4; ++r)
            q_closed.push_back(q_r_in_y(g, r));
        const auto qs = q_values(g, rmax);
        for (int r = 1; r <= rmax; ++r)
            out.push_back(detail::guarded("resolution", "g=" + std::to_string(g) + " Q_" + std::to_string(r),
                                          [&](std::string&) { return specialize_y(qs[r - 1]) == q_closed[r - 1]; }));
        for (int r = 1; r <= rmax; ++r)
            for (int d = 0; d <= r / 2; ++d) {
                const ChernClass gamma{r, d};
                if (!has_displayed_resolution(gamma))
                    continue;
                out.push_back(detail::guarded("resolution", detail::label(g, gamma), [&](std::string&) {
                    return specialize_y(zagier_q(qs, gamma)) == displayed_resolution(gamma, q_closed);
                }));
            }
    }
    if (rmax >= 4)
        out.push_back(detail::guarded("resolution", "Q_(4,1) coefficient of Q_1^2 Q_2", [](std::string& d) {
            RingElem sum;
            int hits = 0;
            for (const auto& parts : compositions(4)) {
                std::vector<int> sorted = parts;
                std::sort(sorted.begin(), sorted.end());
                if (sorted == std::vector<int>{1, 1, 2}) {
                    sum += composition_weight(parts, 1);
                    ++hits;
                }
            }
            d = std::to_string(hits) + " compositions";
            return hits == 3 && specialize_y(sum) == displayed_q41_q1q1q2_coefficient();
        }));
    return out;
}

inline std::vector<CheckResult> check_lambda_ring(const VerifyScope& scope) {
    std::vector<CheckResult> out;
    std::mt19937 rng(scope.seed);
    std::uniform_int_distribution<int> order(1, 6);

    out.push_back(detail::guarded("lambda-ring", "Log o Exp = id", [&](std::string& d) {
        for (int i = 0; i < scope.random_series; ++i) {
            GradedSeries f(order(rng));
            for (int r = 1; r <= f.rmax(); ++r)
                f[r] = detail::random_elem(rng);
            if (!(pleth_log(pleth_exp(f)) == f)) {
                d = "sample " + std::to_string(i);
                return false;
            }
        }
        d = std::to_string(scope.random_series) + " samples";
        return true;
    }));
    out.push_back(detail::guarded("lambda-ring", "Exp o Log = id", [&](std::string& d) {
        for (int i = 0; i < scope.random_series; ++i) {
            GradedSeries f = GradedSeries::one(order(rng));
            for (int r = 1; r <= f.rmax(); ++r)
                f[r] = detail::random_elem(rng);
            if (!(pleth_exp(pleth_log(f)) == f)) {
                d = "sample " + std::to_string(i);
                return false;
            }
        }
        d = std::to_string(scope.random_series) + " samples";
        return true;
    }));
    out.push_back(detail::guarded("lambda-ring", "Log coefficients b1..b4", [&](std::string& d) {
        for (int i = 0; i < scope.random_assignments; ++i) {
            std::vector<RingElem> a(5);
            GradedSeries f = GradedSeries::one(4);
            for (int r = 1; r <= 4; ++r)
                f[r] = a[r] = detail::random_elem(rng);
            const GradedSeries b = pleth_log(f);
            const Rational half = make_rational(1, 2), third = make_rational(1, 3), quarter = make_rational(1, 4);
            const RingElem b2 = a[2] - half * a[1].pow(2) - half * adams(2, a[1]);
            const RingElem b3 = a[3] - a[1] * a[2] + third * a[1].pow(3) - third * adams(3, a[1]);
            const RingElem b4 = a[4] - a[1] * a[3] + a[1].pow(2) * a[2] - half * a[2].pow(2) - half * adams(2, a[2]) -
                                quarter * a[1].pow(4) + quarter * adams(2, a[1]).pow(2);
            if (!(b[1] == a[1] && b[2] == b2 && b[3] == b3 && b[4] == b4)) {
                d = "assignment " + std::to_string(i);
                return false;
            }
        }
        d = std::to_string(scope.random_assignments) + " assignments";
        return true;
    }));
    out.push_back(detail::guarded("lambda-ring", "Exp(E(X) t) = Z_X(t) to t^6, g <= 4", [](std::string&) {
        for (int g = 0; g <= 4; ++g) {
            const GradedSeries z = pleth_exp(GradedSeries::monomial(6, 1, RingElem(curve_epoly(g))));
            for (int n = 0; n <= 6; ++n)
                if (!(z[n] == RingElem(detail::zeta_coefficient(g, n))))
                    return false;
        }
        return true;
    }));
    return out;
}

/// HDT is polynomial, self-dual, has non-negative integer coefficients at
/// u = v = -y, and the Betti sequence is palindromic with b_0 = b_top = 1.
inline std::vector<CheckResult> check_hdt_properties(const VerifyScope& scope) {
    std::vector<CheckResult> out;
    for (int g : scope.genera)
        for (int r = 1; r <= scope.property_rank; ++r)
            for (int d = 0; d < r; ++d) {
                const ChernClass gamma{r, d};
                out.push_back(detail::guarded("hdt-properties", detail::label(g, gamma), [&](std::string& detail_msg) {
                    const LaurentPoly h = hdt(g, gamma);
                    if (!(dualize(h) == h)) {
                        detail_msg = "not self-dual";
                        return false;
                    }
                    const UniPoly at_minus_y = specialize_y(h).negate_variable();
                    for (const auto& [e2, c] : at_minus_y.terms())
                        if (!is_integer(c) || c < 0) {
                            detail_msg = "coefficient " + to_string(c) + " at y^(" + std::to_string(e2) + "/2)";
                            return false;
                        }
                    const DTResult res = ih_poincare(g, gamma, CheckMode::off);
                    const auto& b = res.betti;
                    for (std::size_t k = 0; k < b.size(); ++k)
                        if (b[k] != b[b.size() - 1 - k]) {
                            detail_msg = "not palindromic";
                            return false;
                        }
                    if (b.front() != 1 || b.back() != 1) {
                        detail_msg = "b_0 or b_top differs from 1";
                        return false;
                    }
                    return true;
                }));
            }
    return out;
}

inline std::vector<CheckResult> check_torsion(const VerifyScope&) {
    std::vector<CheckResult> out;
    for (int g = 2; g <= 4; ++g)
        out.push_back(detail::guarded("torsion", "g=" + std::to_string(g), [g](std::string& d) {
            const auto values = torsion_dt(g, 6);
            if (!(values.at(1) == half_lefschetz(-1) * curve_epoly(g))) {
                d = "HDT_(0,1) differs from E(X)/L^(1/2)";
                return false;
            }
            for (int k = 2; k <= 6; ++k)
                if (!values.at(k).is_zero()) {
                    d = "HDT_(0," + std::to_string(k) + ") is non-zero";
                    return false;
                }
            return true;
        }));
    return out;
}

/// Two full periods of degrees above slope 2g - 2 for each rank.
inline std::vector<CheckResult> check_strata(const VerifyScope& scope) {
    std::vector<CheckResult> out;
    for (int g : scope.genera)
        for (int r = 1; r <= scope.strata_rank; ++r) {
            const int first = r * (2 * g - 2) + 1;
            out.push_back(detail::guarded(
                "strata", "g=" + std::to_string(g) + " r=" + std::to_string(r), [&](std::string& msg) {
                    int classes = 0;
                    for (int d = first; d < first + 2 * r; ++d) {
                        const ChernClass gamma{r, d};
                        const SmallnessReport rep = certify_virtual_smallness(g, gamma);
                        if (!rep.in_small_range || !rep.verdict) {
                            msg = "verdict fails at d=" + std::to_string(d);
                            return false;
                        }
                        for (const auto& s : rep.strata)
                            if (s.codim < 0 || (s.codim == 0) != s.maximal) {
                                msg = "codimension " + std::to_string(s.codim) + " at d=" + std::to_string(d);
                                return false;
                            }
                        ++classes;
                    }
                    msg = std::to_string(classes) + " classes";
                    return true;
                }));
        }
    return out;
}

/// Exploratory genus-one behaviour; never gating.
inline std::vector<CheckResult> check_elliptic(const VerifyScope&) {
    std::vector<CheckResult> out;
    // L^{-1/2} = -(uv)^{-1/2}
    const LaurentPoly target = half_lefschetz(-1) * (LaurentPoly(1) - LaurentPoly::u()) *
                               (LaurentPoly(1) - LaurentPoly::v());
    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d < r; ++d) {
            const ChernClass gamma{r, d};
            out.push_back(detail::guarded(
                "elliptic", detail::label(1, gamma),
                [&](std::string&) {
                    const LaurentPoly h = hdt(1, gamma);
                    return std::gcd(r, d) == 1 ? h == target : h.is_zero();
                },
                false));
        }
    return out;
}

inline std::vector<CheckResult> run_verification(const VerifyScope& scope) {
    std::vector<CheckResult> all;
    for (auto* suite : {&check_golden_betti, &check_golden_determinant, &check_closed_forms, &check_resolutions,
                        &check_lambda_ring, &check_hdt_properties, &check_torsion, &check_strata, &check_elliptic}) {
        auto part = (*suite)(scope);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

} // namespace curvedt
