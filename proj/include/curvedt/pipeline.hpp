#pragma once

// Donaldson-Thomas invariants of a genus-g curve and the intersection
// cohomology of the moduli spaces M(r,d) of semistable bundles.
//
//   Q_tau = 1 + sum_{d/r = tau} Q_{r,d} t^r,
//   sum_{d/r = tau} HDT_{r,d} t^r = (L^{1/2} - L^{-1/2}) Log(Q_tau),
//   E(IH*(M(r,d))) = L^{dim/2} HDT_{r,d},   dim = (g-1) r^2 + 1.
//
// Q_{r,d} is produced by the closed-form solution of the Harder-Narasimhan
// recursion (a sum over compositions of r with fractional-part exponents).

#include "curvedt/series.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace curvedt {

struct ChernClass {
    int rank = 0;
    int degree = 0;

    Rational slope() const {
        if (rank <= 0)
            throw std::domain_error("slope of a class with non-positive rank");
        return make_rational(degree, rank);
    }

    friend auto operator<=>(const ChernClass&, const ChernClass&) = default;
};

enum class CheckMode { on, warn, off };

/// How the always-on consistency checks react: throw, record a warning, or skip.
struct CheckPolicy {
    CheckMode mode = CheckMode::on;
    std::vector<std::string>* warnings = nullptr;

    void fail(const std::string& message) const {
        if (mode == CheckMode::on)
            throw ComputationError(message);
        if (mode == CheckMode::warn && warnings)
            warnings->push_back(message);
    }
    bool enabled() const { return mode != CheckMode::off; }
};

inline int dim_moduli(int genus, int rank) {
    if (rank < 1)
        throw std::invalid_argument("rank must be positive");
    return (genus - 1) * rank * rank + 1;
}

/// E(X) = 1 - g u - g v + uv.
inline LaurentPoly curve_epoly(int genus) {
    return LaurentPoly(1) - Rational(genus) * LaurentPoly::u() - Rational(genus) * LaurentPoly::v() +
           LaurentPoly::u() * LaurentPoly::v();
}

/// (1 - c u)^g (1 - c v)^g for a polynomial c.
inline LaurentPoly numerator_factor(int genus, const LaurentPoly& c) {
    if (genus < 0)
        throw std::invalid_argument("genus must be non-negative");
    const unsigned g = static_cast<unsigned>(genus);
    return (LaurentPoly(1) - c * LaurentPoly::u()).pow(g) * (LaurentPoly(1) - c * LaurentPoly::v()).pow(g);
}

/// Z_X(t) = (1-ut)^g (1-vt)^g / ((1-t)(1-uvt)), expanded to order n_max.
inline GradedSeries zeta_series(int genus, int n_max) {
    if (genus < 0)
        throw std::invalid_argument("genus must be non-negative");
    GradedSeries p = GradedSeries::one(n_max);
    for (int i = 1; i <= genus; ++i)
        p = p * (GradedSeries::one(n_max) - GradedSeries::monomial(n_max, 1, RingElem(LaurentPoly::u())));
    for (int i = 1; i <= genus; ++i)
        p = p * (GradedSeries::one(n_max) - GradedSeries::monomial(n_max, 1, RingElem(LaurentPoly::v())));
    GradedSeries geometric(n_max), lefschetz_geometric(n_max);
    for (int n = 0; n <= n_max; ++n) {
        geometric[n] = RingElem(1);
        lefschetz_geometric[n] = RingElem(LaurentPoly::monomial(lefschetz_monomial(n)));
    }
    return p * geometric * lefschetz_geometric;
}

/// Z_X(L^i) with (1 - t)(1 - uvt) turned into (1 - L^i)(1 - L^{i+1}).
inline RingElem zeta_at_lefschetz(int genus, int i) {
    if (i < 1)
        throw std::invalid_argument("zeta_at_lefschetz requires i >= 1");
    CycloDenominator den = CycloDenominator::factor(i) * CycloDenominator::factor(i + 1);
    return RingElem(numerator_factor(genus, LaurentPoly::monomial(lefschetz_monomial(i))), den);
}

/// Q_r = L^{(1-g) r^2 / 2} P_X(1) / (L - 1) prod_{i=1}^{r-1} Z_X(L^i).
inline RingElem q_r(int genus, int rank) {
    if (rank < 1)
        throw std::invalid_argument("q_r requires rank >= 1");
    // 1 / (L - 1) = -1 / (1 - L)
    RingElem out(-(half_lefschetz((1 - genus) * rank * rank) * numerator_factor(genus, LaurentPoly(1))),
                 CycloDenominator::factor(1));
    for (int i = 1; i < rank; ++i)
        out *= zeta_at_lefschetz(genus, i);
    return out;
}

/// All 2^{r-1} compositions of r, each as the ordered list of parts.
inline std::vector<std::vector<int>> compositions(int r) {
    if (r < 1)
        throw std::invalid_argument("compositions requires r >= 1");
    std::vector<std::vector<int>> out;
    const std::uint32_t count = 1u << (r - 1);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        std::vector<int> parts;
        int current = 1;
        for (int bit = 0; bit < r - 1; ++bit) {
            if (mask & (1u << bit)) {
                parts.push_back(current);
                current = 1;
            } else {
                ++current;
            }
        }
        parts.push_back(current);
        out.push_back(std::move(parts));
    }
    return out;
}

/// One composition term of Q_{r,d}: the L-power and denominator factors
/// prod_{i<k} L^{(r_i + r_{i+1}) {(r_1 + ... + r_i) d / r}} / (1 - L^{r_i + r_{i+1}}).
/// The accumulated exponent must lie in (1/2)Z.
inline RingElem composition_weight(const std::vector<int>& parts, int degree) {
    int rank = std::accumulate(parts.begin(), parts.end(), 0);
    Rational exponent = 0;
    CycloDenominator den;
    int partial = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        partial += parts[i];
        const int joined = parts[i] + parts[i + 1];
        exponent += Rational(joined) * fractional_part(make_rational(static_cast<long>(partial) * degree, rank));
        den.insert(joined);
    }
    exponent.canonicalize();
    Rational doubled = 2 * exponent;
    if (!is_integer(doubled))
        throw ComputationError("composition exponent " + to_string(exponent) + " is not half-integral");
    return RingElem(half_lefschetz(static_cast<int>(doubled.get_num().get_si())), den);
}

/// Q_{r,d} from precomputed Q_1 .. Q_r (q_values[i] holds Q_{i+1}).
inline RingElem zagier_q(const std::vector<RingElem>& q_values, ChernClass gamma) {
    if (gamma.rank < 1)
        throw std::invalid_argument("zagier_q requires rank >= 1");
    if (static_cast<int>(q_values.size()) < gamma.rank)
        throw std::invalid_argument("zagier_q needs Q_1 .. Q_r");
    RingElem total;
    for (const auto& parts : compositions(gamma.rank)) {
        RingElem term = composition_weight(parts, gamma.degree);
        for (int part : parts)
            term *= q_values[static_cast<std::size_t>(part - 1)];
        total += term;
    }
    return total;
}

inline std::vector<RingElem> q_values(int genus, int rmax) {
    std::vector<RingElem> out;
    for (int r = 1; r <= rmax; ++r)
        out.push_back(q_r(genus, r));
    return out;
}

inline RingElem zagier_q(int genus, ChernClass gamma) { return zagier_q(q_values(genus, gamma.rank), gamma); }

/// Q_tau truncated at t^rmax; only ranks divisible by the denominator of tau contribute.
inline GradedSeries q_slope_series(int genus, const Rational& tau, int rmax) {
    const long q = tau.get_den().get_si();
    if (rmax < q)
        throw std::invalid_argument("rmax must be at least the denominator of the slope");
    const auto qs = q_values(genus, rmax);
    GradedSeries out = GradedSeries::one(rmax);
    for (int r = static_cast<int>(q); r <= rmax; r += static_cast<int>(q)) {
        Rational d = tau * r;
        out[r] = zagier_q(qs, {r, static_cast<int>(d.get_num().get_si())});
    }
    return out;
}

/// HDT_{r,d} for all r <= rmax with d/r = tau. Integrality is required:
/// a non-polynomial coefficient raises NotDivisibleError.
inline std::map<int, LaurentPoly> dt_invariants(int genus, const Rational& tau, int rmax) {
    const GradedSeries log_q = pleth_log(q_slope_series(genus, tau, rmax));
    const RingElem factor(lefschetz_difference());
    std::map<int, LaurentPoly> out;
    const int q = static_cast<int>(tau.get_den().get_si());
    for (int r = q; r <= rmax; r += q)
        out.emplace(r, to_polynomial(factor * log_q[r]));
    return out;
}

inline LaurentPoly hdt(int genus, ChernClass gamma) {
    return dt_invariants(genus, gamma.slope(), gamma.rank).at(gamma.rank);
}

/// E(IH*(M(r,d))) = L^{dim/2} HDT_{r,d}; exponents of u and v must be integral.
inline LaurentPoly ih_epoly_from_hdt(int genus, ChernClass gamma, const LaurentPoly& hdt_value) {
    LaurentPoly e = half_lefschetz(dim_moduli(genus, gamma.rank)) * hdt_value;
    for (const auto& [m, c] : e.terms())
        if (m.eu2 % 2 != 0 || m.ev2 % 2 != 0)
            throw ComputationError("E(IH) has a non-integral exponent");
    return e;
}

inline LaurentPoly ih_epoly(int genus, ChernClass gamma) {
    return ih_epoly_from_hdt(genus, gamma, hdt(genus, gamma));
}

struct DTResult {
    int genus = 0;
    ChernClass gamma;
    LaurentPoly hdt;
    LaurentPoly ih_epoly;
    int dim = 0;
    /// sum_k b_k y^k
    UniPoly poincare;
    /// b_0 .. b_{2 dim}
    std::vector<Integer> betti;
    std::vector<std::string> warnings;
};

/// Betti numbers b_k from E(IH): specialize u = v = y to get sum b_k (-y)^k,
/// then flip y -> -y. Negative or non-palindromic output is a hard failure
/// unless the policy says otherwise.
inline DTResult ih_poincare(int genus, ChernClass gamma, CheckMode mode = CheckMode::on) {
    DTResult res;
    CheckPolicy policy{mode, &res.warnings};
    res.genus = genus;
    res.gamma = gamma;
    res.dim = dim_moduli(genus, gamma.rank);
    res.hdt = hdt(genus, gamma);
    res.ih_epoly = ih_epoly_from_hdt(genus, gamma, res.hdt);
    res.poincare = specialize_y(res.ih_epoly).negate_variable();

    const int top = 2 * res.dim;
    res.betti.assign(static_cast<std::size_t>(std::max(top, 0) + 1), Integer(0));
    for (const auto& [e2, c] : res.poincare.terms()) {
        const int k = e2 / 2;
        if (k < 0 || k > top) {
            policy.fail("Poincare polynomial has a term y^" + std::to_string(k) + " outside [0, 2 dim]");
            continue;
        }
        if (!is_integer(c)) {
            policy.fail("non-integral Betti number at degree " + std::to_string(k));
            continue;
        }
        res.betti[static_cast<std::size_t>(k)] = c.get_num();
    }
    if (policy.enabled()) {
        for (int k = 0; k <= top; ++k)
            if (res.betti[k] < 0)
                policy.fail("negative Betti number b_" + std::to_string(k));
        for (int k = 0; k <= top; ++k)
            if (res.betti[k] != res.betti[top - k]) {
                policy.fail("Betti numbers are not palindromic");
                break;
            }
        if (!(dualize(res.hdt) == res.hdt))
            policy.fail("HDT is not self-dual");
        if (res.betti.front() != 1)
            policy.fail("b_0 != 1");
    }
    return res;
}

/// Quotient of the Poincare polynomial by (1 + y)^{2g}, i.e. the signed
/// polynomial sum b_k (-y)^k divided by (1 - y)^{2g} with signs restored.
/// Coefficients of the quotient for degrees 0 .. 2 dim - 2g.
inline std::vector<Integer> divide_by_jacobian(const std::vector<Integer>& betti, int genus) {
    std::vector<Integer> rem = betti;
    const int divisor_degree = 2 * genus;
    const int n = static_cast<int>(rem.size()) - 1;
    if (n < divisor_degree)
        throw ComputationError("Poincare polynomial of degree below 2g");
    // (1 + y)^{2g} coefficients
    std::vector<Integer> divisor(static_cast<std::size_t>(divisor_degree) + 1);
    for (int j = 0; j <= divisor_degree; ++j)
        mpz_bin_uiui(divisor[j].get_mpz_t(), static_cast<unsigned long>(divisor_degree),
                     static_cast<unsigned long>(j));
    std::vector<Integer> quotient(static_cast<std::size_t>(n - divisor_degree) + 1);
    for (int k = 0; k <= n - divisor_degree; ++k) {
        quotient[k] = rem[k];
        for (int j = 0; j <= divisor_degree; ++j)
            rem[k + j] -= quotient[k] * divisor[j];
    }
    for (int k = n - divisor_degree + 1; k <= n; ++k)
        if (rem[k] != 0)
            throw ComputationError("Poincare polynomial is not divisible by (1 + y)^{2g}");
    return quotient;
}

inline std::vector<Integer> determinant_factor(int genus, ChernClass gamma) {
    return divide_by_jacobian(ih_poincare(genus, gamma).betti, genus);
}

/// HDT_{0,d} for 1 <= d <= dmax from Exp(E(X)/(L-1) t).
inline std::map<int, LaurentPoly> torsion_dt(int genus, int dmax) {
    if (dmax < 1)
        throw std::invalid_argument("torsion_dt requires dmax >= 1");
    const RingElem seed(-curve_epoly(genus), CycloDenominator::factor(1));
    const GradedSeries generating = pleth_exp(GradedSeries::monomial(dmax, 1, seed));
    const GradedSeries log_series = pleth_log(generating);
    const RingElem factor(lefschetz_difference());
    std::map<int, LaurentPoly> out;
    for (int d = 1; d <= dmax; ++d)
        out.emplace(d, to_polynomial(factor * log_series[d]));
    return out;
}

} // namespace curvedt
