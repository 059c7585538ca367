#pragma once

// Luna strata of M(r,d), their fiber quivers and the arithmetic behind
// virtual smallness of the forgetful map from framed bundles.
//
// A stratum type is a multiset of parts (gamma_i, m_i) with sum m_i gamma_i =
// (r, d) and all slopes equal. Its fiber quiver has
//     a_ij = delta_ij + (g - 1) r_i r_j
// arrows from i to j and framing w_i = d_i + (1 - g) r_i.

#include "curvedt/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace curvedt {

struct StratumPart {
    ChernClass gamma;
    int multiplicity = 1;

    friend bool operator==(const StratumPart&, const StratumPart&) = default;
    friend bool operator<(const StratumPart& a, const StratumPart& b) {
        return std::tie(a.gamma.rank, a.gamma.degree, a.multiplicity) <
               std::tie(b.gamma.rank, b.gamma.degree, b.multiplicity);
    }
};

struct StratumType {
    /// Canonically sorted by (r_i, d_i, m_i).
    std::vector<StratumPart> parts;

    int size() const { return static_cast<int>(parts.size()); }
    bool is_maximal() const { return parts.size() == 1 && parts[0].multiplicity == 1; }

    ChernClass total() const {
        ChernClass c;
        for (const auto& p : parts) {
            c.rank += p.multiplicity * p.gamma.rank;
            c.degree += p.multiplicity * p.gamma.degree;
        }
        return c;
    }

    friend bool operator==(const StratumType&, const StratumType&) = default;
    friend bool operator<(const StratumType& a, const StratumType& b) { return a.parts < b.parts; }
};

struct FramedQuiver {
    int n = 0;
    /// arrows[i][j] = number of arrows i -> j
    std::vector<std::vector<int>> arrows;
    std::vector<int> framing;
};

namespace detail {

inline void enumerate_parts(int remaining, std::size_t start, const std::vector<std::pair<int, int>>& choices,
                            std::vector<std::pair<int, int>>& current,
                            std::vector<std::vector<std::pair<int, int>>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = start; i < choices.size(); ++i) {
        const auto [units, mult] = choices[i];
        if (units * mult > remaining)
            continue;
        current.push_back(choices[i]);
        enumerate_parts(remaining - units * mult, i, choices, current, out);
        current.pop_back();
    }
}

} // namespace detail

/// All stratum types of M(r,d). Parts have rank a multiple of r / gcd(r,d)
/// so that every part has the slope d/r with integral degree.
inline std::vector<StratumType> enumerate_strata(ChernClass gamma) {
    if (gamma.rank < 1)
        throw std::invalid_argument("enumerate_strata requires rank >= 1");
    const int common = std::gcd(gamma.rank, std::abs(gamma.degree));
    const int unit_rank = gamma.rank / common;
    const int unit_degree = gamma.degree / common;

    // (units, multiplicity) with units * multiplicity <= common, in canonical order
    std::vector<std::pair<int, int>> choices;
    for (int units = 1; units <= common; ++units)
        for (int mult = 1; units * mult <= common; ++mult)
            choices.emplace_back(units, mult);

    std::vector<std::vector<std::pair<int, int>>> raw;
    std::vector<std::pair<int, int>> current;
    detail::enumerate_parts(common, 0, choices, current, raw);

    std::vector<StratumType> out;
    out.reserve(raw.size());
    for (const auto& selection : raw) {
        StratumType type;
        for (auto [units, mult] : selection)
            type.parts.push_back({{units * unit_rank, units * unit_degree}, mult});
        std::sort(type.parts.begin(), type.parts.end());
        out.push_back(std::move(type));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline FramedQuiver build_fiber_quiver(int genus, const StratumType& type) {
    FramedQuiver q;
    q.n = type.size();
    q.arrows.assign(static_cast<std::size_t>(q.n), std::vector<int>(static_cast<std::size_t>(q.n), 0));
    for (int i = 0; i < q.n; ++i) {
        const ChernClass& gi = type.parts[i].gamma;
        for (int j = 0; j < q.n; ++j)
            q.arrows[i][j] = (i == j ? 1 : 0) + (genus - 1) * gi.rank * type.parts[j].gamma.rank;
        q.framing.push_back(gi.degree + (1 - genus) * gi.rank);
    }
    return q;
}

/// chi_Q(m, m') = sum_i m_i m'_i - sum_{ij} a_ij m_i m'_j.
inline long euler_form(const FramedQuiver& q, const std::vector<int>& m, const std::vector<int>& m2) {
    if (static_cast<int>(m.size()) != q.n || static_cast<int>(m2.size()) != q.n)
        throw std::invalid_argument("dimension vector length does not match the quiver");
    long out = 0;
    for (int i = 0; i < q.n; ++i) {
        out += static_cast<long>(m[i]) * m2[i];
        for (int j = 0; j < q.n; ++j)
            out -= static_cast<long>(q.arrows[i][j]) * m[i] * m2[j];
    }
    return out;
}

/// codim S = (g-1) r^2 + 1 - sum_i ((g-1) r_i^2 + 1); zero only for the stable locus.
inline long codim_stratum(int genus, const StratumType& type) {
    const long r = type.total().rank;
    long codim = (genus - 1) * r * r + 1;
    for (const auto& p : type.parts)
        codim -= static_cast<long>(genus - 1) * p.gamma.rank * p.gamma.rank + 1;
    if (codim < 0)
        throw ComputationError("negative stratum codimension");
    return codim;
}

/// Fiber dimension over the stable locus: w . m - 1 for the class itself.
inline long d_zero(int genus, ChernClass gamma) {
    return gamma.degree + static_cast<long>(1 - genus) * gamma.rank - 1;
}

/// Which value of chi_Q(e_i, e_i) the bound uses.
enum class LoopBound {
    exact,  ///< chi_Q(e_i, e_i) = -(g - 1) r_i^2
    generic ///< the weaker estimate chi_Q(e_i, e_i) <= 1
};

/// Upper bound for dim pi^{-1}(E) - d_0 - codim / 2:
///   1/2 + 1/2 sum_i ((m_i - 1) chi_Q(e_i, e_i) + 1 - 2 m_i).
inline Rational smallness_bound(int genus, const StratumType& type, LoopBound loops = LoopBound::exact) {
    long sum = 0;
    for (const auto& p : type.parts) {
        const long chi_ii = loops == LoopBound::exact ? -static_cast<long>(genus - 1) * p.gamma.rank * p.gamma.rank : 1;
        sum += (p.multiplicity - 1) * chi_ii + 1 - 2L * p.multiplicity;
    }
    Rational bound = make_rational(1, 2) + make_rational(sum, 2);
    bound.canonicalize();
    return bound;
}

struct StratumRecord {
    StratumType type;
    long codim = 0;
    long d0 = 0;
    Rational bound;
    bool maximal = false;
    bool pass = false;
};

struct SmallnessReport {
    int genus = 0;
    ChernClass gamma;
    std::vector<StratumRecord> strata;
    /// d/r > 2g - 2, the hypothesis under which the map is virtually small.
    bool in_small_range = false;
    bool verdict = false;
    std::vector<std::string> warnings;
};

inline SmallnessReport certify_virtual_smallness(int genus, ChernClass gamma, LoopBound loops = LoopBound::exact) {
    SmallnessReport report;
    report.genus = genus;
    report.gamma = gamma;
    report.in_small_range = gamma.slope() > Rational(2 * genus - 2);
    if (!report.in_small_range)
        report.warnings.push_back("slope " + to_string(gamma.slope()) + " <= 2g - 2: smallness is not expected here");

    const long d0 = d_zero(genus, gamma);
    int maximal_count = 0;
    bool all_pass = true;
    for (auto& type : enumerate_strata(gamma)) {
        StratumRecord rec;
        rec.codim = codim_stratum(genus, type);
        rec.d0 = d0;
        rec.bound = smallness_bound(genus, type, loops);
        rec.maximal = type.is_maximal();
        rec.pass = rec.maximal ? rec.bound == 0 : rec.bound < 0;
        maximal_count += rec.maximal ? 1 : 0;
        all_pass = all_pass && rec.pass;
        if (report.in_small_range) {
            for (int w : build_fiber_quiver(genus, type).framing)
                if (w <= 0) {
                    report.warnings.push_back("non-positive framing in stratum");
                    all_pass = false;
                }
        }
        rec.type = std::move(type);
        report.strata.push_back(std::move(rec));
    }
    report.verdict = all_pass && maximal_count == 1;
    return report;
}

} // namespace curvedt
