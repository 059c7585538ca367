#pragma once

// Hand-resolved low-rank formulas in the Poincare variable y, used as an
// independent cross-check of the general pipeline:
//  * Q_{r,d} for r <= 4 written in terms of Q_1 .. Q_4,
//  * closed rational functions for sum_k b_k (-y)^k of M(2,*), M(3,*), M(4,*).

#include "curvedt/pipeline.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace curvedt {

namespace closed {

inline UniPoly y(int k) { return UniPoly::y_power(k); }
inline UniPoly om(int k) { return UniPoly::one_minus_y(k); }
inline UniPoly op(int k) { return UniPoly(1) + y(k); }
/// 1 + y^2 + y^4 and friends.
inline UniPoly cyc3(int k) { return UniPoly(1) + y(k) + y(2 * k); }
inline UniPoly pw(const UniPoly& p, int n) {
    if (n < 0)
        throw std::domain_error("negative power in closed formula");
    return p.pow(static_cast<unsigned>(n));
}
inline UniPoly c(long num, long den = 1) { return UniPoly(make_rational(num, den)); }

} // namespace closed

/// Q_r after u = v = y:
/// (-y)^{(1-g) r^2} (y^{2r} - 1) prod_{i=1}^r (1 - y^{2i-1})^{2g} / (1 - y^{2i})^2.
inline UniFrac q_r_in_y(int genus, int rank) {
    using namespace closed;
    const int e = (1 - genus) * rank * rank;
    UniPoly num = UniPoly::y_power(e, (e % 2 == 0) ? 1 : -1) * (y(2 * rank) - UniPoly(1));
    UniPoly den(1);
    for (int i = 1; i <= rank; ++i) {
        num *= pw(om(2 * i - 1), 2 * genus);
        den *= pw(om(2 * i), 2);
    }
    return {num, den};
}

inline bool has_displayed_resolution(ChernClass gamma) {
    static const std::vector<ChernClass> known{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}};
    for (auto k : known)
        if (k == gamma)
            return true;
    return false;
}

/// Q_{r,d} in terms of q[0..3] = Q_1..Q_4, resolved by hand for r <= 4.
inline UniFrac displayed_resolution(ChernClass gamma, const std::vector<UniFrac>& q) {
    using namespace closed;
    auto f = [](UniPoly n, UniPoly d = UniPoly(1)) { return UniFrac(std::move(n), std::move(d)); };
    const int r = gamma.rank, d = gamma.degree;
    if (r == 1 && d == 0)
        return q.at(0);
    if (r == 2 && d == 0)
        return q.at(1) + f(1, om(4)) * q[0].pow(2);
    if (r == 2 && d == 1)
        return q.at(1) + f(y(2), om(4)) * q[0].pow(2);
    if (r == 3 && d == 0)
        return q.at(2) + f(2, om(6)) * q[0] * q[1] + f(1, pw(om(4), 2)) * q[0].pow(3);
    if (r == 3 && d == 1)
        return q.at(2) + f(y(2) + y(4), om(6)) * q[0] * q[1] + f(y(4), pw(om(4), 2)) * q[0].pow(3);
    if (r == 4 && d == 0)
        return q.at(3) + f(2, om(8)) * q[0] * q[2] + f(1, om(8)) * q[1].pow(2) +
               (f(2, om(4) * om(6)) + f(1, pw(om(6), 2))) * q[0].pow(2) * q[1] +
               f(1, pw(om(4), 3)) * q[0].pow(4);
    if (r == 4 && d == 1)
        return q.at(3) + f(y(2) * op(4), om(8)) * q[0] * q[2] + f(y(4), om(8)) * q[1].pow(2) +
               f(y(4) * pw(op(2), 2), pw(om(6), 2)) * q[0].pow(2) * q[1] + f(y(6), pw(om(4), 3)) * q[0].pow(4);
    if (r == 4 && d == 2)
        return q.at(3) + f(c(2) * y(4), om(8)) * q[0] * q[2] + f(1, om(8)) * q[1].pow(2) +
               (f(c(2) * y(2), om(4) * om(6)) + f(y(6), pw(om(6), 2))) * q[0].pow(2) * q[1] +
               f(y(4), pw(om(4), 3)) * q[0].pow(4);
    throw std::invalid_argument("no displayed resolution for (" + std::to_string(r) + "," + std::to_string(d) + ")");
}

/// The Q_1^2 Q_2 coefficient of Q_{4,1}: y^4 (1 + y^2)^2 / (1 - y^6)^2.
inline UniFrac displayed_q41_q1q1q2_coefficient() {
    using namespace closed;
    return {y(4) * pw(op(2), 2), pw(om(6), 2)};
}

inline bool has_closed_poincare(ChernClass gamma) {
    static const std::vector<ChernClass> known{{2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}};
    for (auto k : known)
        if (k == gamma)
            return true;
    return false;
}

/// sum_k dim IH^k(M(r,d)) (-y)^k as a rational function of y.
inline UniFrac closed_signed_poincare(int genus, ChernClass gamma) {
    using namespace closed;
    const int g = genus, g2 = 2 * genus;
    if (g < 1)
        throw std::invalid_argument("closed Poincare formulas need genus >= 1");
    const int r = gamma.rank, d = gamma.degree;
    const UniPoly a1 = pw(om(1), g2), a3 = pw(om(3), g2), a5 = pw(om(5), g2), a7 = pw(om(7), g2);
    if (r == 2) {
        const UniPoly den = om(2) * om(4);
        if (d == 0) {
            const UniPoly sign = c((g % 2 == 0) ? 1 : -1);
            UniPoly num = a1 * a3 - y(g2 - 2) * pw(om(1), 4 * g) +
                          c(1, 2) * y(g2 - 2) * om(4) * pw(om(1), 4 * g) +
                          c(1, 2) * sign * y(g2 - 2) * pw(om(2), 2) * pw(om(2), g2);
            return {num, den};
        }
        if (d == 1)
            return {a1 * a3 - y(g2) * pw(om(1), 4 * g), den};
    }
    if (r == 3) {
        const UniPoly den = om(2) * pw(om(4), 2) * om(6);
        if (d == 0) {
            UniPoly num = a1 * a3 * a5 - y(4 * g - 4) * op(2) * op(6) * pw(om(1), 4 * g) * a3 +
                          c(1, 3) * y(6 * g - 6) * cyc3(2) * cyc3(4) * pw(om(1), 6 * g) -
                          c(1, 3) * y(6 * g - 6) * pw(om(2), 2) * pw(om(4), 2) * a3;
            return {num, den};
        }
        if (d == 1) {
            UniPoly num = a1 * a3 * a5 - y(4 * g - 2) * pw(op(2), 2) * pw(om(1), 4 * g) * a3 +
                          y(6 * g - 2) * cyc3(2) * pw(om(1), 6 * g);
            return {num, den};
        }
    }
    if (r == 4) {
        const UniPoly den = om(2) * pw(om(4), 2) * pw(om(6), 2) * om(8);
        const UniPoly lead = a1 * a3 * a5 * a7;
        if (d == 0) {
            UniPoly num = lead - y(6 * g - 6) * cyc3(2) * op(8) * pw(om(1), 4 * g) * a3 * a5 -
                          c(1, 2) * y(8 * g - 8) * pw(cyc3(2), 2) * op(8) * pw(om(1), 4 * g) * pw(om(3), 4 * g) +
                          y(10 * g - 10) * pw(op(2), 2) * pw(op(4), 2) * op(8) * pw(om(1), 6 * g) * a3 -
                          c(1, 4) * y(12 * g - 12) * pw(cyc3(2), 2) * pw(op(4), 2) * op(8) * pw(om(1), 8 * g) -
                          c(1, 2) * y(8 * g - 8) * pw(om(2), 2) * pw(om(6), 2) * pw(om(2), g2) * pw(om(6), g2) +
                          c(1, 4) * y(12 * g - 12) * pw(om(2), 2) * pw(om(6), 2) * op(8) * pw(om(2), 4 * g);
            return {num, den};
        }
        if (d == 1) {
            UniPoly num = lead - y(6 * g - 4) * cyc3(2) * op(4) * pw(om(1), 4 * g) * a3 * a5 -
                          y(8 * g - 4) * pw(cyc3(2), 2) * pw(om(1), 4 * g) * pw(om(3), 4 * g) +
                          y(10 * g - 6) * pw(op(2), 4) * op(4) * pw(om(1), 6 * g) * a3 -
                          y(12 * g - 6) * pw(cyc3(2), 2) * op(4) * pw(om(1), 8 * g);
            return {num, den};
        }
        if (d == 2) {
            UniPoly num = lead - c(2) * y(6 * g - 2) * cyc3(2) * pw(om(1), 4 * g) * a3 * a5 -
                          c(1, 2) * y(8 * g - 8) * pw(cyc3(2), 2) * op(8) * pw(om(1), 4 * g) * pw(om(3), 4 * g) +
                          y(10 * g - 8) * pw(op(2), 2) * pw(op(4), 3) * pw(om(1), 6 * g) * a3 -
                          c(1, 2) * y(12 * g - 8) * pw(cyc3(2), 2) * pw(op(4), 2) * pw(om(1), 8 * g) -
                          c(1, 2) * y(8 * g - 8) * pw(om(2), 2) * pw(om(6), 2) * pw(om(2), g2) * pw(om(6), g2) +
                          c(1, 2) * y(12 * g - 8) * pw(om(2), 2) * pw(om(6), 2) * pw(om(2), 4 * g);
            return {num, den};
        }
    }
    throw std::invalid_argument("no closed Poincare formula for (" + std::to_string(r) + "," + std::to_string(d) + ")");
}

/// sum_k b_k (-y)^k from a Betti vector.
inline UniPoly signed_poincare(const std::vector<Integer>& betti) {
    std::vector<UniPoly::Term> terms;
    for (std::size_t k = 0; k < betti.size(); ++k)
        terms.emplace_back(static_cast<int>(2 * k), Rational(k % 2 == 0 ? Integer(betti[k]) : Integer(-betti[k])));
    return UniPoly::from_terms(std::move(terms));
}

/// Compares the pipeline's Betti numbers with the closed formula by
/// cross-multiplication.
inline bool ih_closed_form_check(int genus, ChernClass gamma, const std::vector<Integer>& betti) {
    if (!has_closed_poincare(gamma))
        throw std::invalid_argument("no closed Poincare formula for this class");
    const UniFrac formula = closed_signed_poincare(genus, gamma);
    return formula == UniFrac(signed_poincare(betti));
}

inline bool ih_closed_form_check(int genus, ChernClass gamma) {
    if (!has_closed_poincare(gamma))
        throw std::invalid_argument("no closed Poincare formula for this class");
    return ih_closed_form_check(genus, gamma, ih_poincare(genus, gamma).betti);
}

} // namespace curvedt
