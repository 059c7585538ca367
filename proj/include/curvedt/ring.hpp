#pragma once

// The coefficient ring Q[u^{±1/2}, v^{±1/2}] localized at {1 - L^n : n >= 1}.
// An element is a Laurent polynomial numerator over a product of cyclotomic
// style factors (1 - L^k). Fractions are never reduced during arithmetic;
// equality is decided by cross-multiplication and polynomial values are
// recovered at the end by exact division.

#include "curvedt/laurent.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace curvedt {

/// Multiset {k} standing for the product of (1 - L^k).
class CycloDenominator {
public:
    CycloDenominator() = default;

    static CycloDenominator factor(int k, int multiplicity = 1) {
        CycloDenominator d;
        d.insert(k, multiplicity);
        return d;
    }

    void insert(int k, int multiplicity = 1) {
        if (k < 1)
            throw std::invalid_argument("denominator factor (1 - L^k) needs k >= 1");
        if (multiplicity > 0)
            factors_[k] += multiplicity;
    }

    bool empty() const { return factors_.empty(); }
    int multiplicity(int k) const {
        auto it = factors_.find(k);
        return it == factors_.end() ? 0 : it->second;
    }
    /// k -> multiplicity, ascending in k.
    const std::map<int, int>& factors() const { return factors_; }

    /// Sum of multiplicities (multiset union).
    friend CycloDenominator operator*(const CycloDenominator& a, const CycloDenominator& b) {
        CycloDenominator d = a;
        for (auto [k, m] : b.factors_)
            d.factors_[k] += m;
        return d;
    }

    /// Multiset-wise maximum, the least common denominator.
    static CycloDenominator lcm(const CycloDenominator& a, const CycloDenominator& b) {
        CycloDenominator d = a;
        for (auto [k, m] : b.factors_)
            d.factors_[k] = std::max(d.factors_[k], m);
        return d;
    }

    /// Multiset-wise minimum.
    static CycloDenominator gcd(const CycloDenominator& a, const CycloDenominator& b) {
        CycloDenominator d;
        for (auto [k, m] : a.factors_) {
            int common = std::min(m, b.multiplicity(k));
            if (common > 0)
                d.factors_[k] = common;
        }
        return d;
    }

    /// this minus `sub`; `sub` must be contained in this.
    CycloDenominator without(const CycloDenominator& sub) const {
        CycloDenominator d = *this;
        for (auto [k, m] : sub.factors_) {
            auto it = d.factors_.find(k);
            if (it == d.factors_.end() || it->second < m)
                throw std::logic_error("denominator difference of non-contained multisets");
            if ((it->second -= m) == 0)
                d.factors_.erase(it);
        }
        return d;
    }

    CycloDenominator adams(int n) const {
        CycloDenominator d;
        for (auto [k, m] : factors_)
            d.factors_[n * k] += m;
        return d;
    }

    /// p * prod (1 - L^k), one binomial at a time.
    LaurentPoly multiply_into(LaurentPoly p) const {
        for (auto [k, m] : factors_)
            for (int i = 0; i < m; ++i)
                p = p.times_one_minus_lefschetz(k);
        return p;
    }

    LaurentPoly expand() const { return multiply_into(LaurentPoly(1)); }

    friend bool operator==(const CycloDenominator&, const CycloDenominator&) = default;

private:
    std::map<int, int> factors_;
};

class RingElem {
public:
    RingElem() = default;
    RingElem(long c) : num_(c) {}
    RingElem(const Rational& c) : num_(c) {}
    RingElem(LaurentPoly num) : num_(std::move(num)) {}
    RingElem(LaurentPoly num, CycloDenominator den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero())
            den_ = {};
    }

    /// 1 / (1 - L^k).
    static RingElem inverse_one_minus_lefschetz(int k, int multiplicity = 1) {
        return RingElem(LaurentPoly(1), CycloDenominator::factor(k, multiplicity));
    }

    const LaurentPoly& num() const { return num_; }
    const CycloDenominator& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RingElem operator-() const { return RingElem(-num_, den_); }

    friend RingElem operator+(const RingElem& a, const RingElem& b) { return add(a, b, +1); }
    friend RingElem operator-(const RingElem& a, const RingElem& b) { return add(a, b, -1); }
    friend RingElem operator*(const RingElem& a, const RingElem& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        return RingElem(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RingElem operator*(const Rational& c, const RingElem& a) { return RingElem(c * a.num_, a.den_); }

    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    /// a.num * b.den == b.num * a.den, after cancelling shared factors.
    friend bool operator==(const RingElem& a, const RingElem& b) {
        if (a.den_ == b.den_)
            return a.num_ == b.num_;
        CycloDenominator common = CycloDenominator::gcd(a.den_, b.den_);
        return b.den_.without(common).multiply_into(a.num_) ==
               a.den_.without(common).multiply_into(b.num_);
    }

    RingElem pow(unsigned n) const {
        RingElem result(1), base = *this;
        while (n) {
            if (n & 1u)
                result *= base;
            n >>= 1u;
            if (n)
                base *= base;
        }
        return result;
    }

private:
    LaurentPoly num_;
    CycloDenominator den_;

    static RingElem add(const RingElem& a, const RingElem& b, int sign) {
        if (b.is_zero())
            return a;
        if (a.is_zero())
            return sign > 0 ? b : -b;
        if (a.den_ == b.den_)
            return RingElem(sign > 0 ? a.num_ + b.num_ : a.num_ - b.num_, a.den_);
        CycloDenominator den = CycloDenominator::lcm(a.den_, b.den_);
        LaurentPoly left = den.without(a.den_).multiply_into(a.num_);
        LaurentPoly right = den.without(b.den_).multiply_into(b.num_);
        return RingElem(sign > 0 ? left + right : left - right, std::move(den));
    }
};

/// Ring endomorphism: exponents times n, denominator factor k -> nk.
inline RingElem adams(int n, const RingElem& a) {
    if (n < 1)
        throw std::invalid_argument("Adams operation requires n >= 1");
    if (n == 1)
        return a;
    return RingElem(adams(n, a.num()), a.den().adams(n));
}

/// u -> u^{-1}, v -> v^{-1}; only defined for polynomial input.
inline RingElem dualize(const RingElem& a) {
    if (!a.den().empty())
        throw std::domain_error("dualize requires an element with trivial denominator");
    return RingElem(dualize(a.num()));
}

/// Clears the denominator by exact division; throws NotDivisibleError if `a`
/// is not a Laurent polynomial.
inline LaurentPoly to_polynomial(const RingElem& a) {
    LaurentPoly p = a.num();
    for (auto [k, m] : a.den().factors())
        for (int i = 0; i < m; ++i)
            p = exact_divide_cyclo(p, k);
    return p;
}

/// Denominator factors (1 - L^k) become (1 - y^{2k}).
inline UniFrac specialize_y(const RingElem& a) {
    UniPoly den(1);
    for (auto [k, m] : a.den().factors())
        den *= UniPoly::one_minus_y(2 * k).pow(static_cast<unsigned>(m));
    return UniFrac(specialize_y(a.num()), den);
}

inline std::ostream& operator<<(std::ostream& os, const RingElem& a) {
    os << "(" << a.num() << ")";
    for (auto [k, m] : a.den().factors())
        os << " / (1 - L^" << k << ")^" << m;
    return os;
}

} // namespace curvedt
