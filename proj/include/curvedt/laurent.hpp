#pragma once

// Laurent polynomials in u^{1/2}, v^{1/2} with rational coefficients, and
// their univariate shadow in y obtained by u = v = y.
//
// Exponents are stored doubled, so u^{a/2} v^{b/2} is Monomial{a, b}. The
// Lefschetz class is L = uv and its square root obeys L^{1/2} = -(uv)^{1/2};
// there is no separate L variable, L^{n/2} is encoded as (-1)^n (uv)^{n/2}.

#include "curvedt/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace curvedt {

struct Monomial {
    int eu2 = 0; ///< twice the exponent of u
    int ev2 = 0; ///< twice the exponent of v

    constexpr int total() const { return eu2 + ev2; }
    constexpr Monomial operator+(Monomial o) const { return {eu2 + o.eu2, ev2 + o.ev2}; }
    constexpr Monomial operator-() const { return {-eu2, -ev2}; }
    constexpr Monomial scaled(int n) const { return {n * eu2, n * ev2}; }

    constexpr auto operator<=>(const Monomial&) const = default;
};

/// Doubled monomial of L^k = (uv)^k.
constexpr Monomial lefschetz_monomial(int k) { return {2 * k, 2 * k}; }

namespace detail {

// Sorts by key, merges equal keys and removes zero coefficients.
template <class Key>
void normalize_terms(std::vector<std::pair<Key, Rational>>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Key key = terms[i].first;
        Rational acc = std::move(terms[i].second);
        std::size_t j = i + 1;
        for (; j < terms.size() && terms[j].first == key; ++j)
            acc += terms[j].second;
        if (acc != 0)
            terms[out++] = {key, std::move(acc)};
        i = j;
    }
    terms.resize(out);
}

// Merge of two sorted term lists: a + sign * b.
template <class Key>
std::vector<std::pair<Key, Rational>> merge_terms(const std::vector<std::pair<Key, Rational>>& a,
                                                  const std::vector<std::pair<Key, Rational>>& b,
                                                  int sign) {
    std::vector<std::pair<Key, Rational>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(a[i].second + b[j].second)
                                  : Rational(a[i].second - b[j].second);
            if (c != 0)
                out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

// Least common denominator of all coefficients.
template <class Key>
Integer common_denominator(const std::vector<std::pair<Key, Rational>>& terms) {
    Integer l = 1;
    for (const auto& [k, c] : terms)
        if (c.get_den() != 1)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

template <class Key>
std::vector<Integer> scaled_numerators(const std::vector<std::pair<Key, Rational>>& terms,
                                       const Integer& den) {
    std::vector<Integer> out;
    out.reserve(terms.size());
    for (const auto& [k, c] : terms) {
        if (den == 1) {
            out.push_back(c.get_num());
        } else {
            Integer z = den / c.get_den();
            out.push_back(z * c.get_num());
        }
    }
    return out;
}

} // namespace detail

class LaurentPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(const Rational& c) {
        if (c != 0)
            terms_.emplace_back(Monomial{}, c);
    }

    static LaurentPoly monomial(Monomial m, const Rational& c = 1) {
        LaurentPoly p;
        if (c != 0)
            p.terms_.emplace_back(m, c);
        return p;
    }

    static LaurentPoly from_terms(std::vector<Term> terms) {
        detail::normalize_terms(terms);
        LaurentPoly p;
        p.terms_ = std::move(terms);
        return p;
    }

    static LaurentPoly u() { return monomial({2, 0}); }
    static LaurentPoly v() { return monomial({0, 2}); }

    /// Terms sorted lexicographically by (eu2, ev2); no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(Monomial m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Monomial key) { return t.first < key; });
        if (it != terms_.end() && it->first == m)
            return it->second;
        return 0;
    }

    int min_total() const {
        require_nonzero("min_total");
        int lo = std::numeric_limits<int>::max();
        for (const auto& t : terms_)
            lo = std::min(lo, t.first.total());
        return lo;
    }

    int max_total() const {
        require_nonzero("max_total");
        int hi = std::numeric_limits<int>::min();
        for (const auto& t : terms_)
            hi = std::max(hi, t.first.total());
        return hi;
    }

    bool all_integer_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return is_integer(t.second); });
    }

    /// Multiplication by the monomial m.
    LaurentPoly shifted(Monomial m) const {
        LaurentPoly p = *this;
        for (auto& t : p.terms_)
            t.first = t.first + m;
        return p;
    }

    /// this * (1 - L^k).
    LaurentPoly times_one_minus_lefschetz(int k) const {
        return LaurentPoly(detail::merge_terms(terms_, shifted(lefschetz_monomial(k)).terms_, -1));
    }

    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& t : p.terms_)
            t.second = -t.second;
        return p;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        return LaurentPoly(detail::merge_terms(a.terms_, b.terms_, +1));
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return LaurentPoly(detail::merge_terms(a.terms_, b.terms_, -1));
    }
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
        if (c == 0)
            return {};
        LaurentPoly out = p;
        for (auto& t : out.terms_)
            t.second *= c;
        return out;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly result(1), base = *this;
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
    std::vector<Term> terms_;

    explicit LaurentPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}

    void require_nonzero(const char* what) const {
        if (terms_.empty())
            throw std::domain_error(std::string(what) + " of the zero polynomial is undefined");
    }

    static LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);
};

// Dense accumulation over the bounding box of the product, with all
// coefficients scaled to integers so the inner loop is a single mpz_addmul.
inline LaurentPoly LaurentPoly::multiply(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.size() == 1 || b.size() == 1) {
        const LaurentPoly& mono = a.size() == 1 ? a : b;
        const LaurentPoly& other = a.size() == 1 ? b : a;
        LaurentPoly out = other.shifted(mono.terms_[0].first);
        for (auto& t : out.terms_)
            t.second *= mono.terms_[0].second;
        return out;
    }

    auto box = [](const LaurentPoly& p) {
        int lu = p.terms_.front().first.eu2, hu = p.terms_.back().first.eu2;
        int lv = std::numeric_limits<int>::max(), hv = std::numeric_limits<int>::min();
        for (const auto& t : p.terms_) {
            lv = std::min(lv, t.first.ev2);
            hv = std::max(hv, t.first.ev2);
        }
        return std::array<int, 4>{lu, hu, lv, hv};
    };
    auto ba = box(a), bb = box(b);
    const long lu = ba[0] + bb[0], lv = ba[2] + bb[2];
    const long width = static_cast<long>(ba[1] + bb[1]) - lu + 1;
    const long height = static_cast<long>(ba[3] + bb[3]) - lv + 1;

    Integer da = detail::common_denominator(a.terms_), db = detail::common_denominator(b.terms_);
    auto na = detail::scaled_numerators(a.terms_, da);
    auto nb = detail::scaled_numerators(b.terms_, db);
    Integer den = da * db;

    const long cells = width * height;
    const long pairs = static_cast<long>(a.size()) * static_cast<long>(b.size());
    std::vector<Term> out;
    if (cells <= 16 * pairs + 4096) {
        std::vector<Integer> grid(static_cast<std::size_t>(cells));
        std::vector<char> touched(static_cast<std::size_t>(cells), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Monomial ma = a.terms_[i].first;
            for (std::size_t j = 0; j < b.size(); ++j) {
                const Monomial mb = b.terms_[j].first;
                const long idx = (ma.eu2 + mb.eu2 - lu) * height + (ma.ev2 + mb.ev2 - lv);
                mpz_addmul(grid[idx].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
                touched[idx] = 1;
            }
        }
        for (long idx = 0; idx < cells; ++idx) {
            if (!touched[idx] || grid[idx] == 0)
                continue;
            Monomial m{static_cast<int>(idx / height + lu), static_cast<int>(idx % height + lv)};
            out.emplace_back(m, make_rational(grid[idx], den));
        }
    } else {
        std::map<Monomial, Integer> acc;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                Integer& slot = acc[a.terms_[i].first + b.terms_[j].first];
                mpz_addmul(slot.get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
            }
        for (auto& [m, z] : acc)
            if (z != 0)
                out.emplace_back(m, make_rational(z, den));
    }
    return LaurentPoly(std::move(out));
}

/// L^{e2/2} = (-1)^{e2} (uv)^{e2/2}.
inline LaurentPoly half_lefschetz(int e2) {
    return LaurentPoly::monomial({e2, e2}, (e2 % 2 == 0) ? 1 : -1);
}

/// L^{1/2} - L^{-1/2}.
inline LaurentPoly lefschetz_difference() { return half_lefschetz(1) - half_lefschetz(-1); }

/// u -> u^{-1}, v -> v^{-1}.
inline LaurentPoly dualize(const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms())
        terms.emplace_back(-m, c);
    return LaurentPoly::from_terms(std::move(terms));
}

/// u -> u^n, v -> v^n on exponents; coefficients are fixed.
inline LaurentPoly adams(int n, const LaurentPoly& p) {
    if (n < 1)
        throw std::invalid_argument("Adams operation requires n >= 1");
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms())
        terms.emplace_back(m.scaled(n), c);
    return LaurentPoly::from_terms(std::move(terms));
}

/// Thrown by exact_divide_cyclo when (1 - L^k) does not divide the input.
class NotDivisibleError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

/// Returns q with q * (1 - L^k) = p. The lowest-degree terms of q and p
/// agree, so terms are peeled off in ascending total degree; each step pushes
/// the cancelled mass up by L^k, and anything pushed past the top degree of p
/// is a genuine remainder.
inline LaurentPoly exact_divide_cyclo(const LaurentPoly& p, int k) {
    if (k < 1)
        throw std::invalid_argument("exact_divide_cyclo requires k >= 1");
    if (p.is_zero())
        return {};
    const Monomial step = lefschetz_monomial(k);
    const int top = p.max_total();
    auto by_degree = [](Monomial a, Monomial b) {
        return a.total() != b.total() ? a.total() < b.total() : a < b;
    };
    std::map<Monomial, Rational, decltype(by_degree)> rest(by_degree);
    for (const auto& [m, c] : p.terms())
        rest.emplace(m, c);

    std::vector<LaurentPoly::Term> quotient;
    while (!rest.empty()) {
        auto node = rest.extract(rest.begin());
        const Monomial up = node.key() + step;
        if (up.total() > top)
            throw NotDivisibleError("not divisible by (1 - L^" + std::to_string(k) + ")");
        auto [it, inserted] = rest.try_emplace(up, node.mapped());
        if (!inserted) {
            it->second += node.mapped();
            if (it->second == 0)
                rest.erase(it);
        }
        quotient.emplace_back(node.key(), std::move(node.mapped()));
    }
    return LaurentPoly::from_terms(std::move(quotient));
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    if (p.is_zero())
        return os << "0";
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        os << (first ? "" : " + ") << "(" << to_string(c) << ")";
        if (m.eu2 != 0)
            os << "*u^(" << to_string(make_rational(m.eu2, 2)) << ")";
        if (m.ev2 != 0)
            os << "*v^(" << to_string(make_rational(m.ev2, 2)) << ")";
        first = false;
    }
    return os;
}

// ---------------------------------------------------------------------------
// Univariate Laurent polynomials in y, exponents stored doubled.

class UniPoly {
public:
    using Term = std::pair<int, Rational>;

    UniPoly() = default;
    UniPoly(long c) : UniPoly(Rational(c)) {}
    UniPoly(const Rational& c) {
        if (c != 0)
            terms_.emplace_back(0, c);
    }

    static UniPoly from_terms(std::vector<Term> terms) {
        detail::normalize_terms(terms);
        UniPoly p;
        p.terms_ = std::move(terms);
        return p;
    }

    /// c * y^k for integral k.
    static UniPoly y_power(int k, const Rational& c = 1) { return monomial2(2 * k, c); }
    /// c * y^{e2/2}.
    static UniPoly monomial2(int e2, const Rational& c = 1) {
        UniPoly p;
        if (c != 0)
            p.terms_.emplace_back(e2, c);
        return p;
    }
    /// 1 - y^k.
    static UniPoly one_minus_y(int k) { return UniPoly(1) - y_power(k); }

    /// Terms sorted by doubled exponent.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff2(int e2) const {
        for (const auto& [e, c] : terms_)
            if (e == e2)
                return c;
        return 0;
    }

    /// y -> -y; requires integral exponents.
    UniPoly negate_variable() const {
        UniPoly p = *this;
        for (auto& [e2, c] : p.terms_) {
            if (e2 % 2 != 0)
                throw ComputationError("y -> -y applied to a half-integral exponent");
            if ((e2 / 2) % 2 != 0)
                c = -c;
        }
        return p;
    }

    UniPoly shifted(int k) const {
        UniPoly p = *this;
        for (auto& t : p.terms_)
            t.first += 2 * k;
        return p;
    }

    UniPoly operator-() const {
        UniPoly p = *this;
        for (auto& t : p.terms_)
            t.second = -t.second;
        return p;
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        return UniPoly(detail::merge_terms(a.terms_, b.terms_, +1));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        return UniPoly(detail::merge_terms(a.terms_, b.terms_, -1));
    }
    friend UniPoly operator*(const Rational& c, const UniPoly& p) {
        if (c == 0)
            return {};
        UniPoly out = p;
        for (auto& t : out.terms_)
            t.second *= c;
        return out;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        const int lo = a.terms_.front().first + b.terms_.front().first;
        const int hi = a.terms_.back().first + b.terms_.back().first;
        Integer da = detail::common_denominator(a.terms_), db = detail::common_denominator(b.terms_);
        auto na = detail::scaled_numerators(a.terms_, da);
        auto nb = detail::scaled_numerators(b.terms_, db);
        std::vector<Integer> grid(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                mpz_addmul(grid[a.terms_[i].first + b.terms_[j].first - lo].get_mpz_t(),
                           na[i].get_mpz_t(), nb[j].get_mpz_t());
        Integer den = da * db;
        std::vector<Term> out;
        for (int e = lo; e <= hi; ++e)
            if (grid[e - lo] != 0)
                out.emplace_back(e, make_rational(grid[e - lo], den));
        return UniPoly(std::move(out));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

    UniPoly pow(unsigned n) const {
        UniPoly result(1), base = *this;
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
    std::vector<Term> terms_;
    explicit UniPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
};

/// u = v = y: monomial (eu2, ev2) goes to y^{(eu2+ev2)/2}.
inline UniPoly specialize_y(const LaurentPoly& p) {
    std::vector<UniPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms())
        terms.emplace_back(m.total(), c);
    return UniPoly::from_terms(std::move(terms));
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    if (p.is_zero())
        return os << "0";
    bool first = true;
    for (const auto& [e2, c] : p.terms()) {
        os << (first ? "" : " + ") << "(" << to_string(c) << ")";
        if (e2 != 0)
            os << "*y^(" << to_string(make_rational(e2, 2)) << ")";
        first = false;
    }
    return os;
}

/// Quotient of univariate polynomials, compared by cross-multiplication.
struct UniFrac {
    UniPoly num;
    UniPoly den = UniPoly(1);

    UniFrac() = default;
    UniFrac(UniPoly n, UniPoly d = UniPoly(1)) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero())
            throw std::domain_error("UniFrac with zero denominator");
    }

    friend UniFrac operator+(const UniFrac& a, const UniFrac& b) {
        if (a.den == b.den)
            return {a.num + b.num, a.den};
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend UniFrac operator-(const UniFrac& a, const UniFrac& b) {
        if (a.den == b.den)
            return {a.num - b.num, a.den};
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend UniFrac operator*(const UniFrac& a, const UniFrac& b) { return {a.num * b.num, a.den * b.den}; }
    friend UniFrac operator/(const UniFrac& a, const UniFrac& b) {
        if (b.num.is_zero())
            throw std::domain_error("division by zero UniFrac");
        return {a.num * b.den, a.den * b.num};
    }
    friend bool operator==(const UniFrac& a, const UniFrac& b) { return a.num * b.den == b.num * a.den; }

    UniFrac pow(unsigned n) const { return {num.pow(n), den.pow(n)}; }
};

} // namespace curvedt
