#pragma once

// Exact scalars. Rational is GMP's mpq_class, which keeps every value in
// lowest terms with a positive denominator after each arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace curvedt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an always-on consistency check of the computation fails.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Floor division toward negative infinity.
inline Integer floor(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

/// {x} = x - floor(x), always in [0, 1).
inline Rational fractional_part(const Rational& q) {
    Rational f = q - Rational(floor(q));
    f.canonicalize();
    return f;
}

inline std::optional<std::int64_t> to_int64(const Integer& z) {
    if (!mpz_fits_slong_p(z.get_mpz_t()))
        return std::nullopt;
    return static_cast<std::int64_t>(z.get_si());
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (is_integer(q))
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("malformed rational '" + text + "'");
    q.canonicalize();
    return q;
}

} // namespace curvedt
