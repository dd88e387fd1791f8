#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilclass {

// Exact arbitrary-precision scalars. mpq_rational keeps values canonical
// (lowest terms, positive denominator), which is exactly the contract the
// rest of the engine relies on. No floating point anywhere.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// User-facing input problems: malformed data, invalid structures, bad dims.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invariant combinations the classification theorems rule out. Reaching one
// of these on validated input means an implementation bug, not a user error.
struct taxonomy_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Serializes as "p" when the denominator is 1, else "p/q"; sign on the
// numerator only (guaranteed by mpq canonicalization).
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(std::string_view s) {
    BigInt num, den = 1;
    try {
        const auto slash = s.find('/');
        if (slash == std::string_view::npos) {
            num = BigInt(std::string(s));
        } else {
            num = BigInt(std::string(s.substr(0, slash)));
            den = BigInt(std::string(s.substr(slash + 1)));
        }
    } catch (const std::exception&) {
        throw validation_error("malformed rational literal: " + std::string(s));
    }
    if (den <= 0) throw validation_error("denominator must be positive: " + std::string(s));
    return Rational(num, den);
}

}  // namespace nilclass
