#pragma once

// Dual integers a + alpha*e with e^2 = 0 over arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shadow_markov {

using BigInt = boost::multiprecision::cpp_int;

/// Base class for failures that signal a mathematically invalid input
/// (as opposed to a usage error).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotDivisible : public DomainError {
public:
    using DomainError::DomainError;
};

class ZeroRealPart : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct DualInt {
    BigInt real;
    BigInt shadow;

    DualInt() = default;
    DualInt(BigInt a) : real(std::move(a)) {}  // NOLINT: integers embed as a + 0e
    DualInt(BigInt a, BigInt alpha) : real(std::move(a)), shadow(std::move(alpha)) {}
    DualInt(long long a) : real(a) {}          // NOLINT
    DualInt(long long a, long long alpha) : real(a), shadow(alpha) {}

    friend bool operator==(const DualInt&, const DualInt&) = default;

    bool is_zero() const { return real.is_zero() && shadow.is_zero(); }
};

inline DualInt operator+(const DualInt& x, const DualInt& y) {
    return {x.real + y.real, x.shadow + y.shadow};
}

inline DualInt operator-(const DualInt& x, const DualInt& y) {
    return {x.real - y.real, x.shadow - y.shadow};
}

inline DualInt operator-(const DualInt& x) { return {-x.real, -x.shadow}; }

// (a + alpha e)(b + beta e) = ab + (a beta + b alpha) e
inline DualInt operator*(const DualInt& x, const DualInt& y) {
    return {x.real * y.real, x.real * y.shadow + y.real * x.shadow};
}

inline DualInt& operator+=(DualInt& x, const DualInt& y) { return x = x + y; }
inline DualInt& operator-=(DualInt& x, const DualInt& y) { return x = x - y; }
inline DualInt& operator*=(DualInt& x, const DualInt& y) { return x = x * y; }

inline DualInt add(const DualInt& x, const DualInt& y) { return x + y; }
inline DualInt mul(const DualInt& x, const DualInt& y) { return x * y; }

inline DualInt square(const DualInt& x) {
    return {x.real * x.real, 2 * x.real * x.shadow};
}

/// Exact quotient q with q * den == num. Throws NotDivisible when either the
/// real or the shadow division leaves a remainder, ZeroRealPart when
/// den.real == 0. There is no rational fallback.
inline DualInt exact_div(const DualInt& num, const DualInt& den) {
    if (den.real.is_zero()) throw ZeroRealPart("dual division by a number with zero real part");

    BigInt q_real;
    BigInt rem;
    boost::multiprecision::divide_qr(num.real, den.real, q_real, rem);
    if (!rem.is_zero()) throw NotDivisible("real part " + num.real.str() + " is not divisible by " + den.real.str());

    const BigInt shadow_num = num.shadow - q_real * den.shadow;
    BigInt q_shadow;
    boost::multiprecision::divide_qr(shadow_num, den.real, q_shadow, rem);
    if (!rem.is_zero()) {
        throw NotDivisible("shadow residue " + shadow_num.str() + " is not divisible by " + den.real.str());
    }
    return {std::move(q_real), std::move(q_shadow)};
}

/// Canonical text: "a" when the shadow vanishes, otherwise "a+alphae" / "a-|alpha|e".
inline std::string to_string(const DualInt& x) {
    std::string out = x.real.str();
    if (x.shadow.is_zero()) return out;
    if (x.shadow.sign() < 0) {
        out += '-';
        out += BigInt(-x.shadow).str();
    } else {
        out += '+';
        out += x.shadow.str();
    }
    out += 'e';
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const DualInt& x) { return os << to_string(x); }

namespace detail {

inline std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

/// Signed decimal integer, optional leading '+' or '-'.
inline BigInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("not a decimal integer: '" + std::string(s) + "'");
    BigInt value{std::string(s)};
    return negative ? BigInt(-value) : value;
}

}  // namespace detail

/// Accepts "a", "a+alphae", "a-alphae", "a+e", "alphae", ignoring whitespace.
inline DualInt parse_dual(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty dual number");

    if (s.back() != 'e') return DualInt(detail::parse_integer(s));

    // Locate the sign that separates the real part from the shadow part,
    // skipping a leading sign on the real part.
    const std::string_view body(s.data(), s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }

    std::string_view real_text;
    std::string_view shadow_text = body;
    if (split != std::string_view::npos) {
        real_text = body.substr(0, split);
        shadow_text = body.substr(split);
    }

    BigInt shadow;
    if (shadow_text.empty() || shadow_text == "+") {
        shadow = 1;
    } else if (shadow_text == "-") {
        shadow = -1;
    } else {
        shadow = detail::parse_integer(shadow_text);
    }
    BigInt real = real_text.empty() ? BigInt(0) : detail::parse_integer(real_text);
    return {std::move(real), std::move(shadow)};
}

}  // namespace shadow_markov
