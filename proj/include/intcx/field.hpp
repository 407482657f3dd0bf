#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "intcx/error.hpp"

namespace intcx {

// Exact arbitrary-precision rational, the default coefficient field.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Field backends share one small interface (zero/one/arithmetic/is_zero)
// so the linear algebra and homology code can be written once.
struct RationalField {
    using Value = Rational;
    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    Value from_int(long long v) const { return Value(v); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b) const {
        if (b == 0) throw error("division by zero");
        return a / b;
    }
    Value neg(const Value& a) const { return -a; }
    bool is_zero(const Value& a) const { return a == 0; }
    std::string str(const Value& a) const { return a.str(); }
    std::string name() const { return "rat"; }
};

// GF(q) for a prime q. Values live in [0, q).
struct PrimeField {
    using Value = std::int64_t;
    std::int64_t q;

    explicit PrimeField(std::int64_t prime);

    Value zero() const { return 0; }
    Value one() const { return 1 % q; }
    Value from_int(long long v) const {
        Value r = static_cast<Value>(v % q);
        return r < 0 ? r + q : r;
    }
    Value add(Value a, Value b) const { Value r = a + b; return r >= q ? r - q : r; }
    Value sub(Value a, Value b) const { Value r = a - b; return r < 0 ? r + q : r; }
    Value mul(Value a, Value b) const {
        return static_cast<Value>((static_cast<__int128>(a) * b) % q);
    }
    Value inv(Value a) const;
    Value div(Value a, Value b) const { return mul(a, inv(b)); }
    Value neg(Value a) const { return a == 0 ? 0 : q - a; }
    bool is_zero(Value a) const { return a == 0; }
    std::string str(Value a) const { return std::to_string(a); }
    std::string name() const { return "gf:" + std::to_string(q); }
};

// Runtime selection of the coefficient field ("rat" or "gf:<prime>").
struct FieldSpec {
    enum class Kind { rationals, prime } kind = Kind::rationals;
    std::int64_t q = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec gf(std::int64_t q) { return {Kind::prime, q}; }
    // Parses "rat" or "gf:<prime>"; throws intcx::error otherwise.
    static FieldSpec parse(const std::string& text);
    std::string str() const {
        return kind == Kind::rationals ? "rat" : "gf:" + std::to_string(q);
    }
};

bool is_prime(std::int64_t n);

// Parses a decimal literal ("3", "-0.25", "1e-2") into an exact rational.
Rational rational_from_decimal(const std::string& text);

// Renders an exact rational as a decimal string when its denominator is of
// the form 2^a * 5^b, which holds for every value derived from decimal
// input weights. Returns nullopt otherwise.
std::optional<std::string> decimal_from_rational(const Rational& r);

// Closest double, for display next to exact values.
double to_double(const Rational& r);

} // namespace intcx
