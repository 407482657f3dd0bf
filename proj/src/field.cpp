#include "intcx/field.hpp"

#include <cctype>

namespace intcx {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::int64_t prime) : q(prime) {
    if (!is_prime(prime)) throw error("modulus " + std::to_string(prime) + " is not prime");
}

PrimeField::Value PrimeField::inv(Value a) const {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) throw error("division by zero in GF(" + std::to_string(q) + ")");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = q, new_r = a;
    while (new_r != 0) {
        std::int64_t qu = r / new_r;
        t -= qu * new_t; std::swap(t, new_t);
        r -= qu * new_r; std::swap(r, new_r);
    }
    return t < 0 ? t + q : t;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "rat" || text == "rational" || text == "q") return rationals();
    if (text.rfind("gf:", 0) == 0) {
        std::int64_t q = 0;
        try {
            q = std::stoll(text.substr(3));
        } catch (...) {
            throw error("invalid field spec '" + text + "'");
        }
        if (!is_prime(q)) throw error("field gf:" + std::to_string(q) + ": modulus must be prime");
        return gf(q);
    }
    throw error("invalid field spec '" + text + "' (expected rat or gf:<prime>)");
}

Rational rational_from_decimal(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto fail = [&] { throw error("invalid decimal literal '" + text + "'"); };
    if (n == 0) fail();
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = (text[i++] == '-');
    BigInt mantissa = 0;
    long long scale = 0;   // digits after the decimal point
    std::size_t digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mantissa = mantissa * 10 + (text[i] - '0');
        ++digits; ++i;
    }
    if (i < n && text[i] == '.') {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            mantissa = mantissa * 10 + (text[i] - '0');
            ++scale; ++digits; ++i;
        }
    }
    if (digits == 0) fail();
    long long exp10 = 0;
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) eneg = (text[i++] == '-');
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            exp10 = exp10 * 10 + (text[i++] - '0');
        if (eneg) exp10 = -exp10;
    }
    if (i != n) fail();
    BigInt num = mantissa;
    BigInt den = 1;
    long long net = exp10 - scale;
    for (long long k = 0; k < net; ++k) num *= 10;
    for (long long k = 0; k < -net; ++k) den *= 10;
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

std::optional<std::string> decimal_from_rational(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    // scale the denominator up to a power of ten
    int twos = 0, fives = 0;
    BigInt d = den;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return std::nullopt;
    int digits = std::max(twos, fives);
    for (int k = twos; k < digits; ++k) num *= 2;
    for (int k = fives; k < digits; ++k) num *= 5;
    std::string s = num.str();
    std::string out;
    if (digits == 0) {
        out = s;
    } else {
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
        out = s.substr(0, s.size() - static_cast<std::size_t>(digits)) + "." +
              s.substr(s.size() - static_cast<std::size_t>(digits));
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

} // namespace intcx
