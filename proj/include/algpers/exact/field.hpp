#pragma once

// Exact scalar fields: the rationals (arbitrary precision) and prime fields.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace algpers {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r == 0; }

inline std::string to_string(const Rational& r) { return r.str(); }

struct RationalField {
    using value_type = Rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const { return v; }
    value_type from_rational(const Rational& r) const { return r; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const
    {
        if (a == 0) {
            throw std::domain_error("division by zero");
        }
        return 1 / a;
    }
    bool is_zero(const value_type& a) const { return a == 0; }
    std::string name() const { return "Q"; }
};

/// Z/p for a prime p < 2^32; elements are canonical residues in [0, p).
struct PrimeField {
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t modulus) : p(modulus)
    {
        if (p < 2 || p >= (std::uint64_t{1} << 32)) {
            throw std::invalid_argument("prime field modulus out of range");
        }
        for (std::uint64_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                throw std::invalid_argument(std::to_string(p) + " is not prime");
            }
        }
    }

    std::uint64_t p;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const
    {
        const auto m = static_cast<std::int64_t>(p);
        return static_cast<value_type>(((v % m) + m) % m);
    }
    value_type from_integer(const Integer& v) const
    {
        Integer r = v % p;
        if (r < 0) {
            r += p;
        }
        return r.convert_to<value_type>();
    }
    /// Reduction of a rational; throws if p divides the denominator.
    value_type from_rational(const Rational& r) const
    {
        const value_type den = from_integer(boost::multiprecision::denominator(r));
        if (den == 0) {
            throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
        }
        return mul(from_integer(boost::multiprecision::numerator(r)), inv(den));
    }
    value_type add(value_type a, value_type b) const { return (a + b) % p; }
    value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
    value_type mul(value_type a, value_type b) const { return (a * b) % p; }
    value_type inv(value_type a) const
    {
        if (a == 0) {
            throw std::domain_error("division by zero");
        }
        value_type result = 1;
        value_type base = a;
        for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1) {
                result = mul(result, base);
            }
            base = mul(base, base);
        }
        return result;
    }
    bool is_zero(value_type a) const { return a == 0; }
    std::string name() const { return "F" + std::to_string(p); }
};

/// Which coefficient field a homology computation runs over.
struct FieldChoice {
    enum class Kind { rational, prime } kind = Kind::prime;
    std::uint64_t p = 2;

    static FieldChoice rationals() { return {Kind::rational, 0}; }
    static FieldChoice prime(std::uint64_t p) { return {Kind::prime, p}; }

    /// "q", "f2", or "fp:<p>".
    static FieldChoice parse(const std::string& s)
    {
        if (s == "q" || s == "Q") {
            return rationals();
        }
        if (s == "f2") {
            return prime(2);
        }
        if (s.rfind("fp:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                p = std::stoull(s.substr(3));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad field modulus in '" + s + "'");
            }
            PrimeField check(p);
            return prime(p);
        }
        throw std::invalid_argument("unknown field '" + s + "' (expected f2, fp:<p> or q)");
    }

    std::string name() const { return kind == Kind::rational ? "q" : (p == 2 ? "f2" : "fp:" + std::to_string(p)); }

    friend bool operator==(const FieldChoice&, const FieldChoice&) = default;
};

/// Call f(field) with the concrete field object.
template <class F>
decltype(auto) with_field(const FieldChoice& choice, F&& f)
{
    if (choice.kind == FieldChoice::Kind::rational) {
        return f(RationalField{});
    }
    return f(PrimeField(choice.p));
}

} // namespace algpers
