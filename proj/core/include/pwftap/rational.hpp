#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pwftap {

/// Arbitrary-precision rational. Every quantity in the library is exact.
using Rational = mpq_class;

/// Per-scenario real-valued random variable (payoff, price increment, ...).
using Payoff = std::vector<Rational>;

/// Parses "p/q", "n", or a finite decimal literal such as "-0.25".
/// Throws std::invalid_argument on anything else (including q == 0).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written with denominator 1.
std::string to_string(const Rational& value);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Scales a nonzero vector to the primitive integer vector on the same ray
/// (positive multiple, coprime integer entries). The zero vector is returned as is.
std::vector<Rational> primitive_integer_direction(std::span<const Rational> v);

bool is_zero(std::span<const Rational> v);

/// A rational or minus infinity. Used for superhedging prices over empty
/// scenario sets and for suprema over empty measure sets.
class ExtendedRational {
public:
    static ExtendedRational minus_infinity() { return ExtendedRational(); }
    static ExtendedRational finite(Rational v) { return ExtendedRational(std::move(v)); }

    bool is_minus_infinity() const { return minus_infinity_; }
    bool is_finite() const { return !minus_infinity_; }

    /// Precondition: is_finite().
    const Rational& value() const;

    std::string to_string() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

private:
    ExtendedRational() = default;
    explicit ExtendedRational(Rational v) : value_(std::move(v)), minus_infinity_(false) {}

    Rational value_;
    bool minus_infinity_ = true;
};

}  // namespace pwftap
