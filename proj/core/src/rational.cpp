#include "pwftap/rational.hpp"

#include "pwftap/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pwftap {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("not an integer");
    }
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    try {
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            mpz_class num = parse_integer(text.substr(0, slash));
            std::string_view den_text = text.substr(slash + 1);
            if (!all_digits(den_text)) throw std::invalid_argument("bad denominator");
            mpz_class den(std::string(den_text), 10);
            if (den == 0) throw std::invalid_argument("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
            std::string_view int_part = text.substr(0, dot_pos);
            std::string_view frac_part = text.substr(dot_pos + 1);
            bool negative = !int_part.empty() && int_part.front() == '-';
            if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
            if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part)) {
                throw std::invalid_argument("bad decimal");
            }
            mpz_class whole = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
            mpz_class frac(std::string(frac_part), 10);
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
            Rational r(whole * scale + frac, scale);
            r.canonicalize();
            return negative ? Rational(-r) : r;
        }
        return Rational(parse_integer(text));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
    }
}

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
    }
    return sum;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::vector<Rational> primitive_integer_direction(std::span<const Rational> v) {
    std::vector<Rational> out(v.begin(), v.end());
    if (is_zero(v)) return out;
    mpz_class den_lcm = 1;
    for (const auto& x : v) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    mpz_class num_gcd = 0;
    for (const auto& x : v) {
        mpz_class scaled = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    for (auto& x : out) {
        x = Rational(x.get_num() * (den_lcm / x.get_den()) / num_gcd);
    }
    return out;
}

const Rational& ExtendedRational::value() const {
    if (minus_infinity_) {
        throw PreconditionError("ExtendedRational::value on minus infinity");
    }
    return value_;
}

std::string ExtendedRational::to_string() const {
    return minus_infinity_ ? std::string("-inf") : pwftap::to_string(value_);
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.minus_infinity_ || b.minus_infinity_) return a.minus_infinity_ == b.minus_infinity_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.minus_infinity_ && b.minus_infinity_) return std::strong_ordering::equal;
    if (a.minus_infinity_) return std::strong_ordering::less;
    if (b.minus_infinity_) return std::strong_ordering::greater;
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace pwftap
