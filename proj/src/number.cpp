#include "qtoric/number.hpp"

#include "qtoric/errors.hpp"

#include <cmath>
#include <regex>

namespace qtoric {

BigRational parse_rational(const std::string& text) {
    static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern)) {
        throw ParseError("not a rational number: '" + text + "'");
    }
    BigInt numerator(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
    BigInt denominator = match[2].matched ? BigInt(match[2].str()) : BigInt(1);
    if (denominator == 0) {
        throw ParseError("zero denominator in '" + text + "'");
    }
    return BigRational(numerator, denominator);
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const BigRational& value) {
    if (boost::multiprecision::denominator(value) == 1) {
        return boost::multiprecision::numerator(value).str();
    }
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

Sqrt2Number Sqrt2Number::inverse() const {
    const BigRational n = norm();
    if (n == 0) {
        throw std::domain_error("inverse of zero in Q(sqrt2)");
    }
    return {rational_ / n, -sqrt2_ / n};
}

Sqrt2Number& Sqrt2Number::operator+=(const Sqrt2Number& rhs) {
    rational_ += rhs.rational_;
    sqrt2_ += rhs.sqrt2_;
    return *this;
}

Sqrt2Number& Sqrt2Number::operator-=(const Sqrt2Number& rhs) {
    rational_ -= rhs.rational_;
    sqrt2_ -= rhs.sqrt2_;
    return *this;
}

Sqrt2Number& Sqrt2Number::operator*=(const Sqrt2Number& rhs) {
    BigRational a = rational_ * rhs.rational_ + 2 * sqrt2_ * rhs.sqrt2_;
    BigRational b = rational_ * rhs.sqrt2_ + sqrt2_ * rhs.rational_;
    rational_ = std::move(a);
    sqrt2_ = std::move(b);
    return *this;
}

Sqrt2Number& Sqrt2Number::operator/=(const Sqrt2Number& rhs) {
    if (rhs.sqrt2_ == 0) {
        if (rhs.rational_ == 0) {
            throw std::domain_error("division by zero in Q(sqrt2)");
        }
        rational_ /= rhs.rational_;
        sqrt2_ /= rhs.rational_;
        return *this;
    }
    return *this *= rhs.inverse();
}

std::strong_ordering operator<=>(const Sqrt2Number& lhs, const Sqrt2Number& rhs) {
    const int s = sign_sqrt2(lhs - rhs);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

int sign_sqrt2(const Sqrt2Number& x) {
    const int sa = x.rational_part().sign();
    const int sb = x.sqrt2_part().sign();
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // Opposite signs: the term with the larger square wins.
    const BigRational a2 = x.rational_part() * x.rational_part();
    const BigRational b2 = 2 * x.sqrt2_part() * x.sqrt2_part();
    if (a2 > b2) return sa;
    if (a2 < b2) return sb;
    return 0;  // unreachable for nonzero input, a^2 = 2b^2 has no rational solution
}

std::string to_string(const Sqrt2Number& value) {
    if (value.is_rational()) return to_string(value.rational_part());
    std::string out;
    if (value.rational_part() != 0) {
        out = to_string(value.rational_part());
        out += value.sqrt2_part() < 0 ? " - " : " + ";
        out += to_string(BigRational(abs(value.sqrt2_part())));
    } else {
        out = to_string(value.sqrt2_part());
    }
    return out + "*sqrt2";
}

double approximate(const Sqrt2Number& value) {
    return value.rational_part().convert_to<double>() +
           value.sqrt2_part().convert_to<double>() * std::sqrt(2.0);
}

}  // namespace qtoric
