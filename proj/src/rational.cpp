#include "ecg/rational.hpp"

#include "ecg/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ecg {

std::string to_fraction(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    std::string_view num_part = body;
    std::string_view den_part;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
        if (!all_digits(den_part)) {
            throw ValidationError("invalid rational '" + std::string(text) +
                                  "': denominator must be a positive integer");
        }
    }
    if (!all_digits(num_part)) {
        throw ValidationError("invalid rational '" + std::string(text) + "'");
    }

    Integer num{std::string(num_part)};
    Integer den = den_part.empty() ? Integer(1) : Integer(std::string(den_part));
    if (den == 0) {
        throw ValidationError("invalid rational '" + std::string(text) +
                              "': denominator is zero");
    }
    if (negative) {
        num = -num;
    }
    // The two-argument constructor canonicalizes (positive denominator input).
    return Rational(num, den);
}

}  // namespace ecg
