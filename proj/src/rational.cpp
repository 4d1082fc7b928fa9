#include "lll/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "lll/errors.hpp"

namespace lll {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("rational denominator must be nonzero");
    }
    // Divide instead of using the two-argument constructor: division reduces
    // to lowest terms and moves the sign to the numerator, which the
    // constructor rejects as a singular value when den < 0.
    return Rational(num) / Rational(den);
}

bool is_probability(const Rational& r) {
    return r >= 0 && r <= 1;
}

std::string to_fraction_string(const Rational& r) {
    std::string out = numerator(r).str();
    out += '/';
    out += denominator(r).str();
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt parse_digits(std::string_view s) {
    return BigInt(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) {
        throw DomainError("empty rational literal");
    }

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw DomainError("malformed rational literal: " + std::string(text));
        }
        BigInt d = parse_digits(den);
        if (d == 0) {
            throw DomainError("rational literal has zero denominator: " + std::string(text));
        }
        value = Rational(parse_digits(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac))) {
            throw DomainError("malformed rational literal: " + std::string(text));
        }
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = whole.empty() ? BigInt(0) : parse_digits(whole);
        num *= scale;
        if (!frac.empty()) num += parse_digits(frac);
        value = Rational(num, scale);
    } else {
        if (!all_digits(s)) {
            throw DomainError("malformed rational literal: " + std::string(text));
        }
        value = Rational(parse_digits(s));
    }

    if (negative) value = -value;
    return value;
}

double to_double_approx(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace lll
