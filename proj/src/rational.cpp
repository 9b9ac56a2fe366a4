#include "talex/rational.hpp"

#include <cctype>

#include "talex/errors.hpp"

namespace talex {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const size_t slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);

    std::string digits = num;
    bool negative = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        negative = digits[0] == '-';
        digits = digits.substr(1);
    }
    if (!all_digits(digits, 0, digits.size()) || !all_digits(den, 0, den.size())) {
        throw Error("malformed rational '" + text + "'");
    }

    Rational value((negative ? "-" : "") + digits + "/" + den);
    if (value.get_den() == 0) throw DivisionByZero("zero denominator in '" + text + "'");
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

}  // namespace talex
