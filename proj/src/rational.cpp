#include "pgg/rational.hpp"

#include "pgg/errors.hpp"

namespace pgg {

std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ValidationError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ValidationError("malformed rational: " + text);
    }
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace pgg
