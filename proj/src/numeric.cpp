#include "reprfn/numeric.hpp"

#include <cctype>

namespace reprfn {

std::string to_decimal_string(const Rational& x, unsigned digits) {
    const Int scale = pow_int(Int(10), digits);
    const Int scaled = floor(x * Rational(scale));
    const bool negative = scaled < 0;
    Int mag = negative ? Int(-scaled) : scaled;
    std::string whole = Int(mag / scale).str();
    std::string frac = Int(mag % scale).str();
    if (digits == 0) return (negative ? "-" : "") + whole;
    frac.insert(0, digits - frac.size(), '0');
    return (negative ? "-" : "") + whole + "." + frac;
}

Int parse_int(const std::string& text) {
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
    if (pos == text.size()) throw DomainError("not an integer: '" + text + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw DomainError("not an integer: '" + text + "'");
    }
    Int value(text.substr(pos));
    return text[0] == '-' ? Int(-value) : value;
}

}  // namespace reprfn
