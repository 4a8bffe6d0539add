#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sympb {

using Rat = boost::multiprecision::cpp_rational;

inline Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            // Accept plain integers and decimal fractions.
            auto dot = text.find('.');
            if (dot == std::string::npos) return Rat(boost::multiprecision::cpp_int(text));
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            bool neg = !digits.empty() && digits[0] == '-';
            boost::multiprecision::cpp_int num(digits);
            boost::multiprecision::cpp_int den = 1;
            for (size_t k = dot + 1; k < text.size(); ++k) den *= 10;
            (void)neg;
            return Rat(num, den);
        }
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    }
}

inline std::string to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace sympb
