#ifndef CHIPFIRE_RATIONAL_HPP
#define CHIPFIRE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace chipfire {

// All arithmetic in this library is exact: big integers for determinants,
// rationals for interval endpoints and region coordinates.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "p/q", and plain decimal fractions like "2.5".
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed rational literal: " + s);
        bool neg = !head.empty() && head[0] == '-';
        Int den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        Int whole = head.empty() || head == "-" ? Int(0) : Int(head);
        Int frac = tail.empty() ? Int(0) : Int(tail);
        Int num = whole * den + (neg ? -frac : frac);
        return Rat(num, den);
    }
    return Rat(Int(s));
}

}  // namespace chipfire

#endif
