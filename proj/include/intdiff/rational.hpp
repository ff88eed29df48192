#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "intdiff/errors.hpp"

namespace intdiff {

// Exact arithmetic over the rationals. cpp_rational keeps values reduced
// with a positive denominator, which is exactly the canonical form we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

// Largest integer <= r.
inline Integer rat_floor(const Rational& r) {
    Integer q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

inline std::string to_string(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Parses "p", "-p", "p/q" with optional sign on p. The shared literal
// syntax of the CLI grammar and the module file format.
inline Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> Rational { throw parse_error(msg, i); };
    if (text.empty()) return fail("empty rational literal");
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        return fail("expected digits");
    Integer num = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        num = num * 10 + (text[i++] - '0');
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            return fail("expected digits after '/'");
        den = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            den = den * 10 + (text[i++] - '0');
        if (den == 0) return fail("zero denominator");
    }
    if (i != text.size()) return fail("trailing characters in rational literal");
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

// A coset in K/Z, stored as its unique representative in [0,1).
class WeightClass {
public:
    WeightClass() : rep_(0) {}
    explicit WeightClass(const Rational& rep) : rep_(rep) {
        if (rep_ < 0 || rep_ >= 1) throw error("weight class representative outside [0,1)");
    }

    const Rational& representative() const { return rep_; }
    bool operator==(const WeightClass& o) const { return rep_ == o.rep_; }
    bool operator!=(const WeightClass& o) const { return rep_ != o.rep_; }
    bool operator<(const WeightClass& o) const { return rep_ < o.rep_; }

private:
    Rational rep_;
};

// lambda and mu map to the same class iff lambda - mu is an integer.
inline WeightClass weight_class_of(const Rational& lambda) {
    return WeightClass(lambda - Rational(rat_floor(lambda)));
}

}  // namespace intdiff
