#pragma once

#include <string>
#include <vector>

#include "intdiff/rational.hpp"

namespace intdiff {

// Univariate polynomial in the symbol H with rational coefficients,
// stored densely by degree. The zero polynomial has no coefficients;
// otherwise the leading coefficient is nonzero.
class HPoly {
public:
    HPoly() = default;
    HPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    HPoly(int c) : HPoly(Rational(c)) {}
    explicit HPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static HPoly variable() { return HPoly(std::vector<Rational>{0, 1}); }  // H itself

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t k) const {
        static const Rational zero = 0;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const HPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const HPoly& o) const { return coeffs_ != o.coeffs_; }

    HPoly operator-() const {
        HPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    HPoly& operator+=(const HPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    HPoly& operator-=(const HPoly& o) { return *this += -o; }

    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }

    friend HPoly operator*(const HPoly& a, const HPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return HPoly(std::move(out));
    }

    friend HPoly operator*(const Rational& s, const HPoly& p) {
        if (s == 0) return {};
        HPoly r = p;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    Rational eval(const Rational& at) const {
        Rational v = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * at + *it;
        return v;
    }

    // f(H) -> f(H + k), expanded. Horner in (H + k).
    HPoly shift(const Integer& k) const {
        if (is_zero() || k == 0) return *this;
        HPoly hk(std::vector<Rational>{Rational(k), 1});
        HPoly r;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            r = r * hk;
            r += HPoly(*it);
        }
        return r;
    }
    HPoly shift(long k) const { return shift(Integer(k)); }

    // (H - root)^n
    static HPoly power_of_linear(const Rational& root, unsigned n) {
        HPoly lin(std::vector<Rational>{-root, 1});
        HPoly r(1);
        for (unsigned i = 0; i < n; ++i) r = r * lin;
        return r;
    }

    // Renders terms in descending degree: "H^2 - 4*H + 3", "1/2*H", "-H + 1".
    // Single-coefficient conventions match the canonical-form printer.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (long d = degree(); d >= 0; --d) {
            const Rational& c = coeffs_[static_cast<std::size_t>(d)];
            if (c == 0) continue;
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mag;
            if (d == 0) {
                mag = to_string(a);
            } else {
                std::string xs = d == 1 ? "H" : "H^" + std::to_string(d);
                mag = a == 1 ? xs : to_string(a) + "*" + xs;
            }
            out += mag;
        }
        return out;
    }

    // number of '+'/'-'-separated terms in str(); used by the printer to
    // decide parenthesization
    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_)
            if (c != 0) ++n;
        return n;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline HPoly hpoly_shift(const HPoly& f, long k) { return f.shift(k); }
inline Rational hpoly_eval(const HPoly& f, const Rational& c) { return f.eval(c); }

}  // namespace intdiff
