#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "intdiff/hpoly.hpp"
#include "intdiff/rational.hpp"

namespace intdiff {

// Generators of the algebra of polynomial integro-differential operators:
// x (multiplication), Del (d/dx), Int (integration from 0), Hgen = Del*x,
// and the matrix units Eij acting on the divided-power basis.
struct GenX {};
struct GenDel {};
struct GenInt {};
struct GenH {};
struct GenEij {
    long i, j;
};
using Generator = std::variant<GenX, GenDel, GenInt, GenH, GenEij>;

using Word = std::vector<Generator>;
// A signed, weighted sum of generator words; the general input of
// normalization.
using WordSum = std::vector<std::pair<Rational, Word>>;

// Canonical form of an operator: a finite sum
//
//     sum_i  b_i(H) * v_i   +   sum_{i,j >= 0}  c_ij * e(i,j)
//
// where v_i is the i-th power of the integral for i > 0, the identity for
// i = 0 and the |i|-th power of the derivative for i < 0, and
// e(i,j) = v_i e(0,0) v_{-j} are the matrix units. Both maps are sparse:
// stored coefficients are nonzero. Two operators are equal iff the maps
// are equal, which makes equality, printing and hashing trivial.
class CanonicalOperator {
public:
    using DiagMap = std::map<long, HPoly>;                      // grade -> b_i(H)
    using MatMap = std::map<std::pair<long, long>, Rational>;   // (i,j) -> c_ij

    CanonicalOperator() = default;

    static CanonicalOperator zero() { return {}; }
    static CanonicalOperator one() { return diag_term(0, HPoly(1)); }
    static CanonicalOperator del() { return diag_term(-1, HPoly(1)); }
    static CanonicalOperator integral() { return diag_term(1, HPoly(1)); }
    static CanonicalOperator h() { return diag_term(0, HPoly::variable()); }
    // x = Int * H = (H - 1) * Int
    static CanonicalOperator x() {
        return diag_term(1, HPoly(std::vector<Rational>{-1, 1}));
    }
    static CanonicalOperator scalar(const Rational& c) { return diag_term(0, HPoly(c)); }

    static CanonicalOperator diag_term(long grade, HPoly b) {
        CanonicalOperator a;
        if (!b.is_zero()) a.diag_[grade] = std::move(b);
        return a;
    }

    static CanonicalOperator eij(long i, long j) {
        if (i < 0 || j < 0) throw error("matrix unit indices must be nonnegative");
        CanonicalOperator a;
        a.mat_[{i, j}] = 1;
        return a;
    }

    const DiagMap& diag() const { return diag_; }
    const MatMap& mat() const { return mat_; }

    bool is_zero() const { return diag_.empty() && mat_.empty(); }
    bool operator==(const CanonicalOperator& o) const { return diag_ == o.diag_ && mat_ == o.mat_; }
    bool operator!=(const CanonicalOperator& o) const { return !(*this == o); }

    void add_diag(long grade, const HPoly& b) {
        if (b.is_zero()) return;
        auto it = diag_.find(grade);
        if (it == diag_.end()) {
            diag_.emplace(grade, b);
        } else {
            it->second += b;
            if (it->second.is_zero()) diag_.erase(it);
        }
    }

    void add_mat(long i, long j, const Rational& c) {
        if (c == 0) return;
        auto key = std::make_pair(i, j);
        auto it = mat_.find(key);
        if (it == mat_.end()) {
            mat_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) mat_.erase(it);
        }
    }

    CanonicalOperator operator-() const {
        CanonicalOperator r;
        for (const auto& [g, b] : diag_) r.diag_.emplace(g, -b);
        for (const auto& [ij, c] : mat_) r.mat_.emplace(ij, -c);
        return r;
    }

    friend CanonicalOperator operator+(const CanonicalOperator& a, const CanonicalOperator& b) {
        CanonicalOperator r = a;
        for (const auto& [g, p] : b.diag_) r.add_diag(g, p);
        for (const auto& [ij, c] : b.mat_) r.add_mat(ij.first, ij.second, c);
        return r;
    }
    friend CanonicalOperator operator-(const CanonicalOperator& a, const CanonicalOperator& b) {
        return a + (-b);
    }

    friend CanonicalOperator operator*(const Rational& s, const CanonicalOperator& a) {
        CanonicalOperator r;
        if (s == 0) return r;
        for (const auto& [g, b] : a.diag_) r.diag_.emplace(g, s * b);
        for (const auto& [ij, c] : a.mat_) r.mat_.emplace(ij, s * c);
        return r;
    }

    // Product in canonical form. Reductions used:
    //   v_i f(H) = f(H - i) v_i
    //   v_i v_j  = v_{i+j}                   unless i > 0 > j
    //   v_i v_j  = v_{i+j} - sum_{k<c} e(k + i - c, k - j - c),  c = min(i,-j), i > 0 > j
    //              (telescoping 1 - v_m v_{-m} = e(0,0) + ... + e(m-1,m-1))
    //   f(H) e(i,j) = f(i+1) e(i,j),  e(i,j) f(H) = f(j+1) e(i,j)
    //   v_k e(i,j) = e(i+k, j) or 0,  e(i,j) v_k = e(i, j-k) or 0
    //   e(i,j) e(k,l) = delta_jk e(i,l)
    friend CanonicalOperator operator*(const CanonicalOperator& a, const CanonicalOperator& b) {
        CanonicalOperator r;
        for (const auto& [i, f] : a.diag_) {
            for (const auto& [j, g] : b.diag_) {
                HPoly h = f * g.shift(-i);  // b-side polynomial commuted across v_i
                long grade = i + j;
                r.add_diag(grade, h);
                if (i > 0 && j < 0) {
                    long c = std::min(i, -j);
                    for (long k = 0; k < c; ++k) {
                        long s = k + i - c, t = k - j - c;
                        r.add_mat(s, t, -h.eval(Rational(s + 1)));
                    }
                }
            }
            for (const auto& [st, cb] : b.mat_) {
                long s = st.first + i;  // v_i shifts the row index
                if (s < 0) continue;
                r.add_mat(s, st.second, cb * f.eval(Rational(s + 1)));
            }
        }
        for (const auto& [st, ca] : a.mat_) {
            for (const auto& [j, g] : b.diag_) {
                long t = st.second - j;  // e(s,t) v_j = e(s, t-j)
                if (t < 0) continue;
                r.add_mat(st.first, t, ca * g.eval(Rational(st.second + 1)));
            }
            for (const auto& [uv, cb] : b.mat_) {
                if (st.second != uv.first) continue;
                r.add_mat(st.first, uv.second, ca * cb);
            }
        }
        return r;
    }

    CanonicalOperator pow(unsigned e) const {
        CanonicalOperator r = one();
        for (unsigned k = 0; k < e; ++k) r = r * (*this);
        return r;
    }

    // Grade-k component of the Z-grading: b_k v_k plus all e(i,j) with i - j = k.
    CanonicalOperator grade_component(long k) const {
        CanonicalOperator r;
        auto it = diag_.find(k);
        if (it != diag_.end()) r.diag_.emplace(k, it->second);
        for (const auto& [ij, c] : mat_)
            if (ij.first - ij.second == k) r.mat_.emplace(ij, c);
        return r;
    }

    std::vector<long> grades() const {
        std::vector<long> gs;
        for (const auto& [g, b] : diag_) gs.push_back(g);
        for (const auto& [ij, c] : mat_) gs.push_back(ij.first - ij.second);
        std::sort(gs.begin(), gs.end());
        gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
        return gs;
    }

    // Largest positive grade with a nonzero component (0 if none): an
    // operator raises polynomial degree by at most this much.
    long max_positive_grade() const {
        long g = 0;
        if (!diag_.empty()) g = std::max(g, diag_.rbegin()->first);
        for (const auto& [ij, c] : mat_) g = std::max(g, ij.first - ij.second);
        return g;
    }

    long max_abs_grade() const {
        long g = 0;
        for (const auto& [gr, b] : diag_) g = std::max(g, std::abs(gr));
        for (const auto& [ij, c] : mat_) g = std::max(g, std::abs(ij.first - ij.second));
        return g;
    }

    long max_mat_col() const {
        long j = -1;
        for (const auto& [ij, c] : mat_) j = std::max(j, ij.second);
        return j;
    }

    long max_mat_row() const {
        long i = -1;
        for (const auto& [ij, c] : mat_) i = std::max(i, ij.first);
        return i;
    }

    long max_hdegree() const {
        long d = 0;
        for (const auto& [g, b] : diag_) d = std::max(d, b.degree());
        return d;
    }

    // Membership in the ideal spanned by the matrix units.
    bool is_in_F() const { return diag_.empty(); }

private:
    DiagMap diag_;
    MatMap mat_;
};

inline CanonicalOperator op_add(const CanonicalOperator& a, const CanonicalOperator& b) { return a + b; }
inline CanonicalOperator op_mul(const CanonicalOperator& a, const CanonicalOperator& b) { return a * b; }
inline CanonicalOperator make_eij(long i, long j) { return CanonicalOperator::eij(i, j); }
inline CanonicalOperator grade_component(const CanonicalOperator& a, long k) { return a.grade_component(k); }
inline bool is_in_F(const CanonicalOperator& a) { return a.is_in_F(); }

inline CanonicalOperator to_operator(const Generator& g) {
    struct V {
        CanonicalOperator operator()(GenX) const { return CanonicalOperator::integral() * CanonicalOperator::h(); }
        CanonicalOperator operator()(GenDel) const { return CanonicalOperator::del(); }
        CanonicalOperator operator()(GenInt) const { return CanonicalOperator::integral(); }
        CanonicalOperator operator()(GenH) const { return CanonicalOperator::h(); }
        CanonicalOperator operator()(GenEij e) const { return CanonicalOperator::eij(e.i, e.j); }
    };
    return std::visit(V{}, g);
}

// Canonical form of a signed sum of generator words. The empty word is
// the identity; re-normalizing a canonical form is the identity map.
inline CanonicalOperator normalize_word(const WordSum& ws) {
    CanonicalOperator total;
    for (const auto& [coeff, word] : ws) {
        CanonicalOperator prod = CanonicalOperator::one();
        for (const Generator& g : word) prod = prod * to_operator(g);
        total = total + coeff * prod;
    }
    return total;
}

// ---------------------------------------------------------------------------
// The quotient by F: the skew Laurent algebra K[H][p, p^-1] with
// p f(H) = f(H+1) p, where p is the image of the derivative and p^-1 the
// image of the integral. Stored by grade like the diagonal part (grade i
// holds b_i(H) p^-i).

class B1Element {
public:
    using Map = std::map<long, HPoly>;

    B1Element() = default;
    explicit B1Element(Map m) : terms_(std::move(m)) { sparsify(); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const B1Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const B1Element& o) const { return !(*this == o); }

    friend B1Element operator+(const B1Element& a, const B1Element& b) {
        B1Element r = a;
        for (const auto& [g, p] : b.terms_) {
            r.terms_[g] += p;
            if (r.terms_[g].is_zero()) r.terms_.erase(g);
        }
        return r;
    }

    friend B1Element operator*(const B1Element& a, const B1Element& b) {
        B1Element r;
        for (const auto& [i, f] : a.terms_)
            for (const auto& [j, g] : b.terms_) {
                HPoly h = f * g.shift(-i);
                r.terms_[i + j] += h;
                if (r.terms_[i + j].is_zero()) r.terms_.erase(i + j);
            }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [g, b] : terms_) {
            std::string suffix;
            if (g != 0) suffix = "*D^" + std::to_string(-g);
            std::string body;
            if (b.term_count() > 1)
                body = "(" + b.str() + ")" + suffix;
            else {
                std::string s = b.str();
                bool neg = !s.empty() && s[0] == '-';
                if (neg) s = s.substr(1);
                if (g != 0 && s == "1")
                    body = (neg ? "-" : "") + suffix.substr(1);
                else
                    body = (neg ? "-" : "") + s + suffix;
            }
            if (first) {
                out = body;
                first = false;
            } else if (!body.empty() && body[0] == '-') {
                out += " - " + body.substr(1);
            } else {
                out += " + " + body;
            }
        }
        return out;
    }

private:
    void sparsify() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    Map terms_;
};

// Quotient map onto B1: drops the matrix part. Ring map with kernel F.
inline B1Element project_to_B1(const CanonicalOperator& a) {
    B1Element::Map m;
    for (const auto& [g, b] : a.diag()) m.emplace(g, b);
    return B1Element(std::move(m));
}

// ---------------------------------------------------------------------------
// Canonical printing. Diagonal terms in ascending grade as "b(H)*D^k" /
// "b(H)" / "b(H)*I^k", then matrix terms "c*e(i,j)" in lexicographic
// order. The output re-parses (via the expression grammar) to the same
// canonical form.

namespace detail {

inline std::string v_suffix(long grade) {
    if (grade == 0) return "";
    std::string letter = grade > 0 ? "I" : "D";
    long p = std::abs(grade);
    return p == 1 ? "*" + letter : "*" + letter + "^" + std::to_string(p);
}

// renders one signed part; the caller joins parts with " + " / " - "
inline std::string diag_part(long grade, const HPoly& b) {
    if (b.term_count() > 1) {
        // a grade-0 polynomial splices into the top-level sum as is
        if (grade == 0) return b.str();
        return "(" + b.str() + ")" + v_suffix(grade);
    }
    std::string s = b.str();  // single monomial, possibly with sign
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    std::string suffix = v_suffix(grade);
    std::string body;
    if (grade != 0 && s == "1")
        body = suffix.substr(1);  // drop "1*": "I^2" not "1*I^2"
    else
        body = s + suffix;
    return neg ? "-" + body : body;
}

}  // namespace detail

inline std::string pretty_print(const CanonicalOperator& a) {
    if (a.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [g, b] : a.diag()) parts.push_back(detail::diag_part(g, b));
    for (const auto& [ij, c] : a.mat()) {
        std::string e = "e(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")";
        if (c == 1)
            parts.push_back(e);
        else if (c == -1)
            parts.push_back("-" + e);
        else
            parts.push_back(to_string(c) + "*" + e);
    }
    std::string out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) {
        if (parts[k][0] == '-')
            out += " - " + parts[k].substr(1);
        else
            out += " + " + parts[k];
    }
    return out;
}

}  // namespace intdiff
