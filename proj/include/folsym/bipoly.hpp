#pragma once

#include <map>
#include <utility>
#include <vector>

#include "folsym/unipoly.hpp"

namespace folsym {

/** Sparse bivariate polynomial over the quadratic tower; no zero terms stored. */
class BiPoly {
  public:
    using Key = std::pair<int, int>;  // (x exponent, y exponent)

    BiPoly() = default;
    BiPoly(const QuadNumber& c) {
        if (!c.is_zero()) t_[{0, 0}] = c;
    }
    BiPoly(int c) : BiPoly(QuadNumber(c)) {}

    static BiPoly var_x() { return monomial(QuadNumber(1), 1, 0); }
    static BiPoly var_y() { return monomial(QuadNumber(1), 0, 1); }

    static BiPoly monomial(const QuadNumber& c, int i, int j) {
        BiPoly p;
        if (!c.is_zero()) p.t_[{i, j}] = c;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0});
    }

    QuadNumber coeff(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? QuadNumber(0) : it->second;
    }

    int deg_x() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.first);
        return d;
    }
    int deg_y() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.second);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
        return d;
    }

    /** Smallest power of x (resp. y) dividing every term; 0 for the zero polynomial. */
    int order_in_x() const {
        if (t_.empty()) return 0;
        int m = INT32_MAX;
        for (const auto& [k, c] : t_) m = std::min(m, k.first);
        return m;
    }
    int order_in_y() const {
        if (t_.empty()) return 0;
        int m = INT32_MAX;
        for (const auto& [k, c] : t_) m = std::min(m, k.second);
        return m;
    }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& [k, c] : r.t_) c = -c;
        return r;
    }

    BiPoly operator+(const BiPoly& o) const {
        BiPoly r = *this;
        for (const auto& [k, c] : o.t_) r.add_term(k, c);
        return r;
    }
    BiPoly operator-(const BiPoly& o) const {
        BiPoly r = *this;
        for (const auto& [k, c] : o.t_) r.add_term(k, -c);
        return r;
    }

    BiPoly operator*(const BiPoly& o) const {
        BiPoly r;
        for (const auto& [k1, c1] : t_)
            for (const auto& [k2, c2] : o.t_)
                r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
        return r;
    }

    BiPoly operator*(const QuadNumber& s) const {
        if (s.is_zero()) return {};
        BiPoly r = *this;
        for (auto& [k, c] : r.t_) c *= s;
        return r;
    }

    bool operator==(const BiPoly& o) const { return t_ == o.t_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly pow(int k) const {
        if (k < 0) throw Error("negative polynomial power");
        BiPoly r(QuadNumber(1)), base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    QuadNumber eval(const QuadNumber& x, const QuadNumber& y) const {
        QuadNumber acc(0);
        for (const auto& [k, c] : t_) {
            QuadNumber term = c;
            for (int i = 0; i < k.first; ++i) term *= x;
            for (int j = 0; j < k.second; ++j) term *= y;
            acc += term;
        }
        return acc;
    }

    /** Substitute x -> px, y -> py. */
    BiPoly subst(const BiPoly& px, const BiPoly& py) const {
        BiPoly acc;
        for (const auto& [k, c] : t_)
            acc = acc + px.pow(k.first) * py.pow(k.second) * c;
        return acc;
    }

    BiPoly translate(const QuadNumber& cx, const QuadNumber& cy) const {
        return subst(var_x() + BiPoly(cx), var_y() + BiPoly(cy));
    }

    BiPoly swap_vars() const {
        BiPoly r;
        for (const auto& [k, c] : t_) r.t_[{k.second, k.first}] = c;
        return r;
    }

    BiPoly partial_x() const {
        BiPoly r;
        for (const auto& [k, c] : t_)
            if (k.first > 0) r.t_[{k.first - 1, k.second}] = c * QuadNumber(k.first);
        return r;
    }
    BiPoly partial_y() const {
        BiPoly r;
        for (const auto& [k, c] : t_)
            if (k.second > 0) r.t_[{k.first, k.second - 1}] = c * QuadNumber(k.second);
        return r;
    }

    /** Restriction to y = c, as a univariate polynomial in x. */
    UniPoly eval_y(const QuadNumber& c) const {
        std::vector<QuadNumber> v((std::size_t)std::max(deg_x() + 1, 1));
        for (const auto& [k, co] : t_) {
            QuadNumber term = co;
            for (int j = 0; j < k.second; ++j) term *= c;
            v[(std::size_t)k.first] += term;
        }
        return UniPoly(std::move(v));
    }
    UniPoly eval_x(const QuadNumber& c) const { return swap_vars().eval_y(c); }

    static BiPoly from_unipoly_x(const UniPoly& p) {
        BiPoly r;
        for (int i = 0; i <= p.degree(); ++i) {
            QuadNumber c = p.coeff((std::size_t)i);
            if (!c.is_zero()) r.t_[{i, 0}] = c;
        }
        return r;
    }
    static BiPoly from_unipoly_y(const UniPoly& p) { return from_unipoly_x(p).swap_vars(); }

    /** Coefficients of powers of y, each a univariate polynomial in x. */
    std::vector<UniPoly> y_coefficients() const {
        int dy = std::max(deg_y(), 0);
        std::vector<std::vector<QuadNumber>> rows((std::size_t)dy + 1);
        for (auto& r : rows) r.assign((std::size_t)std::max(deg_x() + 1, 1), QuadNumber(0));
        for (const auto& [k, c] : t_) rows[(std::size_t)k.second][(std::size_t)k.first] = c;
        std::vector<UniPoly> out;
        out.reserve(rows.size());
        for (auto& r : rows) out.emplace_back(std::move(r));
        return out;
    }

    static BiPoly from_y_coefficients(const std::vector<UniPoly>& rows) {
        BiPoly r;
        for (std::size_t j = 0; j < rows.size(); ++j)
            for (int i = 0; i <= rows[j].degree(); ++i)
                r.add_term({i, (int)j}, rows[j].coeff((std::size_t)i));
        return r;
    }

    /** Exact division; throws when the divisor does not divide. */
    BiPoly exact_div(const BiPoly& g) const {
        if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
        BiPoly r = *this, q;
        Key gk = g.t_.rbegin()->first;
        const QuadNumber& gc = g.t_.rbegin()->second;
        while (!r.is_zero()) {
            Key rk = r.t_.rbegin()->first;
            if (rk.first < gk.first || rk.second < gk.second)
                throw Error("exact_div: not divisible");
            Key qk{rk.first - gk.first, rk.second - gk.second};
            QuadNumber qc = r.t_.rbegin()->second / gc;
            q.add_term(qk, qc);
            r = r - g * monomial(qc, qk.first, qk.second);
        }
        return q;
    }

    bool divides(const BiPoly& f) const {
        try {
            f.exact_div(*this);
            return true;
        } catch (const Error&) {
            return false;
        }
    }

    /** Canonical associate: lex-leading coefficient scaled to 1. */
    BiPoly normalized() const {
        if (is_zero()) return {};
        return *this * t_.rbegin()->second.inverse();
    }

    static BiPoly gcd(const BiPoly& f, const BiPoly& g);

    Int radicand() const {
        Int d = 0;
        for (const auto& [k, c] : t_) {
            if (c.radicand() == 0) continue;
            if (d == 0)
                d = c.radicand();
            else if (d != c.radicand())
                throw FieldTowerMismatch("polynomial coefficients mix radicands");
        }
        return d;
    }

    std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

    const std::map<Key, QuadNumber>& terms() const { return t_; }

  private:
    void add_term(const Key& k, const QuadNumber& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::map<Key, QuadNumber> t_;
};

inline BiPoly operator*(const QuadNumber& s, const BiPoly& p) { return p * s; }

namespace detail {

/** Content of f in K[x][y]: univariate gcd of the y-coefficients. */
inline UniPoly bipoly_content(const BiPoly& f) {
    UniPoly c;
    for (const auto& row : f.y_coefficients()) c = UniPoly::gcd(c, row);
    return c;
}

inline BiPoly divide_rows(const BiPoly& f, const UniPoly& c) {
    auto rows = f.y_coefficients();
    for (auto& r : rows) {
        auto [q, rem] = r.divmod(c);
        if (!rem.is_zero()) throw Error("content division failed");
        r = q;
    }
    return BiPoly::from_y_coefficients(rows);
}

/** Pseudo-remainder of f by g, both viewed in K[x][y] with deg_y g >= 1. */
inline BiPoly pseudo_rem(BiPoly f, const BiPoly& g) {
    auto grows = g.y_coefficients();
    int dg = g.deg_y();
    UniPoly lg = grows.back();
    BiPoly lg_b = BiPoly::from_unipoly_x(lg);
    while (!f.is_zero() && f.deg_y() >= dg) {
        auto frows = f.y_coefficients();
        int df = f.deg_y();
        BiPoly lead = BiPoly::from_unipoly_x(frows.back());
        f = f * lg_b - g * lead * BiPoly::monomial(QuadNumber(1), 0, df - dg);
    }
    return f;
}

}  // namespace detail

inline BiPoly BiPoly::gcd(const BiPoly& f0, const BiPoly& g0) {
    if (f0.is_zero()) return g0.normalized();
    if (g0.is_zero()) return f0.normalized();
    BiPoly f = f0, g = g0;
    if (f.deg_y() < g.deg_y()) std::swap(f, g);
    if (g.deg_y() == 0) {
        // g is univariate in x: answer is the univariate gcd with the content of f
        UniPoly u = UniPoly::gcd(detail::bipoly_content(f), g.y_coefficients()[0]);
        return BiPoly::from_unipoly_x(u).normalized();
    }
    UniPoly cf = detail::bipoly_content(f);
    UniPoly cg = detail::bipoly_content(g);
    UniPoly d = UniPoly::gcd(cf, cg);
    f = detail::divide_rows(f, cf);
    g = detail::divide_rows(g, cg);
    while (true) {
        BiPoly r = detail::pseudo_rem(f, g);
        if (r.is_zero()) break;
        if (r.deg_y() == 0) {
            g = BiPoly(QuadNumber(1));
            break;
        }
        f = g;
        g = detail::divide_rows(r, detail::bipoly_content(r));
    }
    return (BiPoly::from_unipoly_x(d) * g).normalized();
}

/** Determinant of a matrix of univariate polynomials (fraction-free Bareiss). */
inline UniPoly poly_det(std::vector<std::vector<UniPoly>> m) {
    std::size_t n = m.size();
    if (n == 0) return UniPoly(QuadNumber(1));
    int sign = 1;
    UniPoly prev(QuadNumber(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return UniPoly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                UniPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto [q, rem] = num.divmod(prev);
                if (!rem.is_zero()) throw Error("Bareiss division not exact");
                m[i][j] = q;
            }
        prev = m[k][k];
    }
    UniPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/** Resultant of f and g with respect to y, a univariate polynomial in x. */
inline UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero()) return UniPoly();
    int df = f.deg_y(), dg = g.deg_y();
    if (df == 0 && dg == 0) return UniPoly(QuadNumber(1));
    if (df == 0) return f.y_coefficients()[0].pow((std::size_t)dg);
    if (dg == 0) return g.y_coefficients()[0].pow((std::size_t)df);
    auto fr = f.y_coefficients();
    auto gr = g.y_coefficients();
    std::size_t n = (std::size_t)(df + dg);
    std::vector<std::vector<UniPoly>> s(n, std::vector<UniPoly>(n));
    for (int row = 0; row < dg; ++row)
        for (int i = 0; i <= df; ++i) s[(std::size_t)row][(std::size_t)(row + i)] = fr[(std::size_t)(df - i)];
    for (int row = 0; row < df; ++row)
        for (int i = 0; i <= dg; ++i)
            s[(std::size_t)(dg + row)][(std::size_t)(row + i)] = gr[(std::size_t)(dg - i)];
    return poly_det(std::move(s));
}

inline std::string BiPoly::str(const std::string& vx, const std::string& vy) const {
    if (is_zero()) return "0";
    // highest total degree first, then lex
    std::vector<std::pair<Key, QuadNumber>> terms(t_.begin(), t_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [k, c] : terms) {
        std::string cs = c.str();
        bool compound = cs.find(' ') != std::string::npos;
        bool neg = !compound && !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        bool is_one = (cs == "1");
        bool has_vars = k.first > 0 || k.second > 0;
        if (!is_one || !has_vars) {
            if (compound) cs = "(" + cs + ")";
            out += cs;
            if (has_vars) out += "*";
        }
        if (k.first > 0) {
            out += vx;
            if (k.first > 1) out += "^" + std::to_string(k.first);
            if (k.second > 0) out += "*";
        }
        if (k.second > 0) {
            out += vy;
            if (k.second > 1) out += "^" + std::to_string(k.second);
        }
    }
    return out;
}

}  // namespace folsym
