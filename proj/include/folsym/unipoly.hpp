#pragma once

#include <algorithm>
#include <vector>

#include "folsym/quad.hpp"

namespace folsym {

/** Dense univariate polynomial over the quadratic tower. */
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(const QuadNumber& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    UniPoly(std::vector<QuadNumber> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly({QuadNumber(0), QuadNumber(1)}); }

    static UniPoly monomial(const QuadNumber& c, std::size_t k) {
        if (c.is_zero()) return {};
        std::vector<QuadNumber> v(k + 1);
        v[k] = c;
        return UniPoly(std::move(v));
    }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    QuadNumber coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : QuadNumber(0);
    }
    const QuadNumber& lc() const {
        if (c_.empty()) throw Error("leading coefficient of zero polynomial");
        return c_.back();
    }

    /** Index of the lowest nonzero coefficient; -1 for the zero polynomial. */
    int order_at_zero() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return (int)i;
        return -1;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<QuadNumber> v(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
        return UniPoly(std::move(v));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<QuadNumber> v(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        }
        return UniPoly(std::move(v));
    }

    UniPoly operator*(const QuadNumber& s) const {
        if (s.is_zero()) return {};
        UniPoly r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    /** Euclidean division; coefficients live in a field so this is exact. */
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        UniPoly q, r = *this;
        QuadNumber inv = d.lc().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t k = (std::size_t)(r.degree() - d.degree());
            QuadNumber f = r.lc() * inv;
            q = q + monomial(f, k);
            r = r - d * monomial(f, k);
        }
        return {q, r};
    }

    UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

    UniPoly monic() const {
        if (is_zero()) return {};
        return *this * lc().inverse();
    }

    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<QuadNumber> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * QuadNumber((long)i);
        return UniPoly(std::move(v));
    }

    QuadNumber eval(const QuadNumber& x) const {
        QuadNumber acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /** p(u + c). */
    UniPoly shift(const QuadNumber& c) const {
        UniPoly result, pw(QuadNumber(1));
        UniPoly base({c, QuadNumber(1)});
        for (std::size_t i = 0; i < c_.size(); ++i) {
            result = result + pw * c_[i];
            pw = pw * base;
        }
        return result;
    }

    /** u^deg * p(1/u). */
    UniPoly reversed() const {
        std::vector<QuadNumber> v(c_.rbegin(), c_.rend());
        return UniPoly(std::move(v));
    }

    /** Divide by u^k; requires the low coefficients to vanish. */
    UniPoly shr(std::size_t k) const {
        if (is_zero()) return {};
        if (order_at_zero() < (int)k) throw Error("shr would truncate nonzero terms");
        return UniPoly(std::vector<QuadNumber>(c_.begin() + k, c_.end()));
    }

    UniPoly pow(std::size_t k) const {
        UniPoly r(QuadNumber(1)), base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    /** Common radicand of the coefficients (0 if all rational). */
    Int radicand() const {
        Int d = 0;
        for (const auto& v : c_) {
            if (v.radicand() == 0) continue;
            if (d == 0)
                d = v.radicand();
            else if (d != v.radicand())
                throw FieldTowerMismatch("polynomial coefficients mix radicands");
        }
        return d;
    }

    std::string str(const std::string& var = "u") const;

    const std::vector<QuadNumber>& coeffs() const { return c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<QuadNumber> c_;
};

inline UniPoly operator*(const QuadNumber& s, const UniPoly& p) { return p * s; }

inline std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const QuadNumber c = coeff((std::size_t)i);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        bool composite = cs.find_first_of("+-") != std::string::npos &&
                         cs.find_first_of("+-", 1) != std::string::npos;
        if (i == 0) {
            out += composite && cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs;
            continue;
        }
        if (cs != "1") {
            if (cs.find(' ') != std::string::npos)
                out += "(" + cs + ")*";
            else
                out += cs + "*";
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

/**
 * Distinct roots of p inside the quadratic tower (with multiplicities).
 * Coefficients in Q may introduce the one allowed extension; coefficients
 * already in Q(sqrt(d)) must split there. Factors this cannot solve raise
 * UnsolvableSingularLocus naming the factor.
 */
struct RootList {
    std::vector<std::pair<QuadNumber, int>> roots;  // value, multiplicity
};

namespace detail {

inline std::vector<Rational> rational_root_candidates(const UniPoly& p) {
    // integer-scale, then divisors of trailing/leading coefficients
    Int lcm = 1;
    for (const auto& c : p.coeffs()) {
        if (!c.is_rational()) throw Error("rational_root_candidates: non-rational input");
        Int den = boost::multiprecision::denominator(c.rational_part());
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<Int> ic(p.coeffs().size());
    for (std::size_t i = 0; i < ic.size(); ++i) {
        Rational scaled = p.coeff(i).rational_part() * Rational(lcm);
        ic[i] = boost::multiprecision::numerator(scaled);
    }
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    Int a0 = ic[low] < 0 ? -ic[low] : ic[low];
    Int an = ic.back() < 0 ? -ic.back() : ic.back();
    auto divisors = [](Int n) {
        std::vector<Int> out;
        for (Int d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };
    std::vector<Rational> cands;
    for (const Int& pnum : divisors(a0))
        for (const Int& qden : divisors(an)) {
            cands.push_back(Rational(pnum, qden));
            cands.push_back(Rational(-pnum, qden));
        }
    return cands;
}

}  // namespace detail

inline RootList field_roots(UniPoly p) {
    RootList out;
    if (p.is_zero()) throw Error("field_roots of the zero polynomial");
    auto push = [&out, &p](const QuadNumber& r) {
        int mult = 0;
        UniPoly lin({-r, QuadNumber(1)});
        while (true) {
            auto [q, rem] = p.divmod(lin);
            if (!rem.is_zero()) break;
            p = q;
            ++mult;
        }
        if (mult > 0) out.roots.push_back({r, mult});
        return mult > 0;
    };

    int k = p.order_at_zero();
    if (k > 0) {
        p = p.shr((std::size_t)k);
        out.roots.push_back({QuadNumber(0), k});
    }
    if (p.is_constant()) return out;

    Int d = p.radicand();
    if (d == 0) {
        for (const Rational& cand : detail::rational_root_candidates(p)) {
            if (p.is_constant()) break;
            if (p.eval(QuadNumber(cand)).is_zero()) push(QuadNumber(cand));
        }
    }
    if (p.is_constant()) return out;

    if (p.degree() == 1) {
        push(-(p.coeff(0) / p.coeff(1)));
        return out;
    }
    if (p.degree() == 2) {
        QuadNumber A = p.coeff(2), B = p.coeff(1), C = p.coeff(0);
        QuadNumber disc = B * B - QuadNumber(4) * A * C;
        auto s = field_sqrt(disc, d);
        if (!s)
            throw UnsolvableSingularLocus("quadratic factor " + p.str() +
                                          " does not split in the quadratic tower");
        QuadNumber two_a = QuadNumber(2) * A;
        push((-B + *s) / two_a);
        if (!s->is_zero()) push((-B - *s) / two_a);
        return out;
    }
    // degree 3/4 leftovers: try the squarefree part and a biquadratic shortcut
    UniPoly sf = p / UniPoly::gcd(p, p.derivative());
    if (sf.degree() < p.degree() && sf.degree() >= 1) {
        RootList inner = field_roots(sf);
        bool all = true;
        for (auto& [r, m] : inner.roots) all = push(r) && all;
        if (p.is_constant() && all) return out;
    }
    bool even_only = true;
    for (int i = 1; i <= p.degree(); i += 2)
        if (!p.coeff((std::size_t)i).is_zero()) even_only = false;
    if (even_only && p.degree() <= 4) {
        std::vector<QuadNumber> half;
        for (int i = 0; i <= p.degree(); i += 2) half.push_back(p.coeff((std::size_t)i));
        RootList sq = field_roots(UniPoly(half));
        for (auto& [r, m] : sq.roots) {
            auto s = field_sqrt(r, d);
            if (!s)
                throw UnsolvableSingularLocus("factor " + p.str() +
                                              " does not split in the quadratic tower");
            push(*s);
            if (!s->is_zero()) push(-*s);
        }
        if (p.is_constant()) return out;
    }
    if (!p.is_constant())
        throw UnsolvableSingularLocus("irreducible factor " + p.str() +
                                      " is outside the quadratic tower");
    return out;
}

}  // namespace folsym
