#pragma once

#include "folsym/unipoly.hpp"

namespace folsym {

/** Reduced univariate rational function; denominator is kept monic. */
class UniRat {
  public:
    UniRat() : num_(), den_(QuadNumber(1)) {}
    UniRat(UniPoly num, UniPoly den = UniPoly(QuadNumber(1))) {
        if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
        UniPoly g = UniPoly::gcd(num, den);
        if (!g.is_zero() && g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        QuadNumber inv = den.lc().inverse();
        num_ = num * inv;
        den_ = den * inv;
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    UniRat operator+(const UniRat& o) const {
        return UniRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    UniRat operator-(const UniRat& o) const {
        return UniRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    UniRat operator*(const UniRat& o) const { return UniRat(num_ * o.num_, den_ * o.den_); }
    UniRat operator/(const UniRat& o) const {
        if (o.is_zero()) throw DivisionByZero("division by zero rational function");
        return UniRat(num_ * o.den_, den_ * o.num_);
    }
    UniRat operator-() const { return UniRat(-num_, den_); }

    bool operator==(const UniRat& o) const { return num_ == o.num_ && den_ == o.den_; }

    UniRat derivative() const {
        return UniRat(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    QuadNumber eval(const QuadNumber& x) const {
        QuadNumber d = den_.eval(x);
        if (d.is_zero()) throw DivisionByZero("evaluation at a pole");
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "u") const {
        if (den_ == UniPoly(QuadNumber(1))) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

  private:
    UniPoly num_, den_;
};

/**
 * Residue of f at u = p: the u^{-1} coefficient of the Laurent expansion,
 * computed by exact power-series division after shifting p to the origin.
 */
inline QuadNumber residue_at(const UniRat& f, const QuadNumber& p) {
    UniPoly n = f.num().shift(p);
    UniPoly d = f.den().shift(p);
    int m = d.order_at_zero();
    if (m <= 0) return QuadNumber(0);
    UniPoly dt = d.shr((std::size_t)m);  // unit part, dt(0) != 0
    // series coefficients of n/dt up to u^{m-1}
    QuadNumber d0 = dt.coeff(0);
    std::vector<QuadNumber> series((std::size_t)m);
    for (std::size_t k = 0; k < series.size(); ++k) {
        QuadNumber acc = n.coeff(k);
        for (std::size_t j = 1; j <= k; ++j) acc -= dt.coeff(j) * series[k - j];
        series[k] = acc / d0;
    }
    return series[(std::size_t)m - 1];
}

/** Residue at infinity: -res_0 of f(1/u)/u^2. */
inline QuadNumber residue_at_infinity(const UniRat& f) {
    if (f.is_zero()) return QuadNumber(0);
    UniPoly p = f.num().reversed();
    UniPoly q = f.den().reversed();
    int e = f.den().degree() - f.num().degree() - 2;
    UniRat g = e >= 0 ? UniRat(p * UniPoly::monomial(QuadNumber(1), (std::size_t)e), q)
                      : UniRat(p, q * UniPoly::monomial(QuadNumber(1), (std::size_t)(-e)));
    return -residue_at(g, QuadNumber(0));
}

}  // namespace folsym
