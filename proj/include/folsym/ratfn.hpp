#pragma once

#include "folsym/bipoly.hpp"

namespace folsym {

/** Bivariate rational function, kept reduced with a lex-monic denominator. */
class RatFn {
  public:
    RatFn() : num_(), den_(QuadNumber(1)) {}
    RatFn(const BiPoly& p) : num_(p), den_(QuadNumber(1)) {}
    RatFn(const QuadNumber& c) : num_(BiPoly(c)), den_(QuadNumber(1)) {}
    RatFn(int c) : RatFn(QuadNumber(c)) {}
    RatFn(const BiPoly& p, const BiPoly& q) : num_(p), den_(q) { reduce(); }

    static RatFn var_x() { return RatFn(BiPoly::var_x()); }
    static RatFn var_y() { return RatFn(BiPoly::var_y()); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == BiPoly(QuadNumber(1)); }

    RatFn operator-() const {
        RatFn r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFn operator+(const RatFn& o) const {
        return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFn operator-(const RatFn& o) const { return *this + (-o); }
    RatFn operator*(const RatFn& o) const { return RatFn(num_ * o.num_, den_ * o.den_); }
    RatFn operator/(const RatFn& o) const {
        if (o.is_zero()) throw DivisionByZero("rational function division by zero");
        return RatFn(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    RatFn pow(int k) const {
        if (k < 0) {
            if (is_zero()) throw DivisionByZero("zero to a negative power");
            return RatFn(den_, num_).pow(-k);
        }
        return RatFn(num_.pow(k), den_.pow(k));
    }

    RatFn partial_x() const {
        return RatFn(num_.partial_x() * den_ - num_ * den_.partial_x(), den_ * den_);
    }
    RatFn partial_y() const {
        return RatFn(num_.partial_y() * den_ - num_ * den_.partial_y(), den_ * den_);
    }

    QuadNumber eval(const QuadNumber& x, const QuadNumber& y) const {
        QuadNumber d = den_.eval(x, y);
        if (d.is_zero()) throw DivisionByZero("pole of rational function");
        return num_.eval(x, y) / d;
    }

    RatFn subst(const RatFn& px, const RatFn& py) const {
        RatFn acc_n, acc_d;
        for (const auto& [k, c] : num_.terms())
            acc_n = acc_n + px.pow(k.first) * py.pow(k.second) * RatFn(c);
        for (const auto& [k, c] : den_.terms())
            acc_d = acc_d + px.pow(k.first) * py.pow(k.second) * RatFn(c);
        return acc_n / acc_d;
    }

    std::string str(const std::string& vx = "x", const std::string& vy = "y") const {
        if (is_polynomial()) return num_.str(vx, vy);
        std::string n = num_.str(vx, vy), d = den_.str(vx, vy);
        if (num_.terms().size() > 1) n = "(" + n + ")";
        if (den_.terms().size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

  private:
    void reduce() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = BiPoly(QuadNumber(1));
            return;
        }
        BiPoly g = BiPoly::gcd(num_, den_);
        if (g.total_degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        QuadNumber lead = den_.terms().rbegin()->second;
        if (!(lead == QuadNumber(1))) {
            QuadNumber inv = lead.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    BiPoly num_, den_;
};

inline RatFn operator*(const QuadNumber& s, const RatFn& f) { return RatFn(s) * f; }

}  // namespace folsym
