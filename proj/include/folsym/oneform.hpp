#pragma once

#include <string>

#include "folsym/ratfn.hpp"

namespace folsym {

/** One-form with rational coefficients: p d(vx) + q d(vy). */
struct RatOneForm {
    RatFn p, q;
    std::string vx = "x", vy = "y";

    bool is_zero() const { return p.is_zero() && q.is_zero(); }

    RatOneForm operator+(const RatOneForm& o) const { return {p + o.p, q + o.q, vx, vy}; }
    RatOneForm operator-(const RatOneForm& o) const { return {p - o.p, q - o.q, vx, vy}; }
    RatOneForm operator*(const RatFn& f) const { return {p * f, q * f, vx, vy}; }

    /** Pullback under (vx, vy) = (fx(u,v), fy(u,v)); result lives in the (u,v) chart. */
    RatOneForm pullback(const RatFn& fx, const RatFn& fy,
                        const std::string& u = "x", const std::string& v = "y") const {
        RatFn ps = p.subst(fx, fy), qs = q.subst(fx, fy);
        return {ps * fx.partial_x() + qs * fy.partial_x(),
                ps * fx.partial_y() + qs * fy.partial_y(), u, v};
    }

    std::string str() const;
};

/**
 * Saturated polynomial one-form a d(vx) + b d(vy): gcd(a, b) is constant.
 * The factor removed during saturation is kept; it cuts out the
 * non-reduced part of the original zero locus.
 */
class OneForm {
  public:
    OneForm() : a_(), b_(), divided_(QuadNumber(1)) {}

    OneForm(BiPoly a, BiPoly b, std::string vx = "x", std::string vy = "y")
        : a_(std::move(a)), b_(std::move(b)), divided_(QuadNumber(1)),
          vx_(std::move(vx)), vy_(std::move(vy)) {
        saturate();
    }

    /** Clear denominators of a rational one-form, then saturate. */
    static OneForm from_rational(const RatOneForm& w) {
        BiPoly common = w.p.den() * w.q.den();
        BiPoly g = BiPoly::gcd(w.p.den(), w.q.den());
        if (g.total_degree() > 0) common = common.exact_div(g);
        BiPoly a = w.p.num() * common.exact_div(w.p.den());
        BiPoly b = w.q.num() * common.exact_div(w.q.den());
        return OneForm(std::move(a), std::move(b), w.vx, w.vy);
    }

    const BiPoly& a() const { return a_; }
    const BiPoly& b() const { return b_; }
    const BiPoly& divided_factor() const { return divided_; }
    const std::string& vx() const { return vx_; }
    const std::string& vy() const { return vy_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    RatOneForm rational() const { return {RatFn(a_), RatFn(b_), vx_, vy_}; }

    /** Move the point (cx, cy) to the origin. */
    OneForm translate(const QuadNumber& cx, const QuadNumber& cy) const {
        return OneForm(a_.translate(cx, cy), b_.translate(cx, cy), vx_, vy_);
    }

    OneForm swap_vars() const { return OneForm(b_.swap_vars(), a_.swap_vars(), vy_, vx_); }

    bool operator==(const OneForm& o) const { return a_ == o.a_ && b_ == o.b_; }

    /** Equality up to a constant: same foliation in the chart. */
    bool proportional(const OneForm& o) const {
        return (a_ * o.b_ - b_ * o.a_).is_zero() && !(is_zero() != o.is_zero());
    }

    std::string str() const;

  private:
    void saturate() {
        if (a_.is_zero() && b_.is_zero()) return;
        BiPoly g = BiPoly::gcd(a_, b_);
        if (g.total_degree() > 0) {
            a_ = a_.exact_div(g);
            b_ = b_.exact_div(g);
            divided_ = g;
        }
    }

    BiPoly a_, b_;
    BiPoly divided_;
    std::string vx_ = "x", vy_ = "y";
};

namespace detail {

inline void append_form_term(std::string& out, const std::string& coeff, const std::string& dv) {
    std::string c = coeff;
    bool neg = false;
    if (!c.empty() && c[0] == '-' && c.find(" + ") == std::string::npos &&
        c.find(" - ") == std::string::npos) {
        neg = true;
        c = c.substr(1);
    }
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (c == "1") {
        out += dv;
        return;
    }
    if (c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos)
        c = "(" + c + ")";
    out += c + "*" + dv;
}

}  // namespace detail

inline std::string RatOneForm::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!p.is_zero()) detail::append_form_term(out, p.str(vx, vy), "d" + vx);
    if (!q.is_zero()) detail::append_form_term(out, q.str(vx, vy), "d" + vy);
    return out;
}

inline std::string OneForm::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!a_.is_zero()) detail::append_form_term(out, a_.str(vx_, vy_), "d" + vx_);
    if (!b_.is_zero()) detail::append_form_term(out, b_.str(vx_, vy_), "d" + vy_);
    return out;
}

}  // namespace folsym
