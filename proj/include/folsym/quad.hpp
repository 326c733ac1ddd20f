#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "folsym/rational.hpp"

namespace folsym {

/**
 * Element of Q or of a real/imaginary quadratic extension Q(sqrt(d)):
 * rational_part + surd_part * sqrt(radicand), with the radicand squarefree
 * and radicand == 0 exactly when the value is plain rational. All arithmetic
 * is exact; mixing two different extensions raises FieldTowerMismatch.
 */
class QuadNumber {
  public:
    QuadNumber() : rat_(0), surd_(0), d_(0) {}
    QuadNumber(int v) : rat_(v), surd_(0), d_(0) {}
    QuadNumber(long v) : rat_(v), surd_(0), d_(0) {}
    QuadNumber(const Int& v) : rat_(v), surd_(0), d_(0) {}
    QuadNumber(const Rational& v) : rat_(v), surd_(0), d_(0) {}

    QuadNumber(const Rational& rat, const Rational& surd, const Int& radicand)
        : rat_(rat), surd_(surd), d_(radicand) {
        normalize();
    }

    /** sqrt(d) as a field element; perfect squares collapse to rationals. */
    static QuadNumber sqrt_of(const Int& d) { return QuadNumber(0, 1, d); }

    const Rational& rational_part() const { return rat_; }
    const Rational& surd_part() const { return surd_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return rat_ == 0 && surd_ == 0; }
    bool is_real() const { return d_ >= 0; }
    bool is_integer() const {
        return d_ == 0 && boost::multiprecision::denominator(rat_) == 1;
    }

    /** Galois conjugate a - b sqrt(d); complex conjugation when d < 0. */
    QuadNumber conj() const { return QuadNumber(rat_, -surd_, d_, nocheck()); }

    /** Field norm a^2 - d b^2; equals |x|^2 when d < 0. */
    Rational norm() const { return rat_ * rat_ - Rational(d_) * surd_ * surd_; }

    QuadNumber operator-() const { return QuadNumber(-rat_, -surd_, d_, nocheck()); }

    QuadNumber operator+(const QuadNumber& o) const {
        Int d = join(*this, o);
        return QuadNumber(rat_ + o.rat_, surd_ + o.surd_, d);
    }
    QuadNumber operator-(const QuadNumber& o) const {
        Int d = join(*this, o);
        return QuadNumber(rat_ - o.rat_, surd_ - o.surd_, d);
    }
    QuadNumber operator*(const QuadNumber& o) const {
        Int d = join(*this, o);
        return QuadNumber(rat_ * o.rat_ + Rational(d) * surd_ * o.surd_,
                          rat_ * o.surd_ + surd_ * o.rat_, d);
    }

    QuadNumber inverse() const {
        Rational n = norm();
        if (n == 0) throw DivisionByZero("inverse of zero quadratic number");
        return QuadNumber(rat_ / n, -surd_ / n, d_, nocheck());
    }

    QuadNumber operator/(const QuadNumber& o) const { return *this * o.inverse(); }

    QuadNumber& operator+=(const QuadNumber& o) { return *this = *this + o; }
    QuadNumber& operator-=(const QuadNumber& o) { return *this = *this - o; }
    QuadNumber& operator*=(const QuadNumber& o) { return *this = *this * o; }
    QuadNumber& operator/=(const QuadNumber& o) { return *this = *this / o; }

    bool operator==(const QuadNumber& o) const {
        return rat_ == o.rat_ && surd_ == o.surd_ && d_ == o.d_;
    }
    bool operator!=(const QuadNumber& o) const { return !(*this == o); }

    /** Exact sign, defined for real values only. */
    int sign() const {
        if (d_ < 0) throw NotOrdered("sign of a non-real quadratic number");
        if (surd_ == 0) return sign_of(rat_);
        if (rat_ == 0) return sign_of(surd_);
        int sr = sign_of(rat_), ss = sign_of(surd_);
        if (sr == ss) return sr;
        Rational lhs = rat_ * rat_, rhs = Rational(d_) * surd_ * surd_;
        if (lhs == rhs) return 0;
        return lhs > rhs ? sr : ss;
    }

    bool operator<(const QuadNumber& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadNumber& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadNumber& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadNumber& o) const { return (*this - o).sign() >= 0; }

    QuadNumber abs() const { return sign() < 0 ? -*this : *this; }

    /** Compares |x| with 1 exactly: -1, 0 or +1. Works for any radicand. */
    int compare_modulus_one() const {
        if (d_ < 0) {
            Rational m2 = norm();  // a^2 + |d| b^2
            if (m2 == 1) return 0;
            return m2 > 1 ? 1 : -1;
        }
        QuadNumber a = abs();
        return (a - QuadNumber(1)).sign();
    }

    /** Multiplicative order if this is a root of unity (searched up to 12). */
    std::optional<int> root_of_unity_order() const {
        QuadNumber p(1);
        for (int k = 1; k <= 12; ++k) {
            p *= *this;
            if (p == QuadNumber(1)) return k;
        }
        return std::nullopt;
    }

    double approx_real() const {
        if (d_ < 0) throw NotOrdered("approx_real of a non-real value");
        return approx(rat_) + approx(surd_) * std::sqrt((double)approx(Rational(d_)));
    }

    /** (re, im) double approximation, valid for every radicand. */
    std::pair<double, double> approx_complex() const {
        if (d_ >= 0) return {approx_real(), 0.0};
        double root = std::sqrt((double)approx(Rational(-d_)));
        return {approx(rat_), approx(surd_) * root};
    }

    /** Re-parseable rendering, e.g. "1/2 - 3*sqrt(2)". */
    std::string str() const {
        std::ostringstream os;
        if (surd_ == 0) {
            os << rat_;
            return os.str();
        }
        bool lead = false;
        if (rat_ != 0) {
            os << rat_;
            lead = true;
        }
        Rational s = surd_;
        if (lead) {
            os << (s > 0 ? " + " : " - ");
            if (s < 0) s = -s;
        } else if (s == -1) {
            os << "-";
            s = 1;
        }
        if (s != 1) os << s << "*";
        os << "sqrt(" << d_ << ")";
        return os.str();
    }

  private:
    struct nocheck {};
    QuadNumber(const Rational& rat, const Rational& surd, const Int& d, nocheck)
        : rat_(rat), surd_(surd), d_(d) {
        if (surd_ == 0) d_ = 0;
    }

    static Int join(const QuadNumber& a, const QuadNumber& b) {
        if (a.d_ == 0) return b.d_;
        if (b.d_ == 0) return a.d_;
        if (a.d_ != b.d_)
            throw FieldTowerMismatch("cannot combine sqrt(" + a.d_.str() + ") with sqrt(" +
                                     b.d_.str() + ")");
        return a.d_;
    }

    void normalize() {
        if (surd_ == 0 || d_ == 0) {
            surd_ = 0;
            d_ = 0;
            return;
        }
        auto [f, s] = squarefree_split(d_);
        surd_ *= Rational(s);
        d_ = f;
        if (d_ == 1) {
            rat_ += surd_;
            surd_ = 0;
            d_ = 0;
        }
    }

    Rational rat_, surd_;
    Int d_;
};

inline QuadNumber operator+(int a, const QuadNumber& b) { return QuadNumber(a) + b; }
inline QuadNumber operator-(int a, const QuadNumber& b) { return QuadNumber(a) - b; }
inline QuadNumber operator*(int a, const QuadNumber& b) { return QuadNumber(a) * b; }

/**
 * Square root of x inside Q(sqrt(ambient)) if one exists. ambient == 0 permits
 * picking a fresh radicand (the one quadratic extension the tower allows).
 */
inline std::optional<QuadNumber> field_sqrt(const QuadNumber& x, Int ambient = 0) {
    if (x.is_zero()) return QuadNumber(0);
    if (!x.is_rational() && ambient != 0 && x.radicand() != ambient)
        throw FieldTowerMismatch("field_sqrt: value outside the ambient field");
    Int d = x.is_rational() ? ambient : x.radicand();
    if (x.is_rational()) {
        const Rational& r = x.rational_part();
        if (auto s = rational_sqrt(r)) return QuadNumber(*s);
        if (d == 0) {
            // free to extend: r = f s^2 -> sqrt(r) = s sqrt(f)
            Int num = boost::multiprecision::numerator(r);
            Int den = boost::multiprecision::denominator(r);
            auto [fn, sn] = squarefree_split(num * den);
            return QuadNumber(0, Rational(sn, den), fn);
        }
        if (auto s = rational_sqrt(r / Rational(d))) return QuadNumber(0, *s, d);
        return std::nullopt;
    }
    // (p + q sqrt(d))^2 = a + b sqrt(d): p^2 + q^2 d = a, 2 p q = b
    Rational a = x.rational_part(), b = x.surd_part();
    Rational n = x.norm();
    auto s = rational_sqrt(n);
    if (!s) return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        Rational p2 = (a + (pick == 0 ? *s : -*s)) / 2;
        auto p = rational_sqrt(p2);
        if (!p || *p == 0) continue;
        Rational q = b / (2 * *p);
        QuadNumber cand(*p, q, d);
        if (cand * cand == x) return cand;
        cand = -cand;
        if (cand * cand == x) return cand;
    }
    return std::nullopt;
}

}  // namespace folsym
