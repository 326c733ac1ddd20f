#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <vector>

#include "folsym/quad.hpp"

namespace folsym {

/** 2x2 integer matrix [[a, b], [c, d]], arbitrary-precision entries. */
struct IntMatrix2 {
    Int a = 1, b = 0, c = 0, d = 1;

    IntMatrix2() = default;
    IntMatrix2(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static IntMatrix2 identity() { return {}; }

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }
    bool unimodular() const {
        Int dt = det();
        return dt == 1 || dt == -1;
    }

    IntMatrix2 operator*(const IntMatrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    bool operator==(const IntMatrix2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const IntMatrix2& o) const { return !(*this == o); }

    IntMatrix2 operator-() const { return {-a, -b, -c, -d}; }
    IntMatrix2 transpose() const { return {a, c, b, d}; }

    /** Inverse, defined only when |det| = 1. */
    IntMatrix2 inverse() const {
        Int dt = det();
        if (dt == 1) return {d, -b, -c, a};
        if (dt == -1) return {-d, b, c, -a};
        throw NonUnimodular("inverse requires |det| = 1, got det = " + dt.str());
    }

    IntMatrix2 pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        IntMatrix2 r = identity(), base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    IntMatrix2 abs_entries() const {
        auto ab = [](const Int& v) { return v < 0 ? -v : v; };
        return {ab(a), ab(b), ab(c), ab(d)};
    }

    bool all_nonneg() const { return a >= 0 && b >= 0 && c >= 0 && d >= 0; }
    bool all_nonpos() const { return a <= 0 && b <= 0 && c <= 0 && d <= 0; }

    Int norm_inf() const {
        Int m = 0;
        for (const Int* v : {&a, &b, &c, &d}) {
            Int av = *v < 0 ? -*v : *v;
            if (av > m) m = av;
        }
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
        return os.str();
    }
};

/** Exact eigen data of a 2x2 integer matrix. */
struct Eigen2 {
    QuadNumber lambda1, lambda2;           // lambda1 has the +sqrt branch
    std::array<QuadNumber, 2> v1, v2;      // first nonzero coordinate normalized to 1
    bool repeated = false;
};

namespace detail {
inline std::array<QuadNumber, 2> eigenvector(const IntMatrix2& m, const QuadNumber& lambda) {
    QuadNumber a(m.a), b(m.b), c(m.c), d(m.d);
    if (m.b != 0) return {QuadNumber(1), (lambda - a) / b};
    if (m.c != 0) {
        QuadNumber top = lambda - d;
        if (top.is_zero()) return {QuadNumber(0), QuadNumber(1)};
        return {QuadNumber(1), c / top};
    }
    // diagonal matrix
    if (lambda == a) return {QuadNumber(1), QuadNumber(0)};
    return {QuadNumber(0), QuadNumber(1)};
}
}  // namespace detail

inline Eigen2 eigen2(const IntMatrix2& m) {
    Int t = m.trace();
    Int disc = t * t - 4 * m.det();
    auto [f, s] = squarefree_split(disc);
    Eigen2 e;
    e.lambda1 = QuadNumber(Rational(t, 2), Rational(s, 2), f);
    e.lambda2 = QuadNumber(Rational(t, 2), -Rational(s, 2), f);
    e.repeated = (disc == 0);
    e.v1 = detail::eigenvector(m, e.lambda1);
    e.v2 = detail::eigenvector(m, e.lambda2);
    return e;
}

/** Exact test: does m have an eigenvalue of modulus > 1? */
inline bool spectral_radius_gt_one(const IntMatrix2& m) {
    Eigen2 e = eigen2(m);
    return e.lambda1.compare_modulus_one() > 0 || e.lambda2.compare_modulus_one() > 0;
}

/** Spectral radius as an exact field element (real spectrum or |det|=1 rotations). */
inline QuadNumber spectral_radius(const IntMatrix2& m) {
    Eigen2 e = eigen2(m);
    if (e.lambda1.is_real()) {
        QuadNumber a1 = e.lambda1.abs(), a2 = e.lambda2.abs();
        return a1 >= a2 ? a1 : a2;
    }
    Rational n = e.lambda1.norm();
    if (auto r = rational_sqrt(n)) return QuadNumber(*r);
    throw FieldTowerExceeded("complex spectral radius is not a quadratic number");
}

/** Growth class of the iterated pullback norms ||(phi^n)*||. */
struct GrowthClass {
    enum class Tag { Bounded, Linear, Quadratic, Exponential };

    Tag tag = Tag::Bounded;
    QuadNumber rate = QuadNumber(1);  // Exponential only: the exact dynamical degree, > 1

    static GrowthClass bounded() { return {Tag::Bounded, QuadNumber(1)}; }
    static GrowthClass linear() { return {Tag::Linear, QuadNumber(1)}; }
    static GrowthClass quadratic() { return {Tag::Quadratic, QuadNumber(1)}; }
    static GrowthClass exponential(QuadNumber r) { return {Tag::Exponential, std::move(r)}; }

    bool operator==(const GrowthClass& o) const { return tag == o.tag && rate == o.rate; }
    bool operator!=(const GrowthClass& o) const { return !(*this == o); }

    std::string str() const {
        switch (tag) {
            case Tag::Bounded: return "bounded";
            case Tag::Linear: return "linear";
            case Tag::Quadratic: return "quadratic";
            case Tag::Exponential: return "exponential(" + rate.str() + ")";
        }
        return "?";
    }
};

/** Order of m in GL(2,Z), or nullopt if no power up to the bound is the identity. */
inline std::optional<int> matrix_order(const IntMatrix2& m, int bound = 24) {
    IntMatrix2 p = IntMatrix2::identity();
    for (int k = 1; k <= bound; ++k) {
        p = p * m;
        if (p == IntMatrix2::identity()) return k;
    }
    return std::nullopt;
}

/** Dense square matrix over the quadratic tower; used for 4x4 lattice models. */
class QMat {
  public:
    QMat() : n_(0) {}
    explicit QMat(std::size_t n) : n_(n), e_(n * n) {}
    QMat(std::size_t n, std::vector<QuadNumber> entries) : n_(n), e_(std::move(entries)) {
        if (e_.size() != n_ * n_) throw Error("QMat: entry count mismatch");
    }

    static QMat identity(std::size_t n) {
        QMat m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = QuadNumber(1);
        return m;
    }

    static QMat from_int2(const IntMatrix2& m) {
        return QMat(2, {QuadNumber(m.a), QuadNumber(m.b), QuadNumber(m.c), QuadNumber(m.d)});
    }

    std::size_t size() const { return n_; }
    QuadNumber& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const QuadNumber& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    QMat operator*(const QMat& o) const {
        if (n_ != o.n_) throw Error("QMat: size mismatch");
        QMat r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const QuadNumber& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }

    QMat operator+(const QMat& o) const {
        QMat r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    QMat operator-(const QMat& o) const {
        QMat r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }

    bool operator==(const QMat& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const QMat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }

    QMat pow(long k) const {
        QMat r = identity(n_), base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    QMat conj() const {
        QMat r = *this;
        for (auto& v : r.e_) v = v.conj();
        return r;
    }

    /** Kronecker product; indices ordered (i1,i2) row-major. */
    static QMat tensor(const QMat& a, const QMat& b) {
        std::size_t n = a.n_ * b.n_;
        QMat r(n);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t j = 0; j < a.n_; ++j)
                for (std::size_t k = 0; k < b.n_; ++k)
                    for (std::size_t l = 0; l < b.n_; ++l)
                        r.at(i * b.n_ + k, j * b.n_ + l) = a.at(i, j) * b.at(k, l);
        return r;
    }

    QuadNumber max_abs_entry_real() const {
        QuadNumber m(0);
        for (const auto& v : e_) {
            QuadNumber av = v.abs();
            if (av > m) m = av;
        }
        return m;
    }

    bool integer_entries() const {
        for (const auto& v : e_)
            if (!v.is_integer()) return false;
        return true;
    }

    /** Characteristic polynomial coefficients, index = power of t (monic). */
    std::vector<QuadNumber> char_poly() const {
        // Faddeev-LeVerrier: exact over the field.
        std::size_t n = n_;
        std::vector<QuadNumber> c(n + 1);
        c[n] = QuadNumber(1);
        QMat m(n);  // zero
        QMat acc = identity(n);
        for (std::size_t k = 1; k <= n; ++k) {
            m = *this * acc;
            QuadNumber tr(0);
            for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
            QuadNumber ck = -(tr / QuadNumber((long)k));
            c[n - k] = ck;
            acc = m;
            for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += ck;
        }
        return c;
    }

    std::optional<int> order(int bound = 24) const {
        QMat p = identity(n_);
        for (int k = 1; k <= bound; ++k) {
            p = p * *this;
            if (p == identity(n_)) return k;
        }
        return std::nullopt;
    }

  private:
    std::size_t n_;
    std::vector<QuadNumber> e_;
};

}  // namespace folsym
