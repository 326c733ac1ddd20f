#pragma once

#include <array>
#include <string>
#include <vector>

#include "folsym/matrix.hpp"
#include "folsym/unipoly.hpp"

namespace folsym {

/**
 * Lattice models for 2-dimensional complex tori.  The first three fix the
 * endomorphism ring of each factor (Z[i], Z[j] with j a primitive cube root
 * of unity, or plain Z); GeneralZ4 works directly with a 4x4 integer matrix
 * on the real lattice.
 */
enum class LatticeKind { ZiSquare, ZjSquare, ESquare, GeneralZ4 };

namespace detail {

inline bool entry_in_ring(LatticeKind k, const QuadNumber& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Rational u = q.rational_part(), v = q.surd_part();
    switch (k) {
        case LatticeKind::ESquare:
        case LatticeKind::GeneralZ4:
            return q.is_rational() && denominator(u) == 1;
        case LatticeKind::ZiSquare:
            if (!q.is_rational() && q.radicand() != -1) return false;
            return denominator(u) == 1 && denominator(v) == 1;
        case LatticeKind::ZjSquare: {
            if (!q.is_rational() && q.radicand() != -3) return false;
            Rational u2 = 2 * u, v2 = 2 * v;
            if (denominator(u2) != 1 || denominator(v2) != 1) return false;
            return (numerator(u2) + numerator(v2)) % 2 == 0;
        }
    }
    return false;
}

}  // namespace detail

/** Linear automorphism of a torus; translation parts are dropped throughout. */
struct TorusAut {
    LatticeKind lattice;
    QMat linear;  // 2x2 over the endomorphism ring, or 4x4 integer for GeneralZ4

    TorusAut(LatticeKind k, QMat l) : lattice(k), linear(std::move(l)) {
        std::size_t want = lattice == LatticeKind::GeneralZ4 ? 4 : 2;
        if (linear.size() != want)
            throw InconsistentLattice("lattice model expects a " + std::to_string(want) +
                                      "x" + std::to_string(want) + " matrix");
        for (std::size_t i = 0; i < linear.size(); ++i)
            for (std::size_t j = 0; j < linear.size(); ++j)
                if (!detail::entry_in_ring(lattice, linear.at(i, j)))
                    throw InconsistentLattice("matrix entry outside the endomorphism ring");
        if (linear.size() == 2) {
            QuadNumber det = linear.at(0, 0) * linear.at(1, 1) -
                             linear.at(0, 1) * linear.at(1, 0);
            if (!(det.norm() == 1))
                throw InconsistentLattice("determinant is not a unit of the ring");
        } else {
            QuadNumber c0 = linear.char_poly()[0];
            if (!(c0 == QuadNumber(1) || c0 == QuadNumber(-1)))
                throw InconsistentLattice("determinant must be +-1");
        }
    }

    static TorusAut integers(LatticeKind k, const IntMatrix2& m) {
        return TorusAut(k, QMat::from_int2(m));
    }
};

/** The matrix on the rank-4 real lattice, in the per-factor (1, zeta) bases. */
inline QMat to_integer_model(const TorusAut& t) {
    if (t.lattice == LatticeKind::GeneralZ4) return t.linear;
    QMat r(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const QuadNumber& e = t.linear.at(i, j);
            Rational u = e.rational_part(), v = e.surd_part();
            Rational p = u, q = 0;
            if (t.lattice == LatticeKind::ZiSquare) q = v;
            if (t.lattice == LatticeKind::ZjSquare) {
                p = u + v;  // e = p + q*j with j = (-1 + sqrt(-3))/2
                q = 2 * v;
            }
            r.at(2 * i, 2 * j) = QuadNumber(p);
            r.at(2 * i, 2 * j + 1) = QuadNumber(-q);
            r.at(2 * i + 1, 2 * j) = QuadNumber(q);
            r.at(2 * i + 1, 2 * j + 1) =
                t.lattice == LatticeKind::ZjSquare ? QuadNumber(p - q) : QuadNumber(p);
        }
    return r;
}

/**
 * Does the integer polynomial have a root on the unit circle?  Real circle
 * roots are +-1; a non-real pair e^{+-i theta} means t^2 - u t + 1 divides p
 * for u = 2 cos(theta) in (-2, 2), so reduce p modulo that divisor with u
 * symbolic and look for a real common root of the two remainder coefficients.
 */
inline bool unit_circle_root(const UniPoly& p) {
    if (p.is_zero()) throw Error("unit_circle_root of the zero polynomial");
    if (p.eval(QuadNumber(1)).is_zero() || p.eval(QuadNumber(-1)).is_zero()) return true;
    if (p.degree() < 2) return false;
    std::vector<UniPoly> c;  // coefficient of t^i as a polynomial in u
    for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p.coeff(i));
    UniPoly u = UniPoly::variable();
    for (int i = p.degree(); i >= 2; --i) {
        UniPoly q = c[i];
        if (q.is_zero()) continue;
        c[i - 1] = c[i - 1] + q * u;  // t^i = u t^{i-1} - t^{i-2}  (mod divisor)
        c[i - 2] = c[i - 2] - q;
        c[i] = UniPoly();
    }
    UniPoly g = UniPoly::gcd(c[1], c[0]);
    if (g.is_zero() || g.is_constant()) return false;
    for (const auto& [root, mult] : field_roots(g).roots) {
        (void)mult;
        if (!root.is_real()) continue;
        if (QuadNumber(-2) < root && root < QuadNumber(2)) return true;
    }
    return false;
}

/** Hyperbolicity: no eigenvalue of modulus 1, tested on the integer model. */
inline bool anosov_check(const TorusAut& t) {
    return !unit_circle_root(UniPoly(to_integer_model(t).char_poly()));
}

namespace detail {

/** Eigenvalues of a 2x2 matrix over the tower, when they stay quadratic. */
inline std::pair<QuadNumber, QuadNumber> eigen_pair(const QMat& l) {
    QuadNumber tr = l.at(0, 0) + l.at(1, 1);
    QuadNumber det = l.at(0, 0) * l.at(1, 1) - l.at(0, 1) * l.at(1, 0);
    QuadNumber disc = tr * tr - QuadNumber(4) * det;
    auto s = field_sqrt(disc);
    if (!s) throw FieldTowerExceeded("eigenvalues leave the quadratic tower");
    QuadNumber half(Rational(1, 2));
    return {(tr + *s) * half, (tr - *s) * half};
}

inline bool is_scalar(const QMat& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j && !(m.at(i, j) == m.at(0, 0))) return false;
            if (i != j && !m.at(i, j).is_zero()) return false;
        }
    return true;
}

}  // namespace detail

/**
 * Growth of ||(phi^n)*|| on H^{1,1}(T), modeled by L tensor conj(L).
 * Unit determinant forces the trichotomy: finite order, spectral radius > 1,
 * or quasi-unipotent; in the last case a size-3 Jordan block (the unipotent
 * L case) gives the n^2 law and size-2 blocks only give linear growth.
 */
inline GrowthClass h11_growth(const TorusAut& t) {
    if (t.lattice == LatticeKind::GeneralZ4)
        throw Error("h11_growth needs the 2x2 complex model");
    QMat g4 = QMat::tensor(t.linear, t.linear.conj());
    if (g4.order(24)) return GrowthClass::bounded();
    if (anosov_check(t)) {
        auto [l1, l2] = detail::eigen_pair(t.linear);
        if (!l1.is_real()) throw FieldTowerExceeded("complex spectral data off the tower");
        QuadNumber rho = l1.abs() >= l2.abs() ? l1.abs() : l2.abs();
        return GrowthClass::exponential(rho * rho);
    }
    QMat id = QMat::identity(4);
    for (int k = 1; k <= 24; ++k) {
        QMat n = g4.pow(k) - id;
        if (n.pow(4).is_zero())
            return (n * n).is_zero() ? GrowthClass::linear() : GrowthClass::quadratic();
    }
    throw Error("h11_growth: quasi-unipotent order exceeded the bound");
}

struct EigenDirection {
    std::array<QuadNumber, 2> v;  // first nonzero coordinate normalized to 1
    QuadNumber lambda;
};

struct SlopePair {
    EigenDirection stable, unstable;
};

/** The two invariant linear foliations of an Anosov automorphism. */
inline SlopePair stable_unstable_slopes(const TorusAut& t) {
    if (t.lattice == LatticeKind::GeneralZ4 || t.linear.size() != 2)
        throw Error("slopes need the 2x2 complex model");
    if (!anosov_check(t)) throw Error("slopes are defined for Anosov maps only");
    auto [l1, l2] = detail::eigen_pair(t.linear);
    auto direction = [&](const QuadNumber& lam) -> EigenDirection {
        const QuadNumber &a = t.linear.at(0, 0), &b = t.linear.at(0, 1);
        const QuadNumber &c = t.linear.at(1, 0), &d = t.linear.at(1, 1);
        std::array<QuadNumber, 2> v;
        if (!b.is_zero()) v = {QuadNumber(1), (lam - a) / b};
        else if (!c.is_zero())
            v = (lam - d).is_zero() ? std::array<QuadNumber, 2>{QuadNumber(0), QuadNumber(1)}
                                    : std::array<QuadNumber, 2>{QuadNumber(1), c / (lam - d)};
        else v = lam == a ? std::array<QuadNumber, 2>{QuadNumber(1), QuadNumber(0)}
                          : std::array<QuadNumber, 2>{QuadNumber(0), QuadNumber(1)};
        // certify L v = lambda v
        if (!(a * v[0] + b * v[1] == lam * v[0]) || !(c * v[0] + d * v[1] == lam * v[1]))
            throw CertificationFailed("eigen direction failed L v = lambda v");
        return {v, lam};
    };
    EigenDirection e1 = direction(l1), e2 = direction(l2);
    if (l1.compare_modulus_one() < 0) return {e1, e2};
    return {e2, e1};
}

struct CrystalReport {
    int order = 0;
    int phi = 0;    // Euler phi of the order
    bool pass = false;  // order in {1, 2, 3, 4, 6}
};

/** Finite lattice symmetries compatible with an Anosov map have phi(m) <= 2. */
inline CrystalReport crystallographic_constraint(const QMat& n, int bound = 64) {
    auto ord = n.order(bound);
    if (!ord) throw InfiniteOrder("no power up to the bound is the identity");
    int m = *ord;
    int phi = euler_phi(Int(m)).convert_to<int>();
    bool pass = m == 1 || m == 2 || m == 3 || m == 4 || m == 6;
    return {m, phi, pass};
}

inline CrystalReport crystallographic_constraint(const IntMatrix2& n, int bound = 64) {
    return crystallographic_constraint(QMat::from_int2(n), bound);
}

struct CommutationReport {
    bool commute = false;
    bool homothety = false;
    bool consistent = false;  // instance of: commuting + finite order + Anosov => homothety
};

inline CommutationReport homothety_and_commutation(const TorusAut& m, const TorusAut& phi,
                                                   int order_bound = 64) {
    if (m.lattice != phi.lattice)
        throw LatticeMismatch("automorphisms live over different lattice models");
    if (!m.linear.order(order_bound)) throw InfiniteOrder("m must have finite order");
    if (!anosov_check(phi)) throw Error("phi must be Anosov");
    CommutationReport r;
    r.commute = m.linear * phi.linear == phi.linear * m.linear;
    r.homothety = detail::is_scalar(m.linear);
    r.consistent = !r.commute || r.homothety;
    return r;
}

enum class QuotientClass { Torus, Kummer, RationalZi4, RationalZj3, RationalZj6 };

inline std::string quotient_class_name(QuotientClass q) {
    switch (q) {
        case QuotientClass::Torus: return "torus";
        case QuotientClass::Kummer: return "kummer";
        case QuotientClass::RationalZi4: return "rational_zi4";
        case QuotientClass::RationalZj3: return "rational_zj3";
        case QuotientClass::RationalZj6: return "rational_zj6";
    }
    return "?";
}

/** Quotient of the torus by the homothety group generated by xi. */
inline QuotientClass classify_quotient(LatticeKind lattice, const QuadNumber& xi) {
    if (lattice == LatticeKind::GeneralZ4)
        throw InconsistentLattice("homothety quotients need a complex multiplication model");
    if (!detail::entry_in_ring(lattice, xi))
        throw InconsistentLattice("generator does not preserve the lattice");
    int order = 0;
    QuadNumber p = xi;
    for (int k = 1; k <= 12; ++k) {
        if (p == QuadNumber(1)) { order = k; break; }
        p = p * xi;
    }
    if (order == 0) throw InfiniteOrder("generator is not a root of unity");
    switch (order) {
        case 1: return QuotientClass::Torus;
        case 2: return QuotientClass::Kummer;
        case 3:
            if (lattice == LatticeKind::ZjSquare) return QuotientClass::RationalZj3;
            break;
        case 4:
            if (lattice == LatticeKind::ZiSquare) return QuotientClass::RationalZi4;
            break;
        case 6:
            if (lattice == LatticeKind::ZjSquare) return QuotientClass::RationalZj6;
            break;
        default: break;
    }
    throw InconsistentLattice("homothety order " + std::to_string(order) +
                              " is not realized over this lattice");
}

}  // namespace folsym
