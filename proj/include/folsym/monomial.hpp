#pragma once

#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "folsym/matrix.hpp"
#include "folsym/oneform.hpp"

namespace folsym {

/**
 * Monomial self-map of the torus inside P1 x P1:
 *   (z, w) -> (z^a w^b, z^c w^d),   encoded by the exponent matrix [[a,b],[c,d]].
 * Birational exactly when |ad - bc| = 1; composition multiplies exponent
 * matrices in the same order.
 */
struct MonomialMap {
    IntMatrix2 m;

    explicit MonomialMap(IntMatrix2 mat) : m(std::move(mat)) {
        if (!m.unimodular())
            throw NonUnimodular("monomial map needs |ad - bc| = 1, got det = " + m.det().str());
    }

    static MonomialMap identity() { return MonomialMap(IntMatrix2::identity()); }

    /** this after o. */
    MonomialMap compose(const MonomialMap& o) const { return MonomialMap(m * o.m); }
    MonomialMap iterate(long n) const { return MonomialMap(m.pow(n)); }
    MonomialMap inverse() const { return MonomialMap(m.inverse()); }

    bool operator==(const MonomialMap& o) const { return m == o.m; }
    bool operator!=(const MonomialMap& o) const { return !(*this == o); }

    /** Coordinate functions z^a w^b and z^c w^d, with x = z and y = w. */
    RatFn coord_x() const {
        return RatFn::var_x().pow(m.a.convert_to<int>()) *
               RatFn::var_y().pow(m.b.convert_to<int>());
    }
    RatFn coord_y() const {
        return RatFn::var_x().pow(m.c.convert_to<int>()) *
               RatFn::var_y().pow(m.d.convert_to<int>());
    }

    /** Exact symbolic pullback of a rational one-form. */
    RatOneForm pullback(const RatOneForm& w) const {
        return w.pullback(coord_x(), coord_y(), w.vx, w.vy);
    }
};

/** The closed logarithmic form alpha dz/z + beta dw/w. */
inline RatOneForm log_form(const QuadNumber& alpha, const QuadNumber& beta,
                           std::string vx = "z", std::string vy = "w") {
    return {RatFn(alpha) / RatFn::var_x(), RatFn(beta) / RatFn::var_y(),
            std::move(vx), std::move(vy)};
}

/**
 * Action on H^{1,1}(P1 x P1) in the basis of the two ruling classes: the
 * preimage of a fiber {z = c} has bidegree (|a|, |b|), so the matrix has
 * columns (|a|,|b|) and (|c|,|d|).
 */
inline IntMatrix2 pullback_action(const MonomialMap& f) {
    return f.m.abs_entries().transpose();
}

/** (phi^k)* for k = 1..n, composing exponent matrices before taking classes. */
inline std::vector<IntMatrix2> degree_sequence(const MonomialMap& f, int n) {
    if (n < 0 || n > 64) throw Error("degree_sequence: n must lie in [0, 64]");
    std::vector<IntMatrix2> out;
    IntMatrix2 p = IntMatrix2::identity();
    for (int k = 1; k <= n; ++k) {
        p = p * f.m;
        out.push_back(pullback_action(MonomialMap(p)));
    }
    return out;
}

/** Positivity criterion; all-nonpositive maps differ by the central symmetry. */
inline bool is_algebraically_stable(const MonomialMap& f) {
    return f.m.all_nonneg() || f.m.all_nonpos();
}

struct StabilizedMap {
    IntMatrix2 conjugator;  // P with P M P^{-1} the stable representative
    MonomialMap map;
};

/**
 * Search GL(2,Z) for P making P M P^{-1} sign-constant (nonnegative when the
 * trace is positive).  Breadth-first over the rotation/shear generators keeps
 * the first hit minimal; the norm bound makes failure a definite verdict.
 */
inline StabilizedMap stabilize_conjugate(const MonomialMap& f, long norm_bound = 50) {
    if (!spectral_radius_gt_one(f.m))
        throw NotStabilizable("stabilization expects spectral radius > 1");
    const IntMatrix2 gens[4] = {IntMatrix2(0, -1, 1, 0), IntMatrix2(0, 1, -1, 0),
                                IntMatrix2(1, 1, 0, 1), IntMatrix2(1, -1, 0, 1)};
    std::deque<IntMatrix2> queue{IntMatrix2::identity()};
    std::set<std::string> seen{IntMatrix2::identity().str()};
    while (!queue.empty()) {
        IntMatrix2 p = queue.front();
        queue.pop_front();
        IntMatrix2 cand = p * f.m * p.inverse();
        if (cand.all_nonneg() || cand.all_nonpos()) return {p, MonomialMap(cand)};
        for (const auto& g : gens) {
            IntMatrix2 np = g * p;
            if (np.norm_inf() > norm_bound) continue;
            if (seen.insert(np.str()).second) queue.push_back(np);
        }
    }
    throw NotStabilizable("no sign-constant conjugate within the search bound");
}

inline GrowthClass growth_class(const MonomialMap& f) {
    if (matrix_order(f.m)) return GrowthClass::bounded();
    if (spectral_radius_gt_one(f.m)) return GrowthClass::exponential(spectral_radius(f.m));
    return GrowthClass::linear();  // infinite order, quasi-unipotent
}

/**
 * Linear foliation a w dz + b z dw, invariant when (a, b) is an eigenvector
 * of the transposed exponent matrix.  Normal form w dz + alpha z dw when the
 * first coefficient is nonzero; (a, b) = (0, 1) is the degenerate dw-direction.
 */
struct LinearFoliation {
    QuadNumber a, b;        // first nonzero coordinate normalized to 1
    QuadNumber eigenvalue;  // of tM on (a, b)

    bool degenerate() const { return a.is_zero() || b.is_zero(); }
    QuadNumber alpha() const {
        if (a.is_zero()) throw Error("degenerate direction z dw has no finite alpha");
        return b / a;
    }
    RatOneForm form() const {
        return {RatFn(BiPoly::var_y() * a), RatFn(BiPoly::var_x() * b), "z", "w"};
    }
};

/** Eigenvector foliations of tM; one entry when the eigenvalue is repeated. */
inline std::vector<LinearFoliation> invariant_foliations(const MonomialMap& f) {
    Eigen2 e = eigen2(f.m.transpose());
    if (!e.lambda1.is_real())
        throw ComplexEigenvalues("exponent matrix has non-real spectrum");
    std::vector<LinearFoliation> out;
    out.push_back({e.v1[0], e.v1[1], e.lambda1});
    if (!e.repeated) out.push_back({e.v2[0], e.v2[1], e.lambda2});
    return out;
}

/** Coefficients of f^*(alpha dz/z + beta dw/w) = alpha' dz/z + beta' dw/w. */
inline std::pair<QuadNumber, QuadNumber> pullback_log_form(const MonomialMap& f,
                                                           const QuadNumber& alpha,
                                                           const QuadNumber& beta) {
    QuadNumber a(f.m.a), b(f.m.b), c(f.m.c), d(f.m.d);
    return {a * alpha + c * beta, b * alpha + d * beta};
}

/** Trichotomy for the group preserving w dz + alpha z dw. */
struct BirClassification {
    enum class Tag { Fibration, InfiniteMonomial, Finite };

    Tag tag = Tag::Finite;
    IntMatrix2 witness;            // InfiniteMonomial: (1, alpha) is an exact eigenvector
    bool norm_certified = false;   // Finite proved by the imaginary-quadratic norm equation
    bool search_exhausted = false; // Finite only because the bounded search found nothing
    long t_bound = 0, a_bound = 0;
};

/**
 * alpha rational: the foliation is a fibration.  alpha a real quadratic
 * irrational: hunt for an integer matrix with eigenvector (1, alpha) and
 * spectral radius > 1.  Writing A alpha^2 + B alpha + C = 0 for the integer
 * minimal relation, such matrices are exactly [[a, tA], [-tC, a - tB]];
 * the search enumerates |t| <= t_bound, |a| <= a_bound.  Imaginary quadratic
 * alpha only admits finite-order matrices: the eigenvalue a + b alpha has
 * |lambda|^2 = det = 1, so every candidate is elliptic.
 */
inline BirClassification bir_group_classify(const QuadNumber& alpha, long t_bound = 10,
                                            long a_bound = 50) {
    if (alpha.is_zero()) throw Error("bir_group_classify: alpha must be nonzero");
    BirClassification out;
    out.t_bound = t_bound;
    out.a_bound = a_bound;
    if (alpha.is_rational()) {
        out.tag = BirClassification::Tag::Fibration;
        return out;
    }
    if (!alpha.is_real()) {
        out.tag = BirClassification::Tag::Finite;
        out.norm_certified = true;
        return out;
    }
    // integer minimal relation: alpha^2 - 2r alpha + (r^2 - s^2 d) = 0
    Rational r = alpha.rational_part(), s = alpha.surd_part();
    Rational bq = -2 * r, cq = r * r - s * s * Rational(alpha.radicand());
    Int den = boost::multiprecision::lcm(boost::multiprecision::denominator(bq),
                                         boost::multiprecision::denominator(cq));
    Int A = den;
    Int B = boost::multiprecision::numerator(Rational(bq * den));
    Int C = boost::multiprecision::numerator(Rational(cq * den));
    Int g = boost::multiprecision::gcd(A, boost::multiprecision::gcd(B < 0 ? -B : B,
                                                                     C < 0 ? -C : C));
    if (g > 1) { A /= g; B /= g; C /= g; }
    for (long tt = 1; tt <= t_bound; ++tt)
        for (int ts : {1, -1}) {
            Int t = Int(ts) * tt;
            for (long aa = 0; aa <= a_bound; ++aa)
                for (int as : {1, -1}) {
                    if (aa == 0 && as < 0) continue;
                    Int a = Int(as) * aa;
                    IntMatrix2 w(a, t * A, -t * C, a - t * B);
                    if (!w.unimodular() || !spectral_radius_gt_one(w)) continue;
                    QuadNumber lambda = QuadNumber(w.a) + QuadNumber(w.b) * alpha;
                    if (QuadNumber(w.c) + QuadNumber(w.d) * alpha != lambda * alpha)
                        throw CertificationFailed("witness eigen relation broke");
                    out.tag = BirClassification::Tag::InfiniteMonomial;
                    out.witness = w;
                    return out;
                }
        }
    out.tag = BirClassification::Tag::Finite;
    out.search_exhausted = true;
    return out;
}

/** tau = (1/z, 1/w) is the monomial map of -Id, central in GL(2,Z). */
inline bool commutes_with_kummer_involution(const MonomialMap& f) {
    MonomialMap tau(-IntMatrix2::identity());
    return f.compose(tau) == tau.compose(f);
}

}  // namespace folsym
