#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "folsym/oneform.hpp"
#include "folsym/unirat.hpp"

namespace folsym {

/**
 * Local analysis of a saturated one-form at the origin of its chart.
 * Axis arguments throughout: 0 is the horizontal axis {vy = 0},
 * 1 is the vertical axis {vx = 0}.
 */

inline std::pair<BiPoly, BiPoly> dual_vector_field(const OneForm& w) {
    return {w.b(), -w.a()};
}

/** Jacobian of the dual vector field at the origin, row major. */
inline std::array<QuadNumber, 4> linear_part(const OneForm& w) {
    auto [vx, vy] = dual_vector_field(w);
    return {vx.partial_x().eval(0, 0), vx.partial_y().eval(0, 0),
            vy.partial_x().eval(0, 0), vy.partial_y().eval(0, 0)};
}

inline bool axis_invariant(const OneForm& w, int axis) {
    if (axis == 0) return w.a().is_zero() || w.a().order_in_y() >= 1;
    return w.b().is_zero() || w.b().order_in_x() >= 1;
}

enum class SingType { Regular, NonDegenerate, SaddleNode, NonReduced };

struct Singularity {
    SingType type = SingType::Regular;
    bool reduced = true;   // no further blow-up needed above this point
    int order = 0;         // minimal vanishing order of the coefficients
    QuadNumber lambda1, lambda2;  // eigenvalues of the dual vector field
    QuadNumber ratio;             // lambda2/lambda1, oriented as d(vy)/d(vx) on axes
    int strong_axis = -1;         // saddle-node: axis of the nonzero eigenvalue
    int weak_axis = -1;           // saddle-node: axis of the kernel, when aligned
    int weak_order = 0;           // saddle-node: multiplicity k on the weak axis
    std::optional<QuadNumber> transition;  // saddle-node: Dulac invariant
};

inline QuadNumber camacho_sad_index(const OneForm& w, int axis) {
    if (axis == 1) return camacho_sad_index(w.swap_vars(), 0);
    if (!axis_invariant(w, 0))
        throw NotInvariant("Camacho-Sad index needs an invariant curve");
    if (w.a().is_zero()) return QuadNumber(0);
    BiPoly atilde = w.a().exact_div(BiPoly::var_y());
    UniPoly num = -atilde.eval_y(QuadNumber(0));
    UniPoly den = w.b().eval_y(QuadNumber(0));
    if (den.is_zero())
        throw Error("curve lies in the singular locus");
    return residue_at(UniRat(num, den), QuadNumber(0));
}

/** Vanishing order along an invariant axis of the transverse coefficient. */
inline int z_index(const OneForm& w, int axis) {
    if (axis == 1) return z_index(w.swap_vars(), 0);
    if (!axis_invariant(w, 0))
        throw NotInvariant("Z index needs an invariant curve");
    UniPoly rest = w.b().eval_y(QuadNumber(0));
    if (rest.is_zero()) throw Error("curve lies in the singular locus");
    return rest.order_at_zero();
}

/** Contact order at the origin of a non-invariant axis with the foliation. */
inline int tangency_order(const OneForm& w, int axis) {
    if (axis == 1) return tangency_order(w.swap_vars(), 0);
    if (axis_invariant(w, 0))
        throw NotInvariant("tangency order is for non-invariant curves");
    UniPoly rest = w.a().eval_y(QuadNumber(0));
    return rest.order_at_zero();
}

namespace detail {

inline int lowest_order(const BiPoly& p) {
    int m = INT32_MAX;
    for (const auto& [k, c] : p.terms()) m = std::min(m, k.first + k.second);
    return m;
}

inline bool lex_before(const QuadNumber& a, const QuadNumber& b) {
    if (a.rational_part() != b.rational_part()) return a.rational_part() < b.rational_part();
    if (a.surd_part() != b.surd_part()) return a.surd_part() < b.surd_part();
    return a.radicand() < b.radicand();
}

inline bool positive_rational(const QuadNumber& x) {
    return x.is_rational() && x.rational_part() > 0;
}

}  // namespace detail

inline Singularity classify_singularity(const OneForm& w) {
    Singularity s;
    QuadNumber a0 = w.a().eval(0, 0), b0 = w.b().eval(0, 0);
    if (!a0.is_zero() || !b0.is_zero()) {
        s.type = SingType::Regular;
        return s;
    }
    s.order = std::min(detail::lowest_order(w.a()), detail::lowest_order(w.b()));
    auto j = linear_part(w);
    const QuadNumber &j00 = j[0], &j01 = j[1], &j10 = j[2], &j11 = j[3];

    bool triangular = j01.is_zero() || j10.is_zero();
    if (triangular) {
        s.lambda1 = j00;  // direction of the first axis
        s.lambda2 = j11;
    } else {
        QuadNumber tr = j00 + j11;
        QuadNumber det = j00 * j11 - j01 * j10;
        QuadNumber disc = tr * tr - QuadNumber(4) * det;
        auto root = field_sqrt(disc);
        if (!root)
            throw FieldTowerExceeded("eigenvalues leave the quadratic tower");
        QuadNumber half(Rational(1, 2));
        s.lambda1 = (tr - *root) * half;
        s.lambda2 = (tr + *root) * half;
        if (detail::lex_before(s.lambda2, s.lambda1)) std::swap(s.lambda1, s.lambda2);
    }

    bool z1 = s.lambda1.is_zero(), z2 = s.lambda2.is_zero();
    if (z1 && z2) {
        s.type = SingType::NonReduced;
        s.reduced = false;
        return s;
    }
    if (z1 || z2) {
        s.type = SingType::SaddleNode;
        s.reduced = true;
        if (z1) std::swap(s.lambda1, s.lambda2);  // lambda1 carries the strong direction
        s.ratio = QuadNumber(0);
        // axis alignment of the separatrices
        if (j10.is_zero() && !j00.is_zero())
            s.strong_axis = 0;
        else if (j01.is_zero() && !j11.is_zero())
            s.strong_axis = 1;
        if (j00.is_zero() && j10.is_zero())
            s.weak_axis = 0;
        else if (j11.is_zero() && j01.is_zero())
            s.weak_axis = 1;
        if (s.weak_axis >= 0 && axis_invariant(w, s.weak_axis)) {
            s.weak_order = z_index(w, s.weak_axis) - 1;
            s.transition = camacho_sad_index(w, s.weak_axis);
        }
        return s;
    }

    s.type = SingType::NonDegenerate;
    s.ratio = s.lambda2 / s.lambda1;
    s.reduced = !detail::positive_rational(s.ratio);
    return s;
}

/** Isolated zeros of the form, by eliminating vy and back-substituting. */
inline std::vector<std::pair<QuadNumber, QuadNumber>> singular_points(const OneForm& w) {
    std::vector<std::pair<QuadNumber, QuadNumber>> out;
    if (w.a().is_zero() || w.b().is_zero()) return out;  // saturated: no common zero
    if (w.a().is_constant() || w.b().is_constant()) return out;
    UniPoly elim = resultant_y(w.a(), w.b());
    if (elim.is_zero())
        throw Error("singular locus is not isolated");
    if (elim.degree() == 0) return out;
    for (const auto& [x0, mx] : field_roots(elim).roots) {
        UniPoly ax = w.a().eval_x(x0), bx = w.b().eval_x(x0);
        UniPoly common = UniPoly::gcd(ax, bx);
        if (common.degree() <= 0) continue;  // spurious elimination root
        for (const auto& [y0, my] : field_roots(common).roots) out.emplace_back(x0, y0);
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        if (!(p.first == q.first)) return detail::lex_before(p.first, q.first);
        return detail::lex_before(p.second, q.second);
    });
    return out;
}

/** Dulac transition invariant of an axis-aligned saddle-node. */
inline QuadNumber dulac_invariant(const OneForm& w) {
    Singularity s = classify_singularity(w);
    if (s.type != SingType::SaddleNode)
        throw Error("Dulac invariant is defined for saddle-nodes");
    if (!s.transition)
        throw Error("weak separatrix is not an invariant axis");
    return *s.transition;
}

}  // namespace folsym
