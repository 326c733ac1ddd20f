#pragma once

#include <string>
#include <vector>

#include "folsym/monomial.hpp"
#include "folsym/oneform.hpp"

namespace folsym {

/** Two-form r d(vx) ^ d(vy) with a rational coefficient. */
struct RatTwoForm {
    RatFn r;
    std::string vx = "z", vy = "w";

    bool is_zero() const { return r.is_zero(); }
    bool operator==(const RatTwoForm& o) const { return r == o.r; }
    bool operator!=(const RatTwoForm& o) const { return !(*this == o); }
};

inline RatTwoForm exterior_derivative(const RatOneForm& w) {
    return {w.q.partial_x() - w.p.partial_y(), w.vx, w.vy};
}

inline RatTwoForm wedge(const RatOneForm& e, const RatOneForm& w) {
    return {e.p * w.q - e.q * w.p, e.vx, e.vy};
}

/** Liouvillian first integral criterion: d eta = 0 and d omega = eta ^ omega. */
inline bool singer_check(const RatOneForm& omega, const RatOneForm& eta) {
    return exterior_derivative(eta).is_zero() &&
           exterior_derivative(omega) == wedge(eta, omega);
}

/** The closed form dz/z + dw/w, certified against w dz + alpha z dw. */
inline RatOneForm construct_eta_linear(const QuadNumber& alpha) {
    if (alpha.is_zero()) throw Error("construct_eta_linear: alpha must be nonzero");
    RatOneForm eta = log_form(QuadNumber(1), QuadNumber(1));
    RatOneForm omega{RatFn(BiPoly::var_y()), RatFn(BiPoly::var_x() * alpha), "z", "w"};
    if (!singer_check(omega, eta))
        throw CertificationFailed("eta failed the Singer identities");
    return eta;
}

/**
 * Push a form through the deck group of a monomial cover:
 * (1/d) sum over g of g* alpha.  The list must be a group (identity present,
 * closed under composition, no repeats); closed forms stay closed.
 */
inline RatOneForm group_average(const RatOneForm& alpha, const std::vector<MonomialMap>& g) {
    if (g.empty()) throw NotAGroup("empty element list");
    bool has_id = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == MonomialMap::identity()) has_id = true;
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g[i] == g[j]) throw NotAGroup("repeated element");
    }
    if (!has_id) throw NotAGroup("missing identity");
    for (const auto& a : g)
        for (const auto& b : g) {
            MonomialMap ab = a.compose(b);
            bool found = false;
            for (const auto& e : g)
                if (e == ab) { found = true; break; }
            if (!found) throw NotAGroup("not closed under composition");
        }
    RatOneForm acc{RatFn(), RatFn(), alpha.vx, alpha.vy};
    for (const auto& e : g) acc = acc + e.pullback(alpha);
    RatOneForm avg = acc * RatFn(QuadNumber(Rational(1, (long)g.size())));
    if (exterior_derivative(alpha).is_zero() && !exterior_derivative(avg).is_zero())
        throw CertificationFailed("averaging broke closedness");
    return avg;
}

}  // namespace folsym
