#include <catch2/catch_amalgamated.hpp>

#include "folsym/monomial.hpp"
#include "folsym/torus.hpp"

using namespace folsym;

namespace {

QuadNumber Q(long n, long d = 1) { return QuadNumber(Rational(n, d)); }
QuadNumber im() { return QuadNumber::sqrt_of(-1); }
QuadNumber cube_j() { return QuadNumber(Rational(-1, 2), Rational(1, 2), -3); }

TorusAut ints(LatticeKind k, long a, long b, long c, long d) {
    return TorusAut::integers(k, IntMatrix2(a, b, c, d));
}

QMat scalar2(const QuadNumber& s) {
    QMat m(2);
    m.at(0, 0) = s;
    m.at(1, 1) = s;
    return m;
}

QMat companion4(long c0, long c1, long c2, long c3) {
    // companion of t^4 + c3 t^3 + c2 t^2 + c1 t + c0
    QMat m(4);
    m.at(1, 0) = QuadNumber(1);
    m.at(2, 1) = QuadNumber(1);
    m.at(3, 2) = QuadNumber(1);
    m.at(0, 3) = QuadNumber(-c0);
    m.at(1, 3) = QuadNumber(-c1);
    m.at(2, 3) = QuadNumber(-c2);
    m.at(3, 3) = QuadNumber(-c3);
    return m;
}

}  // namespace

TEST_CASE("lattice models validate their entries", "[torus]") {
    REQUIRE_NOTHROW(ints(LatticeKind::ESquare, 2, 1, 1, 1));
    REQUIRE_NOTHROW(TorusAut(LatticeKind::ZiSquare, scalar2(im())));
    REQUIRE_NOTHROW(TorusAut(LatticeKind::ZjSquare, scalar2(cube_j())));

    // half-integers are only allowed with the matching surd parity
    QMat bad = scalar2(QuadNumber(0, Rational(1, 2), -3));
    REQUIRE_THROWS_AS(TorusAut(LatticeKind::ZjSquare, bad), InconsistentLattice);
    REQUIRE_THROWS_AS(TorusAut(LatticeKind::ESquare, scalar2(Q(1, 2))), InconsistentLattice);
    REQUIRE_THROWS_AS(TorusAut(LatticeKind::ESquare, scalar2(im())), InconsistentLattice);
    // determinant must be a unit
    REQUIRE_THROWS_AS(ints(LatticeKind::ESquare, 2, 0, 0, 1), InconsistentLattice);
    REQUIRE_THROWS_AS(TorusAut(LatticeKind::GeneralZ4, companion4(2, 0, 0, 0)),
                      InconsistentLattice);
}

TEST_CASE("unit circle root detection", "[torus]") {
    auto poly = [](std::vector<long> c) {
        std::vector<QuadNumber> q;
        for (long v : c) q.emplace_back(v);
        return UniPoly(q);
    };
    REQUIRE(unit_circle_root(poly({-1, 0, 1})));        // t^2 - 1
    REQUIRE(unit_circle_root(poly({1, 0, 1})));         // t^2 + 1
    REQUIRE(unit_circle_root(poly({1, -1, 1})));        // sixth roots of unity
    REQUIRE_FALSE(unit_circle_root(poly({1, -3, 1})));  // (3 +- sqrt 5)/2
    REQUIRE_FALSE(unit_circle_root(poly({-1, -1, 1})));
    // quartic with a hidden cyclotomic factor: (t^2 - 3t + 1)(t^2 + 1)
    REQUIRE(unit_circle_root(poly({1, -3, 2, -3, 1})));
    // two real reciprocal pairs, none on the circle
    REQUIRE_FALSE(unit_circle_root(poly({-1, 2, 3, -4, 1})));
}

TEST_CASE("Anosov detection across lattice models", "[torus]") {
    REQUIRE(anosov_check(ints(LatticeKind::ESquare, 2, 1, 1, 1)));
    REQUIRE_FALSE(anosov_check(ints(LatticeKind::ESquare, 1, 0, 1, 1)));  // unipotent
    REQUIRE_FALSE(anosov_check(ints(LatticeKind::ESquare, 0, -1, 1, 0)));

    // Gaussian-integer entries: eigenvalues leave the quadratic tower but the
    // rank-4 integer model still decides exactly
    QMat l(2, {QuadNumber(1) + im(), QuadNumber(1), QuadNumber(1), QuadNumber(1)});
    REQUIRE(anosov_check(TorusAut(LatticeKind::ZiSquare, l)));

    // rank-4 models: (t^2 - 3t + 1)(t^2 - t - 1) vs (t^2 - 3t + 1)(t^2 + 1)
    REQUIRE(anosov_check(TorusAut(LatticeKind::GeneralZ4, companion4(-1, 2, 3, -4))));
    REQUIRE_FALSE(anosov_check(TorusAut(LatticeKind::GeneralZ4, companion4(1, -3, 2, -3))));
}

TEST_CASE("H11 growth classes on tori", "[torus]") {
    REQUIRE(h11_growth(ints(LatticeKind::ESquare, 1, 0, 1, 1)) == GrowthClass::quadratic());
    REQUIRE(h11_growth(ints(LatticeKind::ESquare, -1, 0, 0, -1)) == GrowthClass::bounded());
    REQUIRE(h11_growth(ints(LatticeKind::ESquare, 0, -1, 1, 0)) == GrowthClass::bounded());

    GrowthClass g = h11_growth(ints(LatticeKind::ESquare, 1, 2, 1, 1));
    REQUIRE(g.tag == GrowthClass::Tag::Exponential);
    REQUIRE(g.rate == Q(3) + Q(2) * QuadNumber::sqrt_of(2));  // (1 + sqrt 2)^2

    REQUIRE_THROWS_AS(h11_growth(TorusAut(LatticeKind::GeneralZ4, companion4(1, -3, 2, -3))),
                      Error);
}

TEST_CASE("the quadratic growth law is exactly n squared", "[torus]") {
    TorusAut t = ints(LatticeKind::ESquare, 1, 0, 1, 1);
    QMat g4 = QMat::tensor(t.linear, t.linear.conj());
    QMat acc = QMat::identity(4);
    for (long n = 1; n <= 100; ++n) {
        acc = acc * g4;
        REQUIRE(acc.max_abs_entry_real() == Q(n * n));
    }
}

TEST_CASE("linear on the monomial model, quadratic on the torus", "[torus]") {
    IntMatrix2 m(1, 0, 1, 1);
    REQUIRE(growth_class(MonomialMap(m)) == GrowthClass::linear());
    REQUIRE(h11_growth(TorusAut::integers(LatticeKind::ESquare, m)) ==
            GrowthClass::quadratic());
}

TEST_CASE("exponential rate is the squared spectral radius", "[torus]") {
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                for (long d = -3; d <= 3; ++d) {
                    IntMatrix2 m(a, b, c, d);
                    if (!m.unimodular()) continue;
                    TorusAut t = TorusAut::integers(LatticeKind::ESquare, m);
                    if (!anosov_check(t)) continue;
                    GrowthClass g = h11_growth(t);
                    REQUIRE(g.tag == GrowthClass::Tag::Exponential);
                    QuadNumber rho = spectral_radius(m);
                    REQUIRE(g.rate == rho * rho);
                }
}

TEST_CASE("stable and unstable slopes", "[torus]") {
    QuadNumber rt5 = QuadNumber::sqrt_of(5);
    SlopePair s = stable_unstable_slopes(ints(LatticeKind::ESquare, 2, 1, 1, 1));
    REQUIRE(s.unstable.lambda == (Q(3) + rt5) * Q(1, 2));
    REQUIRE(s.unstable.v == std::array{Q(1), (Q(-1) + rt5) * Q(1, 2)});
    REQUIRE(s.stable.v == std::array{Q(1), (Q(-1) - rt5) * Q(1, 2)});

    QuadNumber rt2 = QuadNumber::sqrt_of(2);
    SlopePair p = stable_unstable_slopes(ints(LatticeKind::ESquare, 3, 2, 4, 3));
    REQUIRE(p.unstable.v == std::array{Q(1), rt2});
    REQUIRE(p.stable.v == std::array{Q(1), -rt2});
    REQUIRE(p.unstable.lambda == Q(3) + Q(2) * rt2);

    // the inverse exchanges the two directions
    SlopePair q = stable_unstable_slopes(
        TorusAut::integers(LatticeKind::ESquare, IntMatrix2(3, 2, 4, 3).inverse()));
    REQUIRE(q.stable.v == p.unstable.v);
    REQUIRE(q.unstable.v == p.stable.v);

    REQUIRE_THROWS_AS(stable_unstable_slopes(ints(LatticeKind::ESquare, 1, 0, 1, 1)), Error);
}

TEST_CASE("crystallographic constraint on finite symmetries", "[torus]") {
    CrystalReport r1 = crystallographic_constraint(scalar2(im()));
    REQUIRE(r1.order == 4);
    REQUIRE(r1.phi == 2);
    REQUIRE(r1.pass);

    CrystalReport r2 = crystallographic_constraint(scalar2(-cube_j()));
    REQUIRE(r2.order == 6);
    REQUIRE(r2.phi == 2);
    REQUIRE(r2.pass);

    // order-5 symmetry of a rank-4 lattice: excluded in the presence of Anosov maps
    CrystalReport r3 = crystallographic_constraint(companion4(1, 1, 1, 1));
    REQUIRE(r3.order == 5);
    REQUIRE(r3.phi == 4);
    REQUIRE_FALSE(r3.pass);

    REQUIRE_THROWS_AS(crystallographic_constraint(IntMatrix2(1, 1, 0, 1)), InfiniteOrder);
}

TEST_CASE("finite order in GL(2,Z) means order 1, 2, 3, 4 or 6", "[torus]") {
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                for (long d = -3; d <= 3; ++d) {
                    IntMatrix2 m(a, b, c, d);
                    if (!m.unimodular()) continue;
                    auto ord = matrix_order(m);
                    if (!ord) continue;
                    REQUIRE(crystallographic_constraint(m).pass);
                    REQUIRE((*ord == 1 || *ord == 2 || *ord == 3 || *ord == 4 || *ord == 6));
                }
}

TEST_CASE("commuting finite symmetries of Anosov maps are homotheties", "[torus]") {
    TorusAut phi = ints(LatticeKind::ZiSquare, 3, 2, 4, 3);
    CommutationReport a = homothety_and_commutation(
        TorusAut(LatticeKind::ZiSquare, scalar2(im())), phi);
    REQUIRE(a.commute);
    REQUIRE(a.homothety);
    REQUIRE(a.consistent);

    CommutationReport b = homothety_and_commutation(
        ints(LatticeKind::ESquare, 0, -1, 1, 0), ints(LatticeKind::ESquare, 2, 1, 1, 1));
    REQUIRE_FALSE(b.commute);
    REQUIRE_FALSE(b.homothety);
    REQUIRE(b.consistent);  // vacuously: it fails to commute

    CommutationReport c = homothety_and_commutation(
        ints(LatticeKind::ESquare, -1, 0, 0, -1), ints(LatticeKind::ESquare, 2, 1, 1, 1));
    REQUIRE(c.commute);
    REQUIRE(c.homothety);

    REQUIRE_THROWS_AS(homothety_and_commutation(
                          ints(LatticeKind::ESquare, -1, 0, 0, -1), phi),
                      LatticeMismatch);
    REQUIRE_THROWS_AS(homothety_and_commutation(
                          ints(LatticeKind::ESquare, 1, 1, 0, 1),
                          ints(LatticeKind::ESquare, 2, 1, 1, 1)),
                      InfiniteOrder);
}

TEST_CASE("quotient classification", "[torus]") {
    REQUIRE(classify_quotient(LatticeKind::ZiSquare, im()) == QuotientClass::RationalZi4);
    REQUIRE(classify_quotient(LatticeKind::ZjSquare, cube_j()) == QuotientClass::RationalZj3);
    REQUIRE(classify_quotient(LatticeKind::ZjSquare, -cube_j()) == QuotientClass::RationalZj6);
    REQUIRE(classify_quotient(LatticeKind::ESquare, Q(-1)) == QuotientClass::Kummer);
    REQUIRE(classify_quotient(LatticeKind::ZiSquare, Q(-1)) == QuotientClass::Kummer);
    REQUIRE(classify_quotient(LatticeKind::ESquare, Q(1)) == QuotientClass::Torus);

    REQUIRE_THROWS_AS(classify_quotient(LatticeKind::ZjSquare, im()), InconsistentLattice);
    REQUIRE_THROWS_AS(classify_quotient(LatticeKind::ESquare, im()), InconsistentLattice);
    REQUIRE_THROWS_AS(classify_quotient(LatticeKind::ZiSquare, Q(2)), InfiniteOrder);
    REQUIRE_THROWS_AS(classify_quotient(LatticeKind::GeneralZ4, Q(-1)), InconsistentLattice);
}
