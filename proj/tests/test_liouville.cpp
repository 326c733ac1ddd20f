#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "folsym/liouville.hpp"

using namespace folsym;

namespace {

QuadNumber Q(long n, long d = 1) { return QuadNumber(Rational(n, d)); }
QuadNumber rt2() { return QuadNumber::sqrt_of(2); }
RatFn Z() { return RatFn::var_x(); }
RatFn W() { return RatFn::var_y(); }

RatOneForm linear_form(const QuadNumber& alpha) {  // w dz + alpha z dw
    return {W(), RatFn(alpha) * Z(), "z", "w"};
}

RatOneForm dlog(const RatFn& g) {  // dg / g
    return {g.partial_x() / g, g.partial_y() / g, "z", "w"};
}

}  // namespace

TEST_CASE("exterior derivative of rational forms", "[liouville]") {
    REQUIRE(exterior_derivative(log_form(Q(1), Q(1))).is_zero());
    REQUIRE(exterior_derivative(linear_form(rt2())).r == RatFn(rt2() - Q(1)));
    REQUIRE(exterior_derivative(RatOneForm{RatFn(), Z(), "z", "w"}).r == RatFn(1));

    // d of a gradient vanishes
    for (const RatFn& f : {Z().pow(3) * W().pow(2) + Q(2) * Z() * W(),
                           (Z() + W()) * (Z() - W()) * Z()}) {
        RatOneForm df{f.partial_x(), f.partial_y(), "z", "w"};
        REQUIRE(exterior_derivative(df).is_zero());
    }
}

TEST_CASE("wedge products", "[liouville]") {
    RatOneForm eta = log_form(Q(1), Q(1));
    REQUIRE(wedge(eta, eta).is_zero());
    REQUIRE(wedge(eta, linear_form(Q(5))).r == RatFn(4));
    REQUIRE(wedge(RatOneForm{RatFn(1), RatFn(), "z", "w"},
                  RatOneForm{RatFn(), RatFn(1), "z", "w"}).r == RatFn(1));
}

TEST_CASE("Leibniz rule", "[liouville]") {
    RatOneForm w = linear_form(Q(3));
    for (const RatFn& f : {Z() * W(), Z().pow(2) + W(), RatFn(Q(2)) / (Z() + Q(1))}) {
        RatOneForm fw = w * f;
        RatFn lhs = exterior_derivative(fw).r;
        RatFn rhs = wedge(dlog(f) * f, w).r + f * exterior_derivative(w).r;
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("Singer criterion on linear foliations", "[liouville]") {
    RatOneForm eta = log_form(Q(1), Q(1));
    REQUIRE(singer_check(linear_form(Q(2)), eta));
    REQUIRE(singer_check(linear_form(Q(1) + rt2()), eta));
    REQUIRE(singer_check(linear_form(rt2()), eta));

    RatOneForm zero{RatFn(), RatFn(), "z", "w"};
    REQUIRE_FALSE(singer_check(linear_form(Q(2)), zero));
    REQUIRE(singer_check(linear_form(Q(1)), zero));  // d(zw) is closed

    // eta must itself be closed
    RatOneForm open{W(), RatFn(), "z", "w"};
    REQUIRE_FALSE(singer_check(linear_form(Q(2)), open));
}

TEST_CASE("gauge invariance of the Singer identities", "[liouville]") {
    RatOneForm eta = log_form(Q(1), Q(1));
    RatOneForm w = linear_form(Q(2));
    for (const RatFn& g : {Z().pow(3) * W().pow(2), Z() + W()}) {
        RatOneForm gauged_w = w * g;
        RatOneForm gauged_eta = eta + dlog(g);
        REQUIRE(singer_check(gauged_w, gauged_eta));
    }
    // a failing pair keeps failing after the gauge move
    RatOneForm zero{RatFn(), RatFn(), "z", "w"};
    REQUIRE_FALSE(singer_check(w * (Z() * W()), zero + dlog(Z() * W())));
}

TEST_CASE("construction of the closed form for linear foliations", "[liouville]") {
    RatOneForm eta = construct_eta_linear(Q(2));
    REQUIRE(eta.p == RatFn(1) / Z());
    REQUIRE(eta.q == RatFn(1) / W());
    REQUIRE_NOTHROW(construct_eta_linear(Q(1) + rt2()));
    REQUIRE_NOTHROW(construct_eta_linear(Q(1)));
    REQUIRE_THROWS_AS(construct_eta_linear(Q(0)), Error);
}

TEST_CASE("group averaging over the Kummer involution", "[liouville]") {
    MonomialMap tau(-IntMatrix2::identity());
    std::vector<MonomialMap> g{MonomialMap::identity(), tau};

    // logarithmic generators are anti-invariant
    RatOneForm avg = group_average(RatOneForm{RatFn(1) / Z(), RatFn(), "z", "w"}, g);
    REQUIRE(avg.is_zero());
    REQUIRE(group_average(log_form(Q(1), Q(1)), g).is_zero());

    // trivial group does nothing
    RatOneForm zdw{RatFn(), Z(), "z", "w"};
    RatOneForm same = group_average(zdw, {MonomialMap::identity()});
    REQUIRE(same.p == zdw.p);
    REQUIRE(same.q == zdw.q);

    // averaging is a projection: five deterministic pseudo-random forms
    std::mt19937 rng(11);
    auto coin = [&]() { return Q((long)(rng() % 7) - 3); };
    for (int i = 0; i < 5; ++i) {
        RatFn p = (coin() * Z().pow(2) + coin() * Z() * W() + coin()) / (Z() * W());
        RatFn q = (coin() * W().pow(2) + coin() * Z() + coin()) / (Z() * W().pow(2));
        RatOneForm form{p, q, "z", "w"};
        RatOneForm once = group_average(form, g);
        RatOneForm twice = group_average(once, g);
        REQUIRE(once.p == twice.p);
        REQUIRE(once.q == twice.q);
    }
}

TEST_CASE("group axioms are checked", "[liouville]") {
    MonomialMap tau(-IntMatrix2::identity());
    RatOneForm form = log_form(Q(1), Q(0));
    REQUIRE_THROWS_AS(group_average(form, {}), NotAGroup);
    REQUIRE_THROWS_AS(group_average(form, {tau}), NotAGroup);
    REQUIRE_THROWS_AS(group_average(form, {MonomialMap::identity(), tau, tau}), NotAGroup);
    REQUIRE_THROWS_AS(
        group_average(form, {MonomialMap::identity(), MonomialMap(IntMatrix2(1, 1, 0, 1))}),
        NotAGroup);
}
