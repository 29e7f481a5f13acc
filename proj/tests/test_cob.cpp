#include <doctest.h>

#include <random>

#include "skein/cob.hpp"

using namespace skein;

namespace {

const Matching kClosed = Matching(0, {});

PlanarObj circles_obj(int c) { return PlanarObj{kClosed, c}; }

// circle -> nothing and back, possibly dotted
Cob cap(bool dotted) {
    Cob f(circles_obj(1), circles_obj(0));
    CircleStructure s = circle_structure(circles_obj(1), circles_obj(0));
    f.add_term(dotted ? (std::uint64_t(1) << s.src_circle_id(0)) : 0u, AlphaPoly(1));
    return f;
}

Cob cup(bool dotted) {
    Cob f(circles_obj(0), circles_obj(1));
    CircleStructure s = circle_structure(circles_obj(0), circles_obj(1));
    f.add_term(dotted ? (std::uint64_t(1) << s.tgt_circle_id(0)) : 0u, AlphaPoly(1));
    return f;
}

long long scalar_of(const Cob& f) {
    // f must be a multiple of the empty cobordism between empty objects
    REQUIRE(f.src().circles == 0);
    REQUIRE(f.tgt().circles == 0);
    if (f.is_zero()) return 0;
    REQUIRE(f.terms().size() == 1);
    const auto& [m, c] = *f.terms().begin();
    REQUIRE(m == 0);
    REQUIRE(c.terms().size() == 1);
    return c.terms().begin()->second;
}

AlphaPoly alpha_scalar_of(const Cob& f) {
    if (f.is_zero()) return AlphaPoly();
    REQUIRE(f.terms().size() == 1);
    REQUIRE(f.terms().begin()->first == 0);
    return f.terms().begin()->second;
}

std::mt19937& rng() {
    static std::mt19937 r(2024);
    return r;
}

Cob random_single_term(const PlanarObj& a, const PlanarObj& b) {
    CircleStructure s = circle_structure(a, b);
    std::uniform_int_distribution<int> dot_count(0, std::min(2, s.total()));
    std::uniform_int_distribution<int> pickc(0, s.total() - 1);
    std::uint64_t mask = 0;
    int dc = dot_count(rng());
    for (int i = 0; i < dc; ++i) mask |= std::uint64_t(1) << pickc(rng());
    Cob f(a, b);
    f.add_term(mask, AlphaPoly(1));
    return f;
}

PlanarObj random_obj(int n) {
    const auto& ms = Matching::all(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(ms.size()) - 1);
    std::uniform_int_distribution<int> c(0, 1);
    return PlanarObj{ms[pick(rng())], c(rng())};
}

}  // namespace

TEST_CASE("closed surface evaluations") {
    // sphere = 0, dotted sphere = 1, two dots = 0, three dots = alpha
    CHECK(compose(cap(false), cup(false)).is_zero());
    CHECK(scalar_of(compose(cap(false), cup(true))) == 1);
    CHECK(scalar_of(compose(cap(true), cup(false))) == 1);
    CHECK(compose(cap(true), cup(true)).is_zero());

    // three-dot sphere via an alpha-scaled dotted cup
    Cob three = compose(cap(true), cup(true).scaled(AlphaPoly::alpha_power(1)));
    CHECK(alpha_scalar_of(compose(cap(true), cup(true)).scaled(AlphaPoly::alpha_power(1))) == AlphaPoly());
    CHECK(three.is_zero());
    Cob dotted_cyl(circles_obj(1), circles_obj(1));
    {
        CircleStructure s = circle_structure(circles_obj(1), circles_obj(1));
        std::uint64_t sbit = std::uint64_t(1) << s.src_circle_id(0);
        std::uint64_t tbit = std::uint64_t(1) << s.tgt_circle_id(0);
        dotted_cyl.add_term(sbit | tbit, AlphaPoly(1));
        dotted_cyl.add_term(0, AlphaPoly::alpha_power(1));
    }
    // X^3 = alpha X, so capping off gives alpha
    Cob x3 = compose(dotted_cyl, compose(dotted_cyl, dotted_cyl));
    CHECK(alpha_scalar_of(compose(cap(false), compose(x3, cup(false)))) == AlphaPoly::alpha_power(1));

    // genus 3 closed surface: 8 alpha (handle = 2 dots each)
    Cob handle = dotted_cyl * 2;
    Cob sigma3 = compose(cap(false), compose(handle, compose(handle, compose(handle, cup(false)))));
    CHECK(alpha_scalar_of(sigma3) == AlphaPoly::alpha_power(1, 8));
    // one handle: the torus would close to 2, here cap/cup of one handle
    Cob sigma1 = compose(cap(false), compose(handle, cup(false)));
    CHECK(scalar_of(sigma1) == 2);

    // neck-cut torus = two dotted spheres = 1 + 1
    long long torus = scalar_of(compose(cap(true), cup(false))) + scalar_of(compose(cap(false), cup(true)));
    CHECK(torus == 2);
}

TEST_CASE("identity behaves as the unit") {
    for (int n = 0; n <= 3; ++n) {
        for (const auto& m : Matching::all(n)) {
            for (int c = 0; c <= 2; ++c) {
                PlanarObj obj{m, c};
                Cob id = Cob::identity(obj);
                CHECK(compose(id, id) == id);
                Cob f = random_single_term(obj, random_obj(n));
                CHECK(compose(f, id) == f);
                Cob g = random_single_term(random_obj(n), obj);
                CHECK(compose(id, g) == g);
            }
        }
    }
}

TEST_CASE("dot squared equals alpha on a sheet") {
    PlanarObj e1{Matching::turnback(2, 1), 0};
    Cob dot_top = Cob::dotted_identity(e1, 3);     // the cap sheet
    Cob dot_bottom = Cob::dotted_identity(e1, 0);  // the cup sheet
    Cob twice = compose(dot_top, dot_top);
    CHECK(twice == Cob::identity(e1).scaled(AlphaPoly::alpha_power(1)));
    // dots on distinct sheets commute and stack
    CHECK(compose(dot_top, dot_bottom) == compose(dot_bottom, dot_top));
}

TEST_CASE("saddle relations from the second projector differential") {
    PlanarObj id2{Matching::identity(2), 0};
    PlanarObj e1{Matching::turnback(2, 1), 0};
    Cob sad = Cob::elementary(id2, e1);
    Cob tops = Cob::dotted_identity(e1, 3);
    Cob bots = Cob::dotted_identity(e1, 0);
    // the dot slides across the connected saddle
    CHECK(compose(tops, sad) == compose(bots, sad));
    CHECK(compose(tops - bots, sad).is_zero());
    // (tops + bots)(tops - bots) = alpha - alpha = 0
    CHECK(compose(tops + bots, tops - bots).is_zero());
    CHECK(compose(tops - bots, tops + bots).is_zero());
}

TEST_CASE("delooping maps compose to identities") {
    for (int n = 0; n <= 3; ++n) {
        for (const auto& m : Matching::all(n)) {
            for (int c = 1; c <= 2; ++c) {
                PlanarObj obj{m, c};
                DeloopMaps d = deloop(obj);
                // forward after backward: 2x2 identity over the reduced object
                CHECK(compose(d.fwd_low, d.bwd_low) == Cob::identity(d.reduced));
                CHECK(compose(d.fwd_high, d.bwd_high) == Cob::identity(d.reduced));
                CHECK(compose(d.fwd_low, d.bwd_high).is_zero());
                CHECK(compose(d.fwd_high, d.bwd_low).is_zero());
                // backward after forward: the identity of the circle object
                Cob round = compose(d.bwd_low, d.fwd_low) + compose(d.bwd_high, d.fwd_high);
                CHECK(round == Cob::identity(obj));
            }
        }
    }
}

TEST_CASE("composition is associative on random normal-form morphisms") {
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < 60; ++t) {
            PlanarObj a = random_obj(n), b = random_obj(n), c = random_obj(n), d = random_obj(n);
            Cob f = random_single_term(a, b);
            Cob g = random_single_term(b, c);
            Cob h = random_single_term(c, d);
            CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
        }
    }
}

TEST_CASE("degree bookkeeping") {
    PlanarObj id2{Matching::identity(2), 0};
    PlanarObj e1{Matching::turnback(2, 1), 0};
    CHECK(degree(Cob::elementary(id2, e1)).deg_t == -1);  // saddle
    CHECK(degree(Cob::identity(id2)).deg_t == 0);
    CHECK(degree(Cob::dotted_identity(e1, 0)).deg_t == -2);
    // handle sheet = 2 * dotted sheet has the same degree
    CHECK(degree(Cob::dotted_identity(e1, 0) * 2).deg_t == -2);
    // alpha carries degree -4: identity scaled by alpha
    CHECK(degree(Cob::identity(id2).scaled(AlphaPoly::alpha_power(1))).deg_t == -4);
    // deloop maps with their shifts are degree 0
    DeloopMaps d = deloop(PlanarObj{Matching::identity(1), 1});
    CHECK(degree(d.fwd_low, 0, -1).total() == 0);
    CHECK(degree(d.fwd_high, 0, +1).total() == 0);
    CHECK(degree(d.bwd_low, -1, 0).total() == 0);
    CHECK(degree(d.bwd_high, +1, 0).total() == 0);
}

TEST_CASE("degree is additive under composition") {
    int checked = 0;
    for (int t = 0; t < 1200 && checked < 400; ++t) {
        int n = 1 + t % 3;
        PlanarObj a = random_obj(n), b = random_obj(n), c = random_obj(n);
        Cob f = random_single_term(a, b);
        Cob g = random_single_term(b, c);
        Cob gf = compose(g, f);
        if (gf.is_zero()) continue;
        Degree df = degree(f), dg = degree(g), dgf = degree(gf);
        CHECK(dgf.deg_t == df.deg_t + dg.deg_t);
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("vertical flip is an involutive functor") {
    for (int t = 0; t < 40; ++t) {
        int n = 1 + t % 3;
        PlanarObj a = random_obj(n), b = random_obj(n), c = random_obj(n);
        Cob f = random_single_term(a, b);
        Cob g = random_single_term(b, c);
        CHECK(f.vertical_flip().vertical_flip() == f);
        CHECK(compose(g, f).vertical_flip() == compose(g.vertical_flip(), f.vertical_flip()));
    }
}

TEST_CASE("k0 ranks respect delooping") {
    for (int n = 0; n <= 4; ++n) {
        K0Report rep = k0_check(n);
        CHECK(rep.pass());
    }
    // empty object has class 1
    auto cls = k0_class(PlanarObj{kClosed, 0}, 0);
    CHECK(cls[kClosed] == LaurentPoly::one());
}
