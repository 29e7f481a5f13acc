#include <doctest.h>

#include "skein/slide.hpp"

using namespace skein;

TEST_CASE("annular category basics") {
    AnnObj strand{1, 0, 0, 0};
    AnnCob id = AnnCob::identity(strand);
    CHECK(ann_compose(id, id) == id);
    long long sign = 0;
    CHECK(id.is_unit_identity(sign));
    CHECK(sign == 1);
    CHECK(ann_degree(id).deg_t == 0);

    AnnObj beside_omega{1, 0, 1, 1};
    AnnCob idb = AnnCob::identity(beside_omega);
    CHECK(ann_compose(idb, idb) == idb);
    CHECK(ann_degree(idb).deg_t == 0);

    // delooping a trivial circle behaves as in the disk
    AnnDeloopMaps d = ann_deloop(beside_omega);
    CHECK(d.reduced.trivial == 0);
    CHECK(ann_compose(d.fwd_low, d.bwd_low) == AnnCob::identity(d.reduced));
    CHECK(ann_compose(d.fwd_high, d.bwd_high) == AnnCob::identity(d.reduced));
    CHECK(ann_compose(d.fwd_low, d.bwd_high).is_zero());
    CHECK(ann_compose(d.fwd_high, d.bwd_low).is_zero());
    AnnCob round = ann_compose(d.bwd_low, d.fwd_low) + ann_compose(d.bwd_high, d.fwd_high);
    CHECK(round == idb);
}

TEST_CASE("partial traces of the identity and turnback objects") {
    // one strand beside the essential circle, per the wrapping route
    PlanarObj id2{Matching::identity(2), 0};
    AnnObj t = trace_object(id2, route_plus(2));
    CHECK(t == AnnObj{1, 0, 1, 0});
    // the other route closes the circle trivially and carries the strand
    // once around the core
    AnnObj u = trace_object(id2, route_minus(2));
    CHECK(u == AnnObj{1, 1, 0, 1});
    // turnback closes to a single arc, no circles
    PlanarObj e1{Matching::turnback(2, 1), 0};
    CHECK(trace_object(e1, route_plus(2)) == AnnObj{1, 1, 0, 0});
    CHECK(trace_object(e1, route_minus(2)) == AnnObj{1, 1, 0, 0});

    // N = 3: strand beside two essential circles / essential plus trivial
    PlanarObj id3{Matching::identity(3), 0};
    CHECK(trace_object(id3, route_plus(3)) == AnnObj{1, 0, 2, 0});
    CHECK(trace_object(id3, route_minus(3)) == AnnObj{1, 1, 1, 1});
}

TEST_CASE("traced complexes satisfy d^2 = 0") {
    for (int N : {2, 3}) {
        PeriodicComplex pn = N == 2 ? P2() : P3();
        DiskWindow w = pn.materialize(9);
        for (const TraceRoute& r : {route_plus(N), route_minus(N)}) {
            AnnWindow t = partial_trace(w, r);
            ValidationReport rep = validate_window<AnnCat>(t);
            CHECK(rep.pass());
        }
    }
}

TEST_CASE("tail and cone identities in the disk category") {
    for (int n : {2, 3}) {
        PeriodicComplex pn = n == 2 ? P2() : P3();
        DiskWindow full = pn.materialize(10);
        DiskWindow tail = tail_window(n, 10);
        // Cone(id -> tail) rebuilds P_n on the nose
        DiskWindow head;
        head.levels.push_back(full.levels[0]);
        // reindex the tail to start at level 0 for the head-to-tail cone
        DiskWindow tail0;
        for (size_t i = 1; i < tail.levels.size(); ++i) tail0.levels.push_back(tail.levels[i]);
        for (size_t i = 1; i + 1 < tail.diffs.size() + 1; ++i)
            if (i < tail.diffs.size()) tail0.diffs.push_back(tail.diffs[i]);
        ChainMap<DiskCat> f;
        f.comps.resize(1);
        for (const auto& [rc, m] : full.diffs[0].entries) f.comps[0].set(rc.first, rc.second, m);
        DiskWindow cone = cone_down<DiskCat>(head, tail0, f);
        // compare through the window (the cone runs one level shorter)
        for (size_t i = 0; i + 1 < cone.levels.size(); ++i) {
            CHECK(cone.levels[i] == full.levels[i]);
            CHECK(cone.diffs[i].entries == full.diffs[i].entries);
        }
        CHECK(validate_window<DiskCat>(cone).pass());

        // Cone(tail -> P_n) contracts to the identity object
        ChainMap<DiskCat> inc;
        inc.comps.resize(tail.levels.size());
        for (size_t l = 1; l < tail.levels.size(); ++l)
            for (size_t j = 0; j < tail.levels[l].size(); ++j)
                inc.comps[l].set(static_cast<int>(j), static_cast<int>(j),
                                 Cob::identity(tail.levels[l][j].obj));
        DiskWindow cone2 = cone_up<DiskCat>(tail, full, inc);
        CHECK(validate_window<DiskCat>(cone2).pass());
        eliminate_only<DiskCat>(cone2);
        CHECK(cone2.summand_count() == 1);
        CHECK(cone2.levels[0].size() == 1);
        CHECK(cone2.levels[0][0].obj.match == Matching::identity(n));
        CHECK(cone2.levels[0][0].q == 0);
    }
}

TEST_CASE("tail equality across the two closures") {
    TailEqualityReport r2 = tail_equality_check(2, 10);
    CHECK(r2.pass());
    CHECK_FALSE(r2.swapped);

    TailEqualityReport r3 = tail_equality_check(3, 10);
    CHECK(r3.pass());
    CHECK(r3.swapped);
}

TEST_CASE("omega objects and their classes") {
    auto [plus2, minus2] = omega_objects(2);
    CHECK(plus2 == AnnObj{0, 0, 1, 0});
    CHECK(minus2 == AnnObj{0, 0, 0, 1});
    auto [plus3, minus3] = omega_objects(3);
    CHECK(plus3 == AnnObj{0, 0, 2, 0});
    CHECK(minus3 == AnnObj{0, 0, 1, 1});

    // K_0 of Omega_+ (+) Omega_- at N = 2 is X + [2]
    AnnClass c = ann_k0_class(plus2, 0);
    for (auto& [k, v] : ann_k0_class(minus2, 0)) {
        auto it = c.find(k);
        if (it == c.end())
            c.emplace(k, v);
        else
            it->second = it->second + v;
    }
    REQUIRE(c.size() == 1);
    AnnularElement omega_cls = c.begin()->second;
    CHECK(omega_cls == AnnularElement::x_power(1) + AnnularElement::one() * RatFunc(qint(2)));
}

TEST_CASE("slide certificates verify end to end") {
    for (int N : {2, 3}) {
        EquivCertificate cert = build_slide_certificate(N, 12);
        // the endpoints are the strand beside the two omega flavors
        auto [op, om] = omega_objects(N);
        CHECK(cert.start.obj.essential == op.essential);
        CHECK(cert.start.obj.trivial == op.trivial);
        CHECK(cert.end.obj.essential == om.essential);
        CHECK(cert.end.obj.trivial == om.trivial);
        CHECK(cert.start.obj.arc_w == 0);
        CHECK(cert.end.obj.arc_w == 1);
        // reflection companion slides the strand the other way round
        CHECK(cert.r_end.obj.arc_w == -1);

        VerifyReport rep = verify_certificate(cert);
        INFO(rep.reason);
        CHECK(rep.accepted);

        K0ShadowReport shadow = certificate_k0_shadow(cert);
        CHECK(shadow.conservation);
        CHECK(shadow.fusion_identity);
    }
}

TEST_CASE("mutated certificates are rejected") {
    EquivCertificate cert = build_slide_certificate(2, 10);

    SUBCASE("tampered ideal object: flipped sign") {
        auto& entries = cert.steps[0].q.diffs[2].entries;
        REQUIRE(!entries.empty());
        entries.begin()->second = -entries.begin()->second;
        VerifyReport rep = verify_certificate(cert);
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason.find("invalid ideal witness") != std::string::npos);
    }
    SUBCASE("missing projector witness: wrong complex behind Q") {
        // present a Q that is not the traced projector: drop its last level
        cert.steps[0].q.levels.back().clear();
        VerifyReport rep = verify_certificate(cert);
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason.find("invalid ideal witness") != std::string::npos);
    }
    SUBCASE("corrupted tail differential") {
        auto& entries = cert.tail.diffs[2].entries;
        REQUIRE(!entries.empty());
        entries.begin()->second = entries.begin()->second * 2;
        VerifyReport rep = verify_certificate(cert);
        CHECK_FALSE(rep.accepted);
    }
    SUBCASE("window mismatch") {
        cert.window = 11;
        VerifyReport rep = verify_certificate(cert);
        CHECK_FALSE(rep.accepted);
        CHECK(rep.reason.find("window") != std::string::npos);
    }
    SUBCASE("wrong endpoint") {
        cert.end = cert.start;
        cert.steps[1].endpoint = cert.start;
        VerifyReport rep = verify_certificate(cert);
        CHECK_FALSE(rep.accepted);
    }
}

TEST_CASE("spin labeling") {
    std::vector<OmegaLabel> l = spin_labeling({true, false});
    REQUIRE(l.size() == 2);
    CHECK(l[0] == OmegaLabel::minus);
    CHECK(l[1] == OmegaLabel::plus);
    CHECK(spin_labeling({}).empty());
    std::vector<OmegaLabel> all = spin_labeling({true, true, true});
    for (auto x : all) CHECK(x == OmegaLabel::minus);
}
