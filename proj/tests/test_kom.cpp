#include <doctest.h>

#include "skein/kom.hpp"

using namespace skein;

namespace {

std::map<Matching, LaurentPoly> window_euler(const DiskWindow& w) {
    std::map<Matching, LaurentPoly> acc;
    for (size_t i = 0; i < w.levels.size(); ++i) {
        for (const auto& s : w.levels[i]) {
            LaurentPoly contrib = LaurentPoly::monomial(s.q, i % 2 == 0 ? 1 : -1);
            for (int k = 0; k < s.obj.circles; ++k) contrib = contrib * qint(2);
            acc[s.obj.match] += contrib;
            if (acc[s.obj.match].is_zero()) acc.erase(s.obj.match);
        }
    }
    return acc;
}

bool series_maps_agree(const std::map<Matching, TruncSeries>& a,
                       const std::map<Matching, TruncSeries>& b) {
    for (const auto& [m, s] : a) {
        auto it = b.find(m);
        if (it == b.end()) {
            if (!s.is_zero()) return false;
        } else if (!s.agrees_with(it->second)) {
            return false;
        }
    }
    for (const auto& [m, s] : b)
        if (a.find(m) == a.end() && !s.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("P2 structure and validation") {
    PeriodicComplex p2 = P2();
    // objects: id at q^0 then q^{2n-1} copies of the turnback
    CHECK(p2.level(0)[0].obj.match == Matching::identity(2));
    CHECK(p2.level(0)[0].q == 0);
    for (int n = 1; n <= 6; ++n) {
        REQUIRE(p2.level(n).size() == 1);
        CHECK(p2.level(n)[0].obj.match == Matching::turnback(2, 1));
        CHECK(p2.level(n)[0].q == 2 * n - 1);
    }
    ComplexReport rep = validate(p2);
    CHECK(rep.pass());
}

TEST_CASE("P3 structure and validation") {
    PeriodicComplex p3 = P3();
    CHECK(p3.level(0)[0].obj.match == Matching::identity(3));
    REQUIRE(p3.level(2).size() == 2);
    CHECK(p3.level(2)[0].q == 2);
    CHECK(p3.level(6)[0].q == 8);   // second period start
    CHECK(p3.level(5)[0].q == 7);
    CHECK(p3.level(9)[0].q == 13);  // materialized past the stored window
    ComplexReport rep = validate(p3);
    CHECK(rep.pass());
}

TEST_CASE("corrupted differential is caught and located") {
    // Negating a whole entry only conjugates the basis, so corrupt one term
    // inside d_2 instead: tops + bots becomes tops - bots.
    PlanarObj e1{Matching::turnback(2, 1), 0};
    Cob tops = Cob::dotted_identity(e1, 2);
    Cob bots = Cob::dotted_identity(e1, 0);
    PeriodicComplex p2 = P2();
    DiskWindow w = p2.stored();
    w.diffs[2].set(0, 0, tops - bots);
    PeriodicComplex bad = PeriodicComplex::periodic(std::move(w), 1, 2, 4);
    ComplexReport rep = validate(bad);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.base.d_squared);
    CHECK(rep.base.first_failure.find("d^2 != 0") != std::string::npos);
    CHECK(rep.base.first_failure.find("levels 1->3") != std::string::npos);
}

TEST_CASE("differentials are degree zero and the identity appears once") {
    for (const PeriodicComplex& c : {P2(), P3()}) {
        DiskWindow w = c.materialize(c.tail_start() + 2 * c.tail_period() + 2);
        for (size_t i = 0; i < w.diffs.size(); ++i) {
            for (const auto& [rc, m] : w.diffs[i].entries) {
                Degree d = degree(m, w.levels[i][rc.second].q, w.levels[i + 1][rc.first].q);
                CHECK(d.total() == 0);
            }
        }
        ComplexReport rep = validate(c);
        CHECK(rep.identity_once);
        CHECK(rep.positively_graded);
    }
}

TEST_CASE("two-term deloop and elimination example") {
    // circle -> empty via the plain cap reduces to a single q^{+1} empty
    PlanarObj circle{Matching(0, {}), 1};
    PlanarObj empty{Matching(0, {}), 0};
    DiskWindow w;
    w.levels.push_back({{circle, 0}});
    w.levels.push_back({{empty, -1}});  // the cap has degree +1
    MorMatrix<Cob> d;
    d.set(0, 0, Cob::elementary(circle, empty));
    w.diffs.push_back(std::move(d));

    simplify(w);
    REQUIRE(w.levels.size() == 2);
    REQUIRE(w.levels[0].size() == 1);
    CHECK(w.levels[0][0].obj == empty);
    CHECK(w.levels[0][0].q == 1);
    CHECK(w.levels[1].empty());
    CHECK(w.diffs[0].entries.empty());
}

TEST_CASE("already reduced complexes are untouched") {
    DiskWindow w = P2().materialize(8);
    DiskWindow before = w;
    simplify(w);
    CHECK(w.equal(before));
}

TEST_CASE("stacking interchange and identity complexes") {
    // id-complex tensor x = x
    PeriodicComplex p2 = P2();
    PeriodicComplex idc = single_object(PlanarObj{Matching::identity(2), 0});
    DiskWindow prod = tensor_window(idc, p2, 8);
    simplify(prod);
    DiskWindow expect = p2.materialize(8);
    CHECK(prod.object_equal(expect));
}

TEST_CASE("turnback contractibility within the window") {
    const int H = 12;
    for (int n : {2, 3}) {
        PeriodicComplex pn = n == 2 ? P2() : P3();
        for (int i = 1; i <= n - 1; ++i) {
            PeriodicComplex ei = single_object(PlanarObj{Matching::turnback(n, i), 0});
            DiskWindow w = tensor_window(ei, pn, H);
            simplify(w);
            for (int lvl = 0; lvl <= H - 2 && lvl < static_cast<int>(w.levels.size()); ++lvl)
                CHECK(w.levels[lvl].empty());
        }
    }
}

TEST_CASE("idempotence of P2 within the window") {
    const int H = 9;
    DiskWindow sq = tensor_window(P2(), P2(), H);
    simplify(sq);
    DiskWindow expect = P2().materialize(H);
    // object-wise agreement through homological degree 8
    for (int lvl = 0; lvl <= 8; ++lvl) {
        REQUIRE(lvl < static_cast<int>(sq.levels.size()));
        CHECK(sq.levels[lvl] == expect.levels[lvl]);
    }
}

TEST_CASE("graded Euler characteristic matches the projectors") {
    auto e2 = euler_char(P2(), 20);
    auto s2 = tl_series(jones_wenzl(2), 20);
    CHECK(series_maps_agree(e2, s2));

    auto e3 = euler_char(P3(), 20);
    auto s3 = tl_series(jones_wenzl(3), 20);
    CHECK(series_maps_agree(e3, s3));

    // single-matching complex decategorifies to that matching
    PeriodicComplex one = single_object(PlanarObj{Matching::turnback(2, 1), 0}, 0);
    auto e1 = euler_char(one, 10);
    REQUIRE(e1.size() == 1);
    CHECK(e1.begin()->second.coeff(0) == 1);
}

TEST_CASE("simplify preserves the window Euler characteristic") {
    DiskWindow w = tensor_window(P2(), P2(), 7);
    auto before = window_euler(w);
    simplify(w);
    auto after = window_euler(w);
    CHECK(before == after);

    DiskWindow t = trace_window(P2(), 7);
    auto tb = window_euler(t);
    simplify(t);
    CHECK(window_euler(t) == tb);
}

TEST_CASE("trace of the one-strand identity complex") {
    PeriodicComplex idc = single_object(PlanarObj{Matching::identity(1), 0});
    TraceReport rep = trace_complex(idc, 4);
    REQUIRE(rep.pieces.size() == 2);
    CHECK(rep.fully_delooped);
    CHECK(rep.pieces[0] == GradedPiece{0, -1});
    CHECK(rep.pieces[1] == GradedPiece{0, 1});
}

TEST_CASE("trace of P2 detects the two leading summands") {
    TraceReport rep = trace_complex(P2(), 10);
    CHECK(rep.fully_delooped);
    std::vector<GradedPiece> degree0;
    for (const auto& p : rep.pieces)
        if (p.hdeg == 0) degree0.push_back(p);
    REQUIRE(degree0.size() == 2);
    CHECK(degree0[0] == GradedPiece{0, -2});
    CHECK(degree0[1] == GradedPiece{0, 0});
}

TEST_CASE("trace of the zero complex is empty") {
    DiskWindow w;
    w.levels.push_back({});
    TraceReport rep = trace_complex(PeriodicComplex::bounded(std::move(w)), 4);
    CHECK(rep.pieces.empty());
}
