#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matwork/matroid.hpp"
#include "support.hpp"

using namespace matwork;

namespace {

Matroid fano() { return Matroid::named("fano"); }
Matroid non_pappus() { return Matroid::named("non_pappus"); }

}  // namespace

TEST_CASE("linear matroid construction") {
    Matroid f = fano();
    CHECK(f.n() == 7);
    CHECK(f.rank_total() == 3);

    // Generic points on a conic: rows (1, t, t^2) with distinct t.
    std::vector<std::vector<mpq_class>> rows;
    for (long t = 0; t < 5; ++t) rows.push_back({1, t, t * t});
    Matroid generic = Matroid::linear(ExactMatrix(FieldSpec::rationals(), rows));
    for (std::uint64_t bits = 0; bits < 32; ++bits) {
        Subset s{bits};
        if (s.size() == 3) CHECK(generic.rank(s) == 3);  // Vandermonde
    }

    Matroid one = Matroid::linear(ExactMatrix(FieldSpec::rationals(), {{1}}));
    CHECK(one.n() == 1);
    CHECK(one.rank_total() == 1);

    CHECK_THROWS_AS(Matroid::linear(ExactMatrix(FieldSpec::rationals(), 2, 2)),
                    LoopDetectedError);
}

TEST_CASE("line configuration matroids") {
    SUBCASE("four collinear points plus one apart") {
        Matroid m = Matroid::from_lines(5, {Subset::of({0, 1, 2, 3})});
        CHECK(m.rank_total() == 3);
        CHECK(m.flats().counts() == std::vector<std::size_t>{1, 5, 5, 1});
    }
    SUBCASE("no lines gives the free matroid behavior on 3 points") {
        Matroid m = Matroid::from_lines(3, {});
        CHECK(m.rank_total() == 3);
        for (std::uint64_t bits = 0; bits < 8; ++bits)
            CHECK(m.rank(Subset{bits}) == Subset{bits}.size());
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(Matroid::from_lines(5, {Subset::of({0, 1})}), InvalidLinesError);
        CHECK_THROWS_AS(
            Matroid::from_lines(6, {Subset::of({0, 1, 2, 3}), Subset::of({0, 1, 4})}),
            InvalidLinesError);
    }
}

TEST_CASE("non-Pappus matroid") {
    Matroid m = non_pappus();
    CHECK(m.n() == 9);
    CHECK(m.rank_total() == 3);
    CHECK(m.check_axioms(AxiomCheckMode::Exhaustive).pass());
    // Exactly 8 three-point lines; the middle triple {3,4,5} is independent.
    std::size_t three_point_lines = 0;
    for (const Flat& f : m.flats().of_rank(2))
        if (f.members.size() == 3) ++three_point_lines;
    CHECK(three_point_lines == 8);
    CHECK(m.rank(Subset::of({3, 4, 5})) == 3);
}

TEST_CASE("uniform matroids") {
    CHECK(Matroid::uniform(3, 7).flats().counts() == std::vector<std::size_t>{1, 7, 21, 1});
    Matroid u11 = Matroid::uniform(1, 1);
    CHECK(u11.n() == 1);
    CHECK(u11.rank_total() == 1);
    CHECK(Matroid::uniform(6, 10).flats().counts() ==
          std::vector<std::size_t>{1, 10, 45, 120, 210, 252, 1});
    CHECK_THROWS_AS(Matroid::uniform(0, 3), BadParamsError);
    CHECK_THROWS_AS(Matroid::uniform(4, 3), BadParamsError);
}

TEST_CASE("named matroids") {
    CHECK(fano().flats().counts() == std::vector<std::size_t>{1, 7, 7, 1});
    Matroid f = fano();
    for (const Flat& line : f.flats().of_rank(2)) CHECK(line.members.size() == 3);
    CHECK_THROWS_AS(Matroid::named("vamos"), UnknownNameError);
}

TEST_CASE("axiom checking catches non-matroids") {
    Matroid bad = Matroid::from_oracle(
        2, [](Subset s) { return s.size() % 2; }, Matroid::Kind::Explicit);
    auto report = bad.check_axioms(AxiomCheckMode::Exhaustive);
    CHECK_FALSE(report.pass());

    CHECK(fano().check_axioms(AxiomCheckMode::Exhaustive).pass());
    CHECK(fano().check_axioms(AxiomCheckMode::Randomized, 500).pass());
}

TEST_CASE("closure") {
    Matroid f = fano();
    Flat line = f.closure(Subset::of({0, 1}));
    CHECK(line.rank == 2);
    CHECK(line.members.size() == 3);  // lines of the Fano plane have 3 points
    CHECK(Subset::of({0, 1}).subset_of(line.members));

    CHECK(f.closure(Subset{}).members.empty());
    CHECK(Matroid::uniform(3, 5).closure(Subset::of({0, 1})).members == Subset::of({0, 1}));
}

TEST_CASE("closure is idempotent, extensive, monotone") {
    std::mt19937_64 rng(23);
    for (const Matroid& m : {fano(), non_pappus(), Matroid::uniform(3, 6)}) {
        for (int t = 0; t < 50; ++t) {
            Subset s{rng() & Subset::full(m.n()).bits};
            Flat c = m.closure(s);
            CHECK(s.subset_of(c.members));
            CHECK(m.closure(c.members).members == c.members);
            Subset bigger = s.unite(Subset{rng() & Subset::full(m.n()).bits});
            CHECK(c.members.subset_of(m.closure(bigger).members));
        }
    }
}

TEST_CASE("flat lattice against the brute-force subset scan") {
    for (const Matroid& m : {fano(), non_pappus(), Matroid::uniform(3, 7),
                             Matroid::from_lines(5, {Subset::of({0, 1, 2, 3})})}) {
        CHECK(m.flats().counts() == testsupport::brute_force_flat_counts(m));
    }
}

TEST_CASE("flat lattice consistency") {
    for (const Matroid& m : {fano(), non_pappus(), Matroid::uniform(4, 7)}) {
        const FlatLattice& lat = m.flats();
        CHECK(lat.of_rank(0).size() == 1);
        CHECK(lat.of_rank(m.rank_total()).size() == 1);
        for (int r = 0; r <= lat.top_rank(); ++r)
            for (const Flat& f : lat.of_rank(r))
                for (int i = 0; i < m.n(); ++i)
                    if (!f.members.contains(i))
                        CHECK(m.rank(f.members.with(i)) == f.rank + 1);
    }
}

TEST_CASE("join") {
    Matroid f = fano();
    const auto& points = f.flats().of_rank(1);
    Flat bottom = f.flats().of_rank(0)[0];
    for (const Flat& p : points) {
        CHECK(f.join(p, p).members == p.members);
        CHECK(f.join(bottom, p).members == p.members);
    }
    Flat line = f.join(points[0], points[1]);
    CHECK(line.rank == 2);
    CHECK(line.members == f.closure(points[0].members.unite(points[1].members)).members);
}

TEST_CASE("restriction") {
    Matroid f = fano();
    Flat full = f.flats().of_rank(3)[0];
    Matroid whole = f.restriction(full);
    CHECK(whole.n() == 7);
    CHECK(whole.flats().counts() == f.flats().counts());

    Flat line = f.flats().of_rank(2)[0];
    Matroid u23 = f.restriction(line);
    CHECK(u23.n() == 3);
    CHECK(u23.rank_total() == 2);
    CHECK(u23.flats().counts() == std::vector<std::size_t>{1, 3, 1});

    Flat bottom = f.flats().of_rank(0)[0];
    Matroid empty = f.restriction(bottom);
    CHECK(empty.n() == 0);
    CHECK(empty.rank_total() == 0);

    CHECK_THROWS_AS(f.restriction(Flat{Subset::of({0, 1}), 2}), NotAFlatError);
}

TEST_CASE("contraction") {
    Matroid f = fano();
    Flat bottom = f.flats().of_rank(0)[0];
    CHECK(f.contraction(bottom).flats().counts() == f.flats().counts());

    Matroid u37 = Matroid::uniform(3, 7);
    Matroid c = u37.contraction(u37.flats().of_rank(1)[0]);
    CHECK(c.n() == 6);
    CHECK(c.rank_total() == 2);
    for (std::uint64_t bits = 0; bits < 64; ++bits)
        CHECK(c.rank(Subset{bits}) == std::min(Subset{bits}.size(), 2));

    // Contracting a Fano point leaves 6 points in 3 parallel classes, one per
    // line through the point.
    Matroid cp = f.contraction(f.flats().of_rank(1)[0]);
    CHECK(cp.n() == 6);
    CHECK(cp.rank_total() == 2);
    CHECK(cp.flats().counts() == std::vector<std::size_t>{1, 3, 1});

    CHECK_THROWS_AS(f.contraction(f.flats().of_rank(3)[0]), BadParamsError);
}

TEST_CASE("restriction and contraction flat correspondence") {
    for (const Matroid& m : {fano(), non_pappus(), Matroid::uniform(3, 6)}) {
        const FlatLattice& lat = m.flats();
        for (int fr = 0; fr <= m.rank_total(); ++fr)
            for (const Flat& f : lat.of_rank(fr)) {
                auto restr = m.restriction(f).flats().counts();
                for (int r = 0; r < static_cast<int>(restr.size()); ++r) {
                    std::size_t contained = 0;
                    for (const Flat& g : lat.of_rank(r))
                        if (g.members.subset_of(f.members)) ++contained;
                    CHECK(restr[r] == contained);
                }
                if (f.members == Subset::full(m.n())) continue;
                auto contr = m.contraction(f).flats().counts();
                for (int r = 0; r < static_cast<int>(contr.size()); ++r) {
                    std::size_t containing = 0;
                    if (r + fr <= m.rank_total())
                        for (const Flat& g : lat.of_rank(r + fr))
                            if (f.members.subset_of(g.members)) ++containing;
                    CHECK(contr[r] == containing);
                }
            }
    }
}

TEST_CASE("circuits") {
    CHECK(Matroid::uniform(2, 3).circuits() == std::vector<Subset>{Subset::of({0, 1, 2})});
    CHECK(Matroid::uniform(3, 3).circuits().empty());

    auto fano_circuits = fano().circuits();
    std::size_t size3 = 0, size4 = 0;
    for (const Subset& c : fano_circuits) {
        if (c.size() == 3) ++size3;
        if (c.size() == 4) ++size4;
    }
    // 7 line triples plus the 7 four-point line complements: every other
    // 4-subset contains a line, hence a smaller dependent set.
    CHECK(size3 == 7);
    CHECK(size4 == 7);
    CHECK(fano_circuits.size() == 14);
    // No circuit contains another.
    for (const Subset& a : fano_circuits)
        for (const Subset& b : fano_circuits)
            if (a != b) CHECK_FALSE(a.subset_of(b));
}

TEST_CASE("independence") {
    Matroid f = fano();
    CHECK(f.is_independent(Subset{}));
    for (int i = 0; i < 7; ++i) CHECK(f.is_independent(Subset::single(i)));
    for (const Flat& line : f.flats().of_rank(2))
        CHECK_FALSE(f.is_independent(line.members));
}

TEST_CASE("de Bruijn-Erdos bound on the test corpus") {
    std::mt19937_64 rng(29);
    std::vector<Matroid> corpus = {non_pappus(), Matroid::uniform(3, 7),
                                   Matroid::from_lines(5, {Subset::of({0, 1, 2, 3})})};
    for (int t = 0; t < 25; ++t) corpus.push_back(testsupport::random_line_configuration(rng));
    for (const Matroid& m : corpus) {
        if (m.rank_total() != 3) continue;
        auto counts = m.flats().counts();
        CHECK(counts[2] >= counts[1]);
    }
}

TEST_CASE("rank oracle guards") {
    CHECK_THROWS_AS(fano().rank(Subset::of({12})), BadParamsError);
}
