// Acceptance suite: eight end-to-end criteria, one pass/fail line each.
// Exit status 0 iff every criterion passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "matwork/cochain.hpp"
#include "matwork/gradedalg.hpp"
#include "matwork/matching.hpp"
#include "matwork/mobius.hpp"
#include "matwork/tropical.hpp"
#include "support.hpp"

using namespace matwork;

namespace {

struct Criterion {
    std::string name;
    std::function<bool()> run;
    double budget_seconds;
};

bool fano_suite() {
    Matroid fano = Matroid::named("fano");
    auto report = top_heavy_report(fano);
    if (report.whitney != std::vector<std::size_t>{1, 7, 7, 1}) return false;
    if (!verify_injectivity(fano, 1, 2)) return false;
    auto res = extract_matching(fano, 1, 2);
    if (!res.complete || res.pairs.size() != 7) return false;
    std::set<std::uint64_t> used;
    for (const auto& [p, line] : res.pairs) {
        if (!p.members.subset_of(line.members)) return false;
        if (!used.insert(line.members.bits).second) return false;
    }
    return true;
}

bool non_pappus_suite() {
    Matroid np = Matroid::named("non_pappus");
    auto axioms = np.check_axioms(AxiomCheckMode::Exhaustive);
    if (!axioms.pass()) return false;
    auto brute = testsupport::brute_force_flat_counts(np);
    if (brute != std::vector<std::size_t>{1, 9, 20, 1}) return false;
    auto report = top_heavy_report(np);
    if (report.whitney != std::vector<std::size_t>{1, 9, 20, 1}) return false;
    return verify_injectivity(np, 1, 2);
}

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

bool uniform_suite() {
    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= n; ++r) {
            if (binomial(n, r / 2) > 3000) continue;  // keep flat lists small
            Matroid u = Matroid::uniform(r, n);
            auto report = top_heavy_report(u);
            if (!report.pass()) return false;
            for (int k = 0; k < r; ++k)
                if (report.whitney[k] != binomial(n, k)) return false;
            if (report.whitney[r] != 1) return false;
        }
    // The (d, n) = (6, 10) instance in full.
    auto big = top_heavy_report(Matroid::uniform(6, 10));
    if (big.whitney != std::vector<std::size_t>{1, 10, 45, 120, 210, 252, 1}) return false;
    return big.pass();
}

bool theorem_sweep() {
    std::mt19937_64 rng(20260824);
    std::vector<Matroid> corpus = {
        Matroid::named("fano"), Matroid::named("non_pappus"), Matroid::uniform(3, 7),
        Matroid::uniform(4, 6), Matroid::uniform(2, 5)};
    for (int t = 0; t < 200; ++t)
        corpus.push_back(testsupport::random_line_configuration(rng, 9));
    for (const Matroid& m : corpus) {
        const int d = m.rank_total();
        for (int r = 0; r <= d; ++r)
            for (int rp = r; rp <= d; ++rp) {
                if (r + rp > d) continue;
                if (!verify_injectivity(m, r, rp)) return false;
                auto res = extract_matching(m, r, rp);
                if (!res.complete) return false;
                ContainmentGraph g = ContainmentGraph::build(m, r, rp);
                if (g.left.size() <= 12 && !brute_force_matching_exists(g)) return false;
            }
    }
    return true;
}

bool graded_algebra_suite() {
    const std::vector<int> won = {1, 5, 10, 50, 100, 500};
    auto single = graded_dims(MonomialAlgebraSpec({1, 1, 1, 1, 1, 1}, won));
    std::vector<std::uint64_t> one_each = {1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0};
    auto many = graded_dims(MonomialAlgebraSpec({666, 666, 666, 666, 666, 666}, won));
    std::vector<std::uint64_t> unbounded = {1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 4, 4, 4};
    for (std::size_t k = 0; k < 13; ++k)
        if (single[k] != one_each[k] || many[k] != unbounded[k]) return false;

    MonomialAlgebraSpec caps31({3, 1}, {1, 1});
    ExactMatrix power = ExactMatrix::identity(FieldSpec::rationals(), 1);
    for (long k = 0; k < 4; ++k) power = omega_matrix(caps31, k) * power;
    if (power.rows() != 1 || power.at(0, 0) != 4) return false;

    // Every caps vector with N <= 4 and sum <= 8, unit degrees.
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> caps(n, 0);
        bool ok = true;
        std::function<void(int, int)> sweep = [&](int i, int budget) {
            if (!ok) return;
            if (i == n) {
                ok = hlp_check(MonomialAlgebraSpec(caps, std::vector<int>(n, 1))).pass();
                return;
            }
            for (int c = 0; c <= budget; ++c) {
                caps[i] = c;
                sweep(i + 1, budget - c);
            }
        };
        sweep(0, 8);
        if (!ok) return false;
    }

    std::mt19937_64 rng(48);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        std::vector<int> caps, degs;
        for (int i = 0; i < n; ++i) {
            caps.push_back(static_cast<int>(rng() % 5));
            degs.push_back(1 + static_cast<int>(rng() % 6));
        }
        MonomialAlgebraSpec spec(caps, degs);
        if (!palindrome_check(spec)) return false;
        if (spec.unit_degrees() && spec.topdeg() <= 20 &&
            !unimodal_check(graded_dims(spec)))
            return false;
    }
    return !unimodal_check(single);
}

bool exact_linear_algebra_suite() {
    std::mt19937_64 rng(2026);
    for (const FieldSpec& field : {FieldSpec::rationals(), FieldSpec::prime_field(7)})
        for (int t = 0; t < 1000; ++t) {
            const std::size_t n = 1 + rng() % 6;
            ExactMatrix m = testsupport::random_matrix(rng, field, n, n);
            if (det_elimination(m) != det_permutation_sum(m)) return false;
        }
    for (int t = 0; t < 500; ++t) {
        ExactMatrix m = testsupport::random_matrix(rng, FieldSpec::rationals(),
                                                   1 + rng() % 6, 1 + rng() % 6);
        if (rank(m) != rank(m.transpose())) return false;
        auto r = rref(m);
        if (rref(r.reduced).reduced != r.reduced) return false;
    }
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 2 + rng() % 6;
        Permutation a = testsupport::random_permutation(rng, n);
        Permutation b = testsupport::random_permutation(rng, n);
        if (permutation_sign(a.compose(b)) !=
            permutation_sign(a) * permutation_sign(b))
            return false;
    }
    return true;
}

bool cochain_suite() {
    const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime_field(2),
                                FieldSpec::prime_field(5)};
    std::vector<CellComplex2> all;
    for (int k = 2; k <= 6; ++k) all.push_back(torus_grid(k));
    for (const auto& field : fields)
        for (const auto& x : all)
            if (cohomology_dims(x, field) != std::array<std::size_t, 3>{1, 2, 1})
                return false;
    all.push_back(cube_surface());
    all.push_back(simplicial_torus());
    for (const auto& x : all)
        for (const auto& field : fields) {
            auto h = cohomology_dims(x, field);  // asserts the Euler identity
            if (static_cast<long>(h[0]) - static_cast<long>(h[1]) +
                    static_cast<long>(h[2]) !=
                x.euler_characteristic())
                return false;
            ExactMatrix comp = d1_matrix(x, field) * d0_matrix(x, field);
            for (std::size_t i = 0; i < comp.rows(); ++i)
                for (std::size_t j = 0; j < comp.cols(); ++j)
                    if (comp.at(i, j) != 0) return false;
        }
    for (int k = 2; k <= 3; ++k) {
        auto x = torus_grid(k);
        auto y = subdivide_edges(x);
        for (const auto& field : fields)
            if (cohomology_dims(y, field) != cohomology_dims(x, field)) return false;
    }
    return true;
}

bool tropical_suite() {
    auto fin = [](long v) { return TropValue::of(mpq_class(v)); };
    auto u23 = tropical_linear_space(Matroid::uniform(2, 3));
    if (!member(u23, TropPoint{{fin(0), fin(0), fin(-1)}})) return false;
    if (member(u23, TropPoint{{fin(0), fin(-1), fin(-2)}})) return false;
    if (!member(u23, TropPoint{{TropValue::neg_inf(), TropValue::neg_inf(),
                                TropValue::neg_inf()}}))
        return false;

    auto np = tropical_linear_space(Matroid::named("non_pappus"));
    if (!member(np, TropPoint{std::vector<TropValue>(np.n, fin(3))})) return false;

    std::mt19937_64 rng(49);
    std::vector<TropLinearSpace> spaces = {u23, np,
                                           tropical_linear_space(Matroid::named("fano"))};
    for (int t = 0; t < 1000; ++t) {
        const TropLinearSpace& space = spaces[t % spaces.size()];
        mpq_class c(static_cast<long>(rng() % 31) - 15, 1 + static_cast<long>(rng() % 4));
        TropPoint xi, shifted;
        for (std::size_t i = 0; i < space.n; ++i) {
            if (rng() % 6 == 0) {
                xi.coords.push_back(TropValue::neg_inf());
                shifted.coords.push_back(TropValue::neg_inf());
            } else {
                mpq_class v(static_cast<long>(rng() % 11) - 5);
                xi.coords.push_back(TropValue::of(v));
                shifted.coords.push_back(TropValue::of(v + c));
            }
        }
        if (member(space, xi) != member(space, shifted)) return false;
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"fano suite", fano_suite, 1.0},
        {"non-pappus suite", non_pappus_suite, 5.0},
        {"uniform matroid suite", uniform_suite, 10.0},
        {"injectivity and matching sweep", theorem_sweep, 120.0},
        {"graded algebra suite", graded_algebra_suite, 30.0},
        {"exact linear algebra suite", exact_linear_algebra_suite, 30.0},
        {"cochain suite", cochain_suite, 30.0},
        {"tropical suite", tropical_suite, 10.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (seconds > c.budget_seconds) {
            ok = false;
            note += " (over time budget)";
        }
        if (!ok) ++failures;
        std::printf("[%zu/%zu] %-32s %s  (%.2fs, budget %.0fs)%s\n", i + 1,
                    criteria.size(), c.name.c_str(), ok ? "PASS" : "FAIL", seconds,
                    c.budget_seconds, note.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
