#include "matwork/matroid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace matwork {

std::vector<int> Subset::members() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

Subset Subset::of(const std::vector<int>& elems) {
    Subset s;
    for (int i : elems) s.bits |= 1ull << i;
    return s;
}

FlatLattice::FlatLattice(std::vector<std::vector<Flat>> by_rank) : by_rank_(std::move(by_rank)) {
    for (int r = 0; r <= top_rank(); ++r) {
        auto& level = by_rank_[r];
        std::sort(level.begin(), level.end(),
                  [](const Flat& a, const Flat& b) { return a.members.bits < b.members.bits; });
        for (std::size_t i = 0; i < level.size(); ++i)
            index_[level[i].members.bits] = {r, i};
    }
}

std::vector<std::size_t> FlatLattice::counts() const {
    std::vector<std::size_t> c;
    for (const auto& level : by_rank_) c.push_back(level.size());
    return c;
}

const Flat& FlatLattice::lookup(Subset s) const {
    auto it = index_.find(s.bits);
    if (it == index_.end()) throw NotAFlatError("subset is not a flat");
    return by_rank_[it->second.first][it->second.second];
}

std::size_t FlatLattice::index_in_rank(Subset s) const {
    auto it = index_.find(s.bits);
    if (it == index_.end()) throw NotAFlatError("subset is not a flat");
    return it->second.second;
}

struct Matroid::Impl {
    int n = 0;
    int rank_total = 0;
    Kind kind = Kind::Explicit;
    std::function<int(Subset)> oracle;
    std::optional<ExactMatrix> realization;

    mutable std::mutex memo_mutex;
    mutable std::unordered_map<std::uint64_t, int> memo;
    mutable std::mutex lattice_mutex;
    mutable std::optional<FlatLattice> lattice;

    int rank(Subset s) const {
        {
            std::lock_guard<std::mutex> lk(memo_mutex);
            auto it = memo.find(s.bits);
            if (it != memo.end()) return it->second;
        }
        int r = oracle(s);
        std::lock_guard<std::mutex> lk(memo_mutex);
        memo.emplace(s.bits, r);
        return r;
    }
};

namespace {

std::shared_ptr<Matroid::Impl> make_impl(int n, Matroid::Kind kind,
                                         std::function<int(Subset)> oracle) {
    if (n < 0 || n > 63) throw BadParamsError("ground set size must be in [0, 63]");
    auto impl = std::make_shared<Matroid::Impl>();
    impl->n = n;
    impl->kind = kind;
    impl->oracle = std::move(oracle);
    impl->rank_total = impl->rank(Subset::full(n));
    return impl;
}

}  // namespace

Matroid Matroid::from_oracle(int n, std::function<int(Subset)> oracle, Kind kind) {
    return Matroid(make_impl(n, kind, std::move(oracle)));
}

Matroid Matroid::linear(const ExactMatrix& points) {
    const int n = static_cast<int>(points.rows());
    if (points.cols() < 1) throw BadParamsError("realization needs at least one column");
    for (int i = 0; i < n; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < points.cols(); ++j)
            if (points.at(i, j) != 0) zero = false;
        if (zero) throw LoopDetectedError("zero row " + std::to_string(i) + " is a loop");
    }
    ExactMatrix p = points;
    auto impl = make_impl(n, Kind::Linear, [p](Subset s) {
        std::vector<std::size_t> idx;
        for (int i : s.members()) idx.push_back(static_cast<std::size_t>(i));
        return static_cast<int>(matwork::rank(p.select_rows(idx)));
    });
    impl->realization = points;
    return Matroid(impl);
}

Matroid Matroid::from_lines(int n, const std::vector<Subset>& lines) {
    if (n < 3) throw BadParamsError("line configurations need n >= 3");
    for (const auto& l : lines) {
        if (l.size() < 3) throw InvalidLinesError("every line needs >= 3 points");
        if (!l.subset_of(Subset::full(n))) throw InvalidLinesError("line exceeds ground set");
    }
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b)
            if (lines[a].intersect(lines[b]).size() > 1)
                throw InvalidLinesError("two lines share more than one point");

    std::vector<Subset> ls = lines;
    auto impl = make_impl(n, Kind::Lines, [ls](Subset s) {
        const int k = s.size();
        if (k <= 1) return k;
        for (const auto& l : ls)
            if (s.subset_of(l)) return 2;
        return k == 2 ? 2 : 3;
    });
    Matroid m(impl);
    AxiomReport report = m.check_axioms(n <= 12 ? AxiomCheckMode::Exhaustive
                                                : AxiomCheckMode::Randomized);
    if (!report.pass())
        throw AxiomViolationError("line configuration violates matroid axioms: " +
                                  report.violations.front());
    return m;
}

Matroid Matroid::uniform(int r, int n) {
    if (r < 1 || r > n) throw BadParamsError("uniform matroid needs 1 <= r <= n");
    return from_oracle(n, [r](Subset s) { return std::min(s.size(), r); }, Kind::Uniform);
}

Matroid Matroid::named(const std::string& name) {
    if (name == "fano") {
        // The 7 points of the projective plane over F_2.
        ExactMatrix p(FieldSpec::prime_field(2),
                      {{1, 0, 0},
                       {0, 1, 0},
                       {0, 0, 1},
                       {1, 1, 0},
                       {0, 1, 1},
                       {1, 0, 1},
                       {1, 1, 1}});
        Matroid m = linear(p);
        m.impl_->kind = Kind::Named;
        return m;
    }
    if (name == "non_pappus") {
        // Pappus configuration with the middle line {3,4,5} removed.
        std::vector<Subset> lines = {
            Subset::of({0, 1, 2}), Subset::of({6, 7, 8}), Subset::of({0, 4, 6}),
            Subset::of({0, 5, 7}), Subset::of({1, 3, 6}), Subset::of({1, 5, 8}),
            Subset::of({2, 3, 7}), Subset::of({2, 4, 8})};
        Matroid m = from_lines(9, lines);
        m.impl_->kind = Kind::Named;
        return m;
    }
    throw UnknownNameError("unknown matroid name: " + name);
}

int Matroid::n() const { return impl_->n; }
int Matroid::rank_total() const { return impl_->rank_total; }
Matroid::Kind Matroid::kind() const { return impl_->kind; }
const std::optional<ExactMatrix>& Matroid::realization() const { return impl_->realization; }

int Matroid::rank(Subset s) const {
    if (!s.subset_of(Subset::full(impl_->n))) throw BadParamsError("subset exceeds ground set");
    return impl_->rank(s);
}

Flat Matroid::closure(Subset s) const {
    const int r = rank(s);
    Subset cl = s;
    for (int i = 0; i < impl_->n; ++i)
        if (!s.contains(i) && rank(s.with(i)) == r) cl = cl.with(i);
    return Flat{cl, r};
}

Flat Matroid::join(const Flat& f, const Flat& g) const { return closure(f.members.unite(g.members)); }

const FlatLattice& Matroid::flats() const {
    std::lock_guard<std::mutex> lk(impl_->lattice_mutex);
    if (impl_->lattice) return *impl_->lattice;
    if (impl_->n > 20) throw TooLargeError("flat enumeration capped at n = 20");

    // Breadth-first over ranks: covers of each flat are closures of one-element
    // extensions.
    std::vector<std::vector<Flat>> by_rank(impl_->rank_total + 1);
    by_rank[0] = {closure(Subset{})};
    for (int r = 0; r < impl_->rank_total; ++r) {
        std::set<std::uint64_t> next;
        for (const Flat& f : by_rank[r])
            for (int i = 0; i < impl_->n; ++i) {
                if (f.members.contains(i)) continue;
                Flat g = closure(f.members.with(i));
                if (g.rank == r + 1) next.insert(g.members.bits);
            }
        for (std::uint64_t bits : next) by_rank[r + 1].push_back(Flat{Subset{bits}, r + 1});
    }
    impl_->lattice.emplace(std::move(by_rank));
    return *impl_->lattice;
}

Matroid Matroid::restriction(const Flat& f) const {
    if (closure(f.members).members != f.members || rank(f.members) != f.rank)
        throw NotAFlatError("restriction target is not a flat");
    std::vector<int> old_index = f.members.members();
    auto parent = impl_;
    Matroid m = from_oracle(
        static_cast<int>(old_index.size()),
        [parent, old_index](Subset s) {
            Subset t;
            for (int i = 0; i < static_cast<int>(old_index.size()); ++i)
                if (s.contains(i)) t = t.with(old_index[i]);
            return parent->rank(t);
        },
        Kind::Explicit);
    if (parent->realization) {
        std::vector<std::size_t> idx(old_index.begin(), old_index.end());
        m.impl_->realization = parent->realization->select_rows(idx);
    }
    return m;
}

Matroid Matroid::contraction(const Flat& f) const {
    if (closure(f.members).members != f.members || rank(f.members) != f.rank)
        throw NotAFlatError("contraction target is not a flat");
    if (f.members == Subset::full(impl_->n))
        throw BadParamsError("cannot contract the full ground set");
    std::vector<int> old_index;
    for (int i = 0; i < impl_->n; ++i)
        if (!f.members.contains(i)) old_index.push_back(i);
    auto parent = impl_;
    const Subset base = f.members;
    const int base_rank = f.rank;
    return from_oracle(
        static_cast<int>(old_index.size()),
        [parent, old_index, base, base_rank](Subset s) {
            Subset t = base;
            for (int i = 0; i < static_cast<int>(old_index.size()); ++i)
                if (s.contains(i)) t = t.with(old_index[i]);
            return parent->rank(t) - base_rank;
        },
        Kind::Explicit);
}

std::vector<Subset> Matroid::circuits() const {
    if (impl_->n > 20) throw TooLargeError("circuit enumeration capped at n = 20");
    std::vector<Subset> out;
    const std::uint64_t limit = 1ull << impl_->n;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
        Subset s{bits};
        if (rank(s) >= s.size()) continue;
        bool minimal = true;
        for (int i : s.members())
            if (rank(s.without(i)) < s.size() - 1) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
    });
    return out;
}

AxiomReport Matroid::check_axioms(AxiomCheckMode mode, int trials, std::uint64_t seed) const {
    AxiomReport report;
    const int n = impl_->n;
    auto note = [&report](std::string msg) {
        if (report.violations.size() < 100) report.violations.push_back(std::move(msg));
    };

    if (rank(Subset{}) != 0) note("rank(empty) != 0");
    for (int i = 0; i < n; ++i)
        if (rank(Subset::single(i)) != 1)
            note("rank({" + std::to_string(i) + "}) != 1 (loop or bad normalization)");

    if (mode == AxiomCheckMode::Exhaustive) {
        if (n > 12) throw BadParamsError("exhaustive axiom check capped at n = 12");
        const std::uint64_t limit = 1ull << n;
        for (std::uint64_t bits = 0; bits < limit; ++bits) {
            Subset s{bits};
            const int rs = rank(s);
            if (rs > s.size()) note("rank exceeds cardinality on " + std::to_string(bits));
            for (int i = 0; i < n; ++i) {
                if (s.contains(i)) continue;
                const int step = rank(s.with(i)) - rs;
                if (step < 0 || step > 1)
                    note("unit-increase fails on " + std::to_string(bits) + " + " +
                         std::to_string(i));
                for (int j = i + 1; j < n; ++j) {
                    if (s.contains(j)) continue;
                    // Local submodularity; with unit increase this is
                    // equivalent to the global pairwise form.
                    if (rank(s.with(i)) + rank(s.with(j)) <
                        rank(s.with(i).with(j)) + rs)
                        note("local submodularity fails on " + std::to_string(bits) + " with " +
                             std::to_string(i) + "," + std::to_string(j));
                }
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        const std::uint64_t mask = Subset::full(n).bits;
        for (int t = 0; t < trials; ++t) {
            Subset s1{rng() & mask}, s2{rng() & mask};
            if (rank(s1.unite(s2)) + rank(s1.intersect(s2)) > rank(s1) + rank(s2))
                note("submodularity fails on sampled pair");
            Subset sub = s1.intersect(s2);
            if (rank(sub) > rank(s1)) note("monotonicity fails on sampled pair");
        }
    }
    return report;
}

}  // namespace matwork
