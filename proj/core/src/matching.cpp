#include "matwork/matching.hpp"

#include <algorithm>

namespace matwork {

ContainmentGraph ContainmentGraph::build(const Matroid& m, int r, int r_prime) {
    const FlatLattice& lat = m.flats();
    if (r < 0 || r > r_prime || r_prime > m.rank_total())
        throw RangeViolationError("need 0 <= r <= r' <= rank(M)");
    ContainmentGraph g;
    g.left = lat.of_rank(r);
    g.right = lat.of_rank(r_prime);
    g.adj.resize(g.left.size());
    for (std::size_t i = 0; i < g.left.size(); ++i)
        for (std::size_t j = 0; j < g.right.size(); ++j)
            if (g.left[i].members.subset_of(g.right[j].members)) g.adj[i].push_back(j);
    return g;
}

namespace {

void require_range(const Matroid& m, int r, int r_prime, bool exploratory) {
    if (r < 0 || r > r_prime || r_prime > m.rank_total())
        throw RangeViolationError("need 0 <= r <= r' <= rank(M)");
    if (!exploratory && r + r_prime > m.rank_total())
        throw RangeViolationError(
            "r + r' exceeds rank(M); pass exploratory to compute anyway");
}

// Kuhn-style augmenting search. Adjacency lists are sorted, and left vertices
// are seeded in order, so the first augmenting path found is the
// lexicographically first one.
bool augment(const ContainmentGraph& g, std::size_t u, std::vector<bool>& visited,
             std::vector<std::size_t>& match_right) {
    for (std::size_t v : g.adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        if (match_right[v] == MatchingResult::unmatched ||
            augment(g, match_right[v], visited, match_right)) {
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

bool verify_injectivity(const Matroid& m, int r, int r_prime, const OmegaWeights& w,
                        bool exploratory) {
    require_range(m, r, r_prime, exploratory);
    MobiusAlgebra a = MobiusAlgebra::build(m);
    ExactMatrix power = a.omega_power_matrix(r, r_prime, w);
    return rank(power) == power.cols();
}

bool verify_injectivity(const Matroid& m, int r, int r_prime, bool exploratory) {
    return verify_injectivity(m, r, r_prime,
                              OmegaWeights::unit(m.flats().of_rank(1).size()), exploratory);
}

MatchingResult extract_matching(const Matroid& m, int r, int r_prime, bool exploratory) {
    require_range(m, r, r_prime, exploratory);
    ContainmentGraph g = ContainmentGraph::build(m, r, r_prime);

    std::vector<std::size_t> match_right(g.right.size(), MatchingResult::unmatched);
    for (std::size_t u = 0; u < g.left.size(); ++u) {
        std::vector<bool> visited(g.right.size(), false);
        augment(g, u, visited, match_right);
    }

    MatchingResult res;
    res.r = r;
    res.r_prime = r_prime;
    res.assignment.assign(g.left.size(), MatchingResult::unmatched);
    for (std::size_t v = 0; v < g.right.size(); ++v)
        if (match_right[v] != MatchingResult::unmatched) res.assignment[match_right[v]] = v;
    res.complete = std::all_of(res.assignment.begin(), res.assignment.end(),
                               [](std::size_t v) { return v != MatchingResult::unmatched; });
    for (std::size_t u = 0; u < g.left.size(); ++u)
        if (res.assignment[u] != MatchingResult::unmatched)
            res.pairs.emplace_back(g.left[u], g.right[res.assignment[u]]);

    if (!res.complete && !exploratory && r + r_prime <= m.rank_total())
        throw TheoremFalsifiedError(
            "incomplete containment matching inside the theorem range: r = " +
            std::to_string(r) + ", r' = " + std::to_string(r_prime));
    return res;
}

bool brute_force_matching_exists(const ContainmentGraph& g) {
    if (g.left.size() > 20) throw TooLargeError("Hall enumeration capped at |left| = 20");
    const std::size_t nl = g.left.size();
    std::vector<std::uint64_t> nbr(nl, 0);
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t v : g.adj[i]) nbr[i] |= 1ull << v;
    for (std::uint64_t s = 1; s < (1ull << nl); ++s) {
        std::uint64_t un = 0;
        for (std::size_t i = 0; i < nl; ++i)
            if ((s >> i) & 1) un |= nbr[i];
        if (static_cast<std::size_t>(__builtin_popcountll(un)) <
            static_cast<std::size_t>(__builtin_popcountll(s)))
            return false;
    }
    return true;
}

bool TopHeavyReport::pass() const {
    return increasing_to_middle &&
           std::all_of(comparisons.begin(), comparisons.end(),
                       [](const TopHeavyEntry& e) { return e.holds; });
}

TopHeavyReport top_heavy_report(const Matroid& m) {
    TopHeavyReport rep;
    rep.whitney = m.flats().counts();
    const int d = m.rank_total();
    for (int r = 0; r <= d; ++r)
        for (int rp = r; rp <= d; ++rp) {
            if (r + rp > d) continue;
            rep.comparisons.push_back(
                {r, rp, rep.whitney[r], rep.whitney[rp], rep.whitney[r] <= rep.whitney[rp]});
        }
    rep.increasing_to_middle = true;
    for (int r = 1; 2 * r <= d; ++r)
        if (rep.whitney[r] < rep.whitney[r - 1]) rep.increasing_to_middle = false;
    return rep;
}

}  // namespace matwork
