#pragma once

#include <vector>

#include "matwork/mobius.hpp"

namespace matwork {

struct MatchingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RangeViolationError : MatchingError {
    using MatchingError::MatchingError;
};
/// Raised when a theorem-guaranteed matching or injectivity fails; this means
/// an implementation bug, not a mathematical discovery.
struct TheoremFalsifiedError : MatchingError {
    using MatchingError::MatchingError;
};

/// Bipartite containment graph between rank-r and rank-r' flats.
struct ContainmentGraph {
    std::vector<Flat> left;
    std::vector<Flat> right;
    std::vector<std::vector<std::size_t>> adj;  // per left vertex, sorted right indices

    static ContainmentGraph build(const Matroid& m, int r, int r_prime);
};

struct MatchingResult {
    int r = 0;
    int r_prime = 0;
    /// assignment[i] = right index matched to left vertex i, or npos.
    static constexpr std::size_t unmatched = static_cast<std::size_t>(-1);
    std::vector<std::size_t> assignment;
    bool complete = false;
    std::vector<std::pair<Flat, Flat>> pairs;
};

/// True iff the omega-power matrix from rank r to rank r' has full column
/// rank. Requires r <= r' and r + r' <= rank(M) unless exploratory is set.
bool verify_injectivity(const Matroid& m, int r, int r_prime, const OmegaWeights& w,
                        bool exploratory = false);
bool verify_injectivity(const Matroid& m, int r, int r_prime, bool exploratory = false);

/// Injective containment-respecting matching of rank-r flats into rank-r'
/// flats, by augmenting-path maximum bipartite matching on the containment
/// graph. Left vertices are processed in lattice order and the
/// lexicographically first augmenting path is taken, so output is
/// deterministic. Throws TheoremFalsifiedError if the matching is incomplete
/// inside the theorem range.
MatchingResult extract_matching(const Matroid& m, int r, int r_prime,
                                bool exploratory = false);

/// Independent oracle: Hall's condition checked over all subsets of the left
/// side. Guarded to |left| <= 20.
bool brute_force_matching_exists(const ContainmentGraph& g);

struct TopHeavyEntry {
    int r, r_prime;
    std::size_t count_r, count_r_prime;
    bool holds;
};

struct TopHeavyReport {
    std::vector<std::size_t> whitney;
    std::vector<TopHeavyEntry> comparisons;  // all r <= r', r + r' <= rank
    bool increasing_to_middle = false;
    bool pass() const;
};

TopHeavyReport top_heavy_report(const Matroid& m);

}  // namespace matwork
