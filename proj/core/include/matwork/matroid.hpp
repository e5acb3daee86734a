#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matwork/matrix.hpp"

namespace matwork {

struct MatroidError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LoopDetectedError : MatroidError {
    using MatroidError::MatroidError;
};
struct InvalidLinesError : MatroidError {
    using MatroidError::MatroidError;
};
struct AxiomViolationError : MatroidError {
    using MatroidError::MatroidError;
};
struct NotAFlatError : MatroidError {
    using MatroidError::MatroidError;
};
struct BadParamsError : MatroidError {
    using MatroidError::MatroidError;
};
struct UnknownNameError : MatroidError {
    using MatroidError::MatroidError;
};

/// Subset of an n-element ground set as a bitmask; n <= 63.
struct Subset {
    std::uint64_t bits = 0;

    static Subset full(int n) { return {n == 64 ? ~0ull : (1ull << n) - 1}; }
    static Subset single(int i) { return {1ull << i}; }

    bool contains(int i) const { return (bits >> i) & 1; }
    Subset with(int i) const { return {bits | (1ull << i)}; }
    Subset without(int i) const { return {bits & ~(1ull << i)}; }
    Subset unite(Subset o) const { return {bits | o.bits}; }
    Subset intersect(Subset o) const { return {bits & o.bits}; }
    bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
    int size() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }

    std::vector<int> members() const;
    static Subset of(const std::vector<int>& elems);

    auto operator<=>(const Subset&) const = default;
};

struct Flat {
    Subset members;
    int rank = 0;
    bool operator==(const Flat&) const = default;
};

/// All flats of a matroid, grouped by rank, each group sorted by bitmask.
class FlatLattice {
  public:
    FlatLattice() = default;
    explicit FlatLattice(std::vector<std::vector<Flat>> by_rank);

    int top_rank() const { return static_cast<int>(by_rank_.size()) - 1; }
    const std::vector<Flat>& of_rank(int r) const { return by_rank_.at(r); }
    std::vector<std::size_t> counts() const;

    bool contains(Subset s) const { return index_.count(s.bits) > 0; }
    const Flat& lookup(Subset s) const;
    /// Position of the flat within its rank group.
    std::size_t index_in_rank(Subset s) const;

  private:
    std::vector<std::vector<Flat>> by_rank_;
    std::unordered_map<std::uint64_t, std::pair<int, std::size_t>> index_;
};

struct AxiomReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

enum class AxiomCheckMode { Exhaustive, Randomized };

class Matroid {
  public:
    enum class Kind { Linear, Lines, Uniform, Named, Explicit };

    /// Linear matroid of the row vectors of P; rank(S) = rank of the row
    /// submatrix. Zero rows are loops and rejected.
    static Matroid linear(const ExactMatrix& points);

    /// Rank-3 matroid of a point-line configuration: listed lines are the
    /// nontrivial rank-2 flats. Lines need >= 3 points and pairwise share
    /// at most one point. The resulting rank function is axiom-checked.
    static Matroid from_lines(int n, const std::vector<Subset>& lines);

    static Matroid uniform(int r, int n);

    /// Built-ins: "fano" (projective plane over F_2), "non_pappus".
    static Matroid named(const std::string& name);

    /// Arbitrary rank oracle; used for fixtures and derived matroids.
    static Matroid from_oracle(int n, std::function<int(Subset)> oracle, Kind kind);

    int n() const;
    int rank_total() const;
    Kind kind() const;
    const std::optional<ExactMatrix>& realization() const;

    int rank(Subset s) const;  // memoized
    bool is_independent(Subset s) const { return rank(s) == s.size(); }

    Flat closure(Subset s) const;
    Flat join(const Flat& f, const Flat& g) const;

    /// Full flat lattice, enumerated breadth-first over ranks; cached.
    /// Guarded to n <= 20.
    const FlatLattice& flats() const;

    Matroid restriction(const Flat& f) const;
    Matroid contraction(const Flat& f) const;

    /// Minimal dependent subsets, sorted by (size, bitmask). Guarded to n <= 20.
    std::vector<Subset> circuits() const;

    AxiomReport check_axioms(AxiomCheckMode mode, int trials = 1000,
                             std::uint64_t seed = 1) const;

    struct Impl;  // internal; exposed for the factory helpers only

  private:
    std::shared_ptr<Impl> impl_;
    explicit Matroid(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
};

}  // namespace matwork
