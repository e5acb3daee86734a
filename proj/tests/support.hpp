// Shared test utilities: deterministic random generators and brute-force
// oracles kept independent of the production code paths they check.
#pragma once

#include <random>
#include <vector>

#include "matwork/matrix.hpp"
#include "matwork/matroid.hpp"

namespace testsupport {

using matwork::ExactMatrix;
using matwork::FieldSpec;
using matwork::Matroid;
using matwork::Subset;

inline ExactMatrix random_matrix(std::mt19937_64& rng, const FieldSpec& field,
                                 std::size_t rows, std::size_t cols) {
    ExactMatrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (field.is_rationals()) {
                long num = static_cast<long>(rng() % 21) - 10;
                long den = 1 + static_cast<long>(rng() % 5);
                m.set(i, j, mpq_class(num, den));
            } else {
                m.set(i, j, mpq_class(static_cast<long>(rng() % field.characteristic())));
            }
        }
    return m;
}

inline matwork::Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
    return matwork::Permutation::of(images);
}

/// Random rank-3 point-line configuration: lines of >= 3 points, pairwise
/// sharing at most one point, never covering the whole ground set.
inline Matroid random_line_configuration(std::mt19937_64& rng, int max_n = 9) {
    while (true) {
        const int n = 4 + static_cast<int>(rng() % (max_n - 3));  // 4..max_n
        const int want = static_cast<int>(rng() % 5);
        std::vector<Subset> lines;
        for (int attempt = 0; attempt < 40 && static_cast<int>(lines.size()) < want;
             ++attempt) {
            const int size = 3 + static_cast<int>(rng() % 2);
            if (size >= n) continue;
            Subset cand;
            while (cand.size() < size) cand = cand.with(static_cast<int>(rng() % n));
            bool ok = true;
            for (const Subset& l : lines)
                if (l.intersect(cand).size() > 1) ok = false;
            if (ok) lines.push_back(cand);
        }
        try {
            return Matroid::from_lines(n, lines);
        } catch (const matwork::MatroidError&) {
            continue;  // degenerate draw; resample
        }
    }
}

/// Brute-force flat scan: every subset S with rank(S u {i}) > rank(S) for all
/// i outside S. The independent oracle for the lattice enumerator.
inline std::vector<std::size_t> brute_force_flat_counts(const Matroid& m) {
    std::vector<std::size_t> counts(m.rank_total() + 1, 0);
    const std::uint64_t limit = 1ull << m.n();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        Subset s{bits};
        const int r = m.rank(s);
        bool flat = true;
        for (int i = 0; i < m.n() && flat; ++i)
            if (!s.contains(i) && m.rank(s.with(i)) == r) flat = false;
        if (flat) ++counts[r];
    }
    return counts;
}

}  // namespace testsupport
