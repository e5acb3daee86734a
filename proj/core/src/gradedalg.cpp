#include "matwork/gradedalg.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace matwork {

MonomialAlgebraSpec::MonomialAlgebraSpec(std::vector<int> caps_, std::vector<int> degrees_)
    : caps(std::move(caps_)), degrees(std::move(degrees_)) {
    if (caps.size() != degrees.size())
        throw GradedAlgError("caps and degrees must have equal length");
    for (int m : caps)
        if (m < 0) throw GradedAlgError("caps must be nonnegative");
    for (int d : degrees)
        if (d <= 0) throw GradedAlgError("degrees must be positive");
}

long MonomialAlgebraSpec::topdeg() const {
    long t = 0;
    for (std::size_t i = 0; i < caps.size(); ++i) t += static_cast<long>(caps[i]) * degrees[i];
    return t;
}

bool MonomialAlgebraSpec::unit_degrees() const {
    return std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 1; });
}

std::vector<std::vector<int>> monomial_basis(const MonomialAlgebraSpec& spec, long k) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(spec.vars(), 0);
    // Depth-first over exponent choices, lexicographic by construction.
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long remaining) {
        if (remaining < 0) return;
        if (i == spec.vars()) {
            if (remaining == 0) out.push_back(e);
            return;
        }
        for (int c = 0; c <= spec.caps[i]; ++c) {
            e[i] = c;
            rec(i + 1, remaining - static_cast<long>(c) * spec.degrees[i]);
        }
        e[i] = 0;
    };
    rec(0, k);
    return out;
}

std::vector<std::uint64_t> graded_dims(const MonomialAlgebraSpec& spec) {
    const long top = spec.topdeg();
    if (top > 1000000) throw TooLargeError("graded_dims table capped at topdeg = 10^6");
    std::vector<std::uint64_t> dims(top + 1, 0);
    dims[0] = 1;
    // Bounded-knapsack over one variable at a time.
    for (std::size_t i = 0; i < spec.vars(); ++i) {
        std::vector<std::uint64_t> next(top + 1, 0);
        for (long k = 0; k <= top; ++k) {
            if (dims[k] == 0) continue;
            for (int c = 0; c <= spec.caps[i]; ++c) {
                const long k2 = k + static_cast<long>(c) * spec.degrees[i];
                if (k2 > top) break;
                next[k2] += dims[k];
            }
        }
        dims = std::move(next);
    }
    return dims;
}

ExactMatrix omega_matrix(const MonomialAlgebraSpec& spec, long from_deg) {
    if (!spec.unit_degrees())
        throw WeightedDegreesError("omega is only defined for unit-degree generators");
    auto lo = monomial_basis(spec, from_deg);
    auto hi = monomial_basis(spec, from_deg + 1);
    std::map<std::vector<int>, std::size_t> hi_index;
    for (std::size_t i = 0; i < hi.size(); ++i) hi_index[hi[i]] = i;

    ExactMatrix m(FieldSpec::rationals(), hi.size(), lo.size());
    for (std::size_t col = 0; col < lo.size(); ++col) {
        for (std::size_t v = 0; v < spec.vars(); ++v) {
            if (lo[col][v] >= spec.caps[v]) continue;
            std::vector<int> e = lo[col];
            ++e[v];
            m.set(hi_index.at(e), col, 1);
        }
    }
    return m;
}

bool HlpReport::pass() const {
    return std::all_of(levels.begin(), levels.end(),
                       [](const HlpLevel& l) { return l.isomorphism; });
}

HlpReport hlp_check(const MonomialAlgebraSpec& spec) {
    if (!spec.unit_degrees())
        throw WeightedDegreesError("hlp_check requires unit-degree generators");
    const long top = spec.topdeg();
    if (top > 24) throw TooLargeError("hlp_check capped at topdeg = 24");
    std::uint64_t total = 1;
    for (int m : spec.caps) total *= static_cast<std::uint64_t>(m) + 1;
    if (total > 100000) throw TooLargeError("hlp_check capped at 10^5 basis monomials");

    HlpReport report;
    for (long i = 0; 2 * i < top; ++i) {
        ExactMatrix power = ExactMatrix::identity(FieldSpec::rationals(),
                                                  monomial_basis(spec, i).size());
        for (long k = i; k < top - i; ++k) power = omega_matrix(spec, k) * power;
        const std::uint64_t dlow = power.cols(), dhigh = power.rows();
        const bool iso = dlow == dhigh && rank(power) == dlow;
        report.levels.push_back({i, dlow, dhigh, iso});
    }
    return report;
}

bool palindrome_check(const MonomialAlgebraSpec& spec) {
    auto dims = graded_dims(spec);
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (dims[k] != dims[dims.size() - 1 - k]) return false;
    return true;
}

bool unimodal_check(const std::vector<std::uint64_t>& dims) {
    std::size_t k = 1;
    while (k < dims.size() && dims[k] >= dims[k - 1]) ++k;
    while (k < dims.size() && dims[k] <= dims[k - 1]) ++k;
    return k == dims.size();
}

}  // namespace matwork
