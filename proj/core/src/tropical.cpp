#include "matwork/tropical.hpp"

namespace matwork {

TropEvalResult trop_eval(const TropPolynomial& p, const TropPoint& xi) {
    if (xi.coords.size() != p.n) throw DimensionMismatchError("point dimension mismatch");
    if (p.terms.empty()) throw TropicalError("polynomial has no terms");

    std::vector<TropValue> values;
    values.reserve(p.terms.size());
    for (const auto& term : p.terms) {
        if (term.beta.size() != p.n) throw DimensionMismatchError("term arity mismatch");
        TropValue acc = term.val;
        for (std::size_t i = 0; i < p.n; ++i) {
            if (term.beta[i] == 0) continue;
            const TropValue& c = xi.coords[i];
            if (!c.finite) {
                // beta_i * (-inf) with beta_i != 0 absorbs the term.
                acc = TropValue::neg_inf();
                break;
            }
            acc = acc.plus(TropValue::of(c.v * term.beta[i]));
        }
        values.push_back(acc);
    }

    TropValue best = values[0];
    for (const auto& v : values)
        if (best < v) best = v;
    std::size_t count = 0;
    for (const auto& v : values)
        if (v == best) ++count;
    return {best, count};
}

bool vanishes(const TropPolynomial& p, const TropPoint& xi) {
    TropEvalResult r = trop_eval(p, xi);
    return r.argmax_count >= 2 || !r.value.finite;
}

TropLinearSpace tropical_linear_space(const Matroid& m) {
    return TropLinearSpace{static_cast<std::size_t>(m.n()), m.circuits()};
}

bool member(const TropLinearSpace& t, const TropPoint& xi) {
    if (xi.coords.size() != t.n) throw DimensionMismatchError("point dimension mismatch");
    for (const Subset& circuit : t.circuits) {
        TropValue best = TropValue::neg_inf();
        std::size_t count = 0;
        bool any_finite = false;
        for (int i : circuit.members()) {
            const TropValue& c = xi.coords[i];
            if (c.finite) any_finite = true;
            if (best < c) {
                best = c;
                count = 1;
            } else if (c == best) {
                ++count;
            }
        }
        if (!any_finite) continue;  // all -inf on this circuit
        if (count < 2) return false;
    }
    return true;
}

}  // namespace matwork
