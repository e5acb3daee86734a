#include "matwork/cochain.hpp"

#include <map>

namespace matwork {

namespace {

// Tail/head of a signed boundary step.
int step_tail(const CellComplex2& x, std::size_t e, int sign) {
    return sign > 0 ? x.edges[e].first : x.edges[e].second;
}
int step_head(const CellComplex2& x, std::size_t e, int sign) {
    return sign > 0 ? x.edges[e].second : x.edges[e].first;
}

}  // namespace

void CellComplex2::validate() const {
    for (const auto& [t, h] : edges)
        if (t < 0 || t >= vertex_count || h < 0 || h >= vertex_count)
            throw CochainError("edge endpoint out of range");
    std::vector<int> multiplicity(edges.size(), 0);
    for (const auto& walk : faces) {
        if (walk.empty()) throw CochainError("empty face boundary walk");
        for (std::size_t s = 0; s < walk.size(); ++s) {
            auto [e, sign] = walk[s];
            if (e >= edges.size() || (sign != 1 && sign != -1))
                throw CochainError("bad boundary step");
            ++multiplicity[e];
            auto [en, sn] = walk[(s + 1) % walk.size()];
            if (step_head(*this, e, sign) != step_tail(*this, en, sn))
                throw CochainError("face boundary walk is not a closed path");
        }
    }
    if (closed)
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (multiplicity[e] != 2)
                throw CochainError("closed surface needs each edge on exactly 2 faces");
}

std::vector<mpq_class> d0(const CellComplex2& x, const std::vector<mpq_class>& f0,
                          const FieldSpec& field) {
    if (f0.size() != static_cast<std::size_t>(x.vertex_count))
        throw SizeMismatchError("vertex function has wrong length");
    std::vector<mpq_class> out;
    out.reserve(x.edges.size());
    for (const auto& [t, h] : x.edges) out.push_back(field.sub(f0[h], f0[t]));
    return out;
}

std::vector<mpq_class> d1(const CellComplex2& x, const std::vector<mpq_class>& f1,
                          const FieldSpec& field) {
    if (f1.size() != x.edges.size()) throw SizeMismatchError("edge function has wrong length");
    std::vector<mpq_class> out;
    out.reserve(x.faces.size());
    for (const auto& walk : x.faces) {
        mpq_class acc = 0;
        for (auto [e, sign] : walk) acc += sign > 0 ? f1[e] : -f1[e];
        out.push_back(field.canonical(acc));
    }
    return out;
}

ExactMatrix d0_matrix(const CellComplex2& x, const FieldSpec& field) {
    ExactMatrix m(field, x.edges.size(), x.vertex_count);
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        auto [t, h] = x.edges[e];
        m.set(e, h, field.add(m.at(e, h), 1));
        m.set(e, t, field.sub(m.at(e, t), 1));
    }
    return m;
}

ExactMatrix d1_matrix(const CellComplex2& x, const FieldSpec& field) {
    ExactMatrix m(field, x.faces.size(), x.edges.size());
    for (std::size_t f = 0; f < x.faces.size(); ++f)
        for (auto [e, sign] : x.faces[f])
            m.set(f, e, field.add(m.at(f, e), sign));
    return m;
}

std::array<std::size_t, 3> cohomology_dims(const CellComplex2& x, const FieldSpec& field) {
    x.validate();
    const std::size_t r0 = rank(d0_matrix(x, field));
    const std::size_t r1 = rank(d1_matrix(x, field));
    const std::size_t h0 = x.vertex_count - r0;
    const std::size_t h1 = x.edges.size() - r0 - r1;
    const std::size_t h2 = x.faces.size() - r1;
    if (static_cast<long>(h0) - static_cast<long>(h1) + static_cast<long>(h2) !=
        x.euler_characteristic())
        throw CochainError("alternating-sum identity violated (internal error)");
    return {h0, h1, h2};
}

CellComplex2 torus_grid(int k) {
    if (k < 2) throw CochainError("torus grid needs k >= 2");
    CellComplex2 x;
    x.vertex_count = k * k;
    x.closed = true;
    auto v = [k](int i, int j) { return ((j % k + k) % k) * k + (i % k + k) % k; };
    // First k^2 edges go right, next k^2 go up.
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) x.edges.emplace_back(v(i, j), v(i + 1, j));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) x.edges.emplace_back(v(i, j), v(i, j + 1));
    auto right = [k](int i, int j) {
        return static_cast<std::size_t>(((j % k + k) % k) * k + (i % k + k) % k);
    };
    auto up = [k, right](int i, int j) {
        return static_cast<std::size_t>(k) * k + right(i, j);
    };
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            x.faces.push_back({{right(i, j), 1},
                               {up(i + 1, j), 1},
                               {right(i, j + 1), -1},
                               {up(i, j), -1}});
    x.validate();
    return x;
}

CellComplex2 cube_surface() {
    CellComplex2 x;
    x.vertex_count = 8;  // 0..3 bottom ring, 4..7 top ring
    x.closed = true;
    x.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0},   // bottom
               {4, 5}, {5, 6}, {6, 7}, {7, 4},   // top
               {0, 4}, {1, 5}, {2, 6}, {3, 7}};  // verticals
    x.faces = {
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}},      // bottom
        {{7, -1}, {6, -1}, {5, -1}, {4, -1}},  // top
        {{0, 1}, {9, 1}, {4, -1}, {8, -1}},
        {{1, 1}, {10, 1}, {5, -1}, {9, -1}},
        {{2, 1}, {11, 1}, {6, -1}, {10, -1}},
        {{3, 1}, {8, 1}, {7, -1}, {11, -1}},
    };
    x.validate();
    return x;
}

CellComplex2 simplicial_torus() {
    const int k = 3;
    CellComplex2 x;
    x.vertex_count = k * k;
    x.closed = true;
    auto v = [k](int i, int j) { return ((j % k + k) % k) * k + (i % k + k) % k; };
    auto cell = [k](int i, int j) {
        return static_cast<std::size_t>(((j % k + k) % k) * k + (i % k + k) % k);
    };
    // Edge layout: k^2 horizontal, k^2 vertical, k^2 diagonal.
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) x.edges.emplace_back(v(i, j), v(i + 1, j));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) x.edges.emplace_back(v(i, j), v(i, j + 1));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) x.edges.emplace_back(v(i, j), v(i + 1, j + 1));
    auto hor = cell;
    auto ver = [k, cell](int i, int j) { return static_cast<std::size_t>(k) * k + cell(i, j); };
    auto diag = [k, cell](int i, int j) {
        return 2 * static_cast<std::size_t>(k) * k + cell(i, j);
    };
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) {
            x.faces.push_back({{hor(i, j), 1}, {ver(i + 1, j), 1}, {diag(i, j), -1}});
            x.faces.push_back({{diag(i, j), 1}, {hor(i, j + 1), -1}, {ver(i, j), -1}});
        }
    x.validate();
    return x;
}

CellComplex2 subdivide_edges(const CellComplex2& x) {
    CellComplex2 y;
    y.vertex_count = x.vertex_count + static_cast<int>(x.edges.size());
    y.closed = x.closed;
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        const int mid = x.vertex_count + static_cast<int>(e);
        y.edges.emplace_back(x.edges[e].first, mid);   // 2e
        y.edges.emplace_back(mid, x.edges[e].second);  // 2e + 1
    }
    for (const auto& walk : x.faces) {
        std::vector<std::pair<std::size_t, int>> w;
        for (auto [e, sign] : walk) {
            if (sign > 0) {
                w.push_back({2 * e, 1});
                w.push_back({2 * e + 1, 1});
            } else {
                w.push_back({2 * e + 1, -1});
                w.push_back({2 * e, -1});
            }
        }
        y.faces.push_back(std::move(w));
    }
    y.validate();
    return y;
}

}  // namespace matwork
