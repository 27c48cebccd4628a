#include "pclosed/linalg.hpp"

#include <algorithm>
#include <limits>

namespace pclosed {

namespace {

// Fraction-free Gauss-Jordan over F_p[x]: rows are kept primitive, so no
// fractions are normalized on the way. The reduced row echelon form is
// unique, hence the result matches the rational path exactly.
std::optional<std::vector<RatFn>> kernel_solve_polynomial(const RatFnMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    const PrimeChar ch = m.front().front().characteristic();
    const std::size_t arity = m.front().front().arity();
    std::vector<std::vector<Poly>> a(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        a[i].reserve(cols);
        for (const RatFn& e : m[i]) a[i].push_back(e.num());
    }
    auto make_primitive = [&](std::vector<Poly>& row) {
        // Smallest entries first: the gcd usually collapses to 1 early.
        std::vector<const Poly*> order;
        for (const Poly& e : row)
            if (!e.is_zero()) order.push_back(&e);
        std::sort(order.begin(), order.end(),
                  [](const Poly* x, const Poly* y) { return x->size() < y->size(); });
        Poly g(ch, arity);
        for (const Poly* e : order) {
            g = gcd(g, *e);
            if (g.is_one()) return;
        }
        if (g.is_zero()) return;
        for (Poly& e : row)
            if (!e.is_zero()) e = *divide_exact(e, g);
    };

    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero() && a[i][c].size() < best_size) {
                best = i;
                best_size = a[i][c].size();
            }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        const Poly pivot = a[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Poly factor = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                if (a[r][j].is_zero()) {
                    if (!a[i][j].is_zero()) a[i][j] = a[i][j] * pivot;
                } else {
                    a[i][j] = a[i][j] * pivot - factor * a[r][j];
                }
            }
            a[i][c] = Poly(ch, arity);
            make_primitive(a[i]);
        }
        pivot_cols.push_back(c);
        is_pivot[c] = true;
        ++r;
    }

    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == cols) return std::nullopt;

    std::vector<RatFn> v(cols, RatFn(ch, arity));
    v[free_col] = RatFn::constant(ch, arity, 1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
        if (!a[k][free_col].is_zero()) v[pivot_cols[k]] = RatFn(-a[k][free_col], a[k][pivot_cols[k]]);
    return v;
}

}  // namespace

std::optional<std::vector<RatFn>> kernel_solve(const RatFnMatrix& m) {
    if (m.empty() || m.front().empty()) fail(ErrorCode::EmptyInput, "empty matrix");
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    const PrimeChar ch = m.front().front().characteristic();
    const std::size_t arity = m.front().front().arity();
    for (const auto& row : m) {
        if (row.size() != cols) fail(ErrorCode::RaggedMatrix, "rows of unequal length");
        for (const RatFn& e : row)
            if (e.characteristic() != ch || e.arity() != arity)
                fail(ErrorCode::Mismatch, "matrix entries disagree in arity or characteristic");
    }

    bool polynomial = true;
    for (const auto& row : m)
        for (const RatFn& e : row) polynomial = polynomial && e.is_polynomial();
    if (polynomial) return kernel_solve_polynomial(m);

    RatFnMatrix a = m;
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            if (a[i][c].term_count() < best_size) {
                best = i;
                best_size = a[i][c].term_count();
            }
        }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        const RatFn inv = a[r][c].inverse();
        for (std::size_t j = c + 1; j < cols; ++j)
            if (!a[r][j].is_zero()) a[r][j] = a[r][j] * inv;
        a[r][c] = RatFn::constant(ch, arity, 1);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const RatFn factor = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= factor * a[r][j];
            a[i][c] = RatFn(ch, arity);
        }
        pivot_cols.push_back(c);
        is_pivot[c] = true;
        ++r;
    }

    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == cols) return std::nullopt;

    std::vector<RatFn> v(cols, RatFn(ch, arity));
    v[free_col] = RatFn::constant(ch, arity, 1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][free_col];
    return v;
}

}  // namespace pclosed
