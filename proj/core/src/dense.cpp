#include "dense.hpp"

#include <algorithm>
#include <numeric>

namespace pclosed::dense {

namespace {

using U = std::vector<std::uint32_t>;

// Level 1 is univariate in the innermost variable and lives in `u`; a
// level L > 1 value is a polynomial in its main variable with level L-1
// coefficients in `cs`. Neither vector carries trailing zeros.
struct D {
    std::vector<D> cs;
    U u;
};

class Ring {
public:
    explicit Ring(PrimeChar ch) : ch_(ch) {}

    static void trim(U& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    static void trim(D& a, int lvl) {
        if (lvl == 1) {
            trim(a.u);
            return;
        }
        while (!a.cs.empty() && zero(a.cs.back(), lvl - 1)) a.cs.pop_back();
    }
    static bool zero(const D& a, int lvl) { return lvl == 1 ? a.u.empty() : a.cs.empty(); }
    static std::size_t len(const D& a, int lvl) { return lvl == 1 ? a.u.size() : a.cs.size(); }

    static bool constant(const D& a, int lvl) {
        if (lvl == 1) return a.u.size() <= 1;
        if (a.cs.size() > 1) return false;
        return a.cs.empty() || constant(a.cs[0], lvl - 1);
    }

    D one(int lvl) const {
        D d;
        if (lvl == 1)
            d.u = {1};
        else
            d.cs.push_back(one(lvl - 1));
        return d;
    }

    // ---- univariate ----

    U mul(const U& a, const U& b) const {
        if (a.empty() || b.empty()) return {};
        const std::uint64_t p = ch_.value();
        std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
        // Partial sums stay below 2^63 for a bounded number of additions.
        const std::uint64_t sq = (p - 1) * (p - 1);
        const std::uint64_t budget = sq == 0 ? a.size() : std::max<std::uint64_t>(1, (std::uint64_t{1} << 63) / sq);
        std::uint64_t pending = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            const std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
            if (++pending >= budget) {
                for (auto& x : acc) x %= p;
                pending = 0;
            }
        }
        U out(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<std::uint32_t>(acc[k] % p);
        trim(out);
        return out;
    }

    void sub_into(U& a, const U& b) const {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t k = 0; k < b.size(); ++k) a[k] = ch_.sub(a[k], b[k]);
        trim(a);
    }

    // a <- a - c * x^shift * b
    void submul_into(U& a, std::uint32_t c, const U& b, std::size_t shift) const {
        if (c == 0 || b.empty()) return;
        if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = ch_.sub(a[k + shift], ch_.mul(c, b[k]));
        trim(a);
    }

    // Quotient into q (when non-null); remainder left in a.
    void divmod(U& a, const U& b, U* q) const {
        const std::uint32_t inv = ch_.inv(b.back());
        if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
        while (!a.empty() && a.size() >= b.size()) {
            const std::size_t shift = a.size() - b.size();
            const std::uint32_t c = ch_.mul(a.back(), inv);
            if (q) (*q)[shift] = c;
            submul_into(a, c, b, shift);
        }
    }

    U gcd(U a, U b) const {
        while (!b.empty()) {
            divmod(a, b, nullptr);
            std::swap(a, b);
        }
        if (!a.empty() && a.back() != 1) {
            const std::uint32_t inv = ch_.inv(a.back());
            for (auto& x : a) x = ch_.mul(x, inv);
        }
        return a;
    }

    // ---- recursive ----

    D mul(const D& a, const D& b, int lvl) const {
        D out;
        if (lvl == 1) {
            out.u = mul(a.u, b.u);
            return out;
        }
        if (a.cs.empty() || b.cs.empty()) return out;
        out.cs.resize(a.cs.size() + b.cs.size() - 1);
        for (std::size_t i = 0; i < a.cs.size(); ++i) {
            if (zero(a.cs[i], lvl - 1)) continue;
            for (std::size_t j = 0; j < b.cs.size(); ++j) {
                if (zero(b.cs[j], lvl - 1)) continue;
                add_into(out.cs[i + j], mul(a.cs[i], b.cs[j], lvl - 1), lvl - 1);
            }
        }
        trim(out, lvl);
        return out;
    }

    void add_into(D& a, const D& b, int lvl) const { combine_into(a, b, lvl, false); }
    void sub_into(D& a, const D& b, int lvl) const { combine_into(a, b, lvl, true); }

    void combine_into(D& a, const D& b, int lvl, bool subtract) const {
        if (lvl == 1) {
            if (a.u.size() < b.u.size()) a.u.resize(b.u.size(), 0);
            for (std::size_t k = 0; k < b.u.size(); ++k)
                a.u[k] = subtract ? ch_.sub(a.u[k], b.u[k]) : ch_.add(a.u[k], b.u[k]);
            trim(a.u);
            return;
        }
        if (a.cs.size() < b.cs.size()) a.cs.resize(b.cs.size());
        for (std::size_t k = 0; k < b.cs.size(); ++k) combine_into(a.cs[k], b.cs[k], lvl - 1, subtract);
        trim(a, lvl);
    }

    std::optional<D> exdiv(const D& a, const D& b, int lvl) const {
        if (zero(a, lvl)) return D{};
        if (len(a, lvl) < len(b, lvl)) return std::nullopt;
        if (lvl == 1) {
            U r = a.u;
            D q;
            divmod(r, b.u, &q.u);
            if (!r.empty()) return std::nullopt;
            return q;
        }
        D r = a;
        D q;
        const std::size_t db = b.cs.size() - 1;
        q.cs.resize(a.cs.size() - db);
        while (!r.cs.empty() && r.cs.size() - 1 >= db) {
            const std::size_t shift = r.cs.size() - 1 - db;
            auto t = exdiv(r.cs.back(), b.cs.back(), lvl - 1);
            if (!t) return std::nullopt;
            for (std::size_t k = 0; k <= db; ++k)
                if (!zero(b.cs[k], lvl - 1)) sub_into(r.cs[k + shift], mul(*t, b.cs[k], lvl - 1), lvl - 1);
            q.cs[shift] = std::move(*t);
            // The leading coefficient cancels exactly.
            trim(r, lvl);
        }
        if (!r.cs.empty()) return std::nullopt;
        trim(q, lvl);
        return q;
    }

    D content(const D& a, int lvl) const {
        D g;
        bool have = false;
        for (const D& c : a.cs) {
            if (zero(c, lvl - 1)) continue;
            g = have ? gcd(g, c, lvl - 1) : c;
            have = true;
            if (constant(g, lvl - 1)) return one(lvl - 1);
        }
        return g;
    }

    D primitive(D a, const D& c, int lvl) const {
        if (constant(c, lvl - 1)) return a;
        for (D& x : a.cs) {
            if (zero(x, lvl - 1)) continue;
            auto q = exdiv(x, c, lvl - 1);
            if (!q) fail(ErrorCode::InvariantViolation, "content does not divide coefficient");
            x = std::move(*q);
        }
        return a;
    }

    D prem(D r, const D& b, int lvl) const {
        const std::size_t db = b.cs.size() - 1;
        const D& lcb = b.cs.back();
        while (!r.cs.empty() && r.cs.size() - 1 >= db) {
            const std::size_t shift = r.cs.size() - 1 - db;
            const D lcr = r.cs.back();
            for (D& c : r.cs)
                if (!zero(c, lvl - 1)) c = mul(c, lcb, lvl - 1);
            for (std::size_t k = 0; k <= db; ++k)
                if (!zero(b.cs[k], lvl - 1)) sub_into(r.cs[k + shift], mul(lcr, b.cs[k], lvl - 1), lvl - 1);
            trim(r, lvl);
        }
        return r;
    }

    D lift(D c) const {
        D out;
        out.cs.push_back(std::move(c));
        return out;
    }

    // Some associate of the gcd; callers normalize.
    D gcd(const D& a, const D& b, int lvl) const {
        if (zero(a, lvl)) return b;
        if (zero(b, lvl)) return a;
        if (lvl == 1) {
            D out;
            out.u = gcd(a.u, b.u);
            return out;
        }
        if (a.cs.size() == 1) return lift(gcd(a.cs[0], content(b, lvl), lvl - 1));
        if (b.cs.size() == 1) return lift(gcd(content(a, lvl), b.cs[0], lvl - 1));
        const D ca = content(a, lvl);
        const D cb = content(b, lvl);
        const D c = gcd(ca, cb, lvl - 1);
        D A = primitive(a, ca, lvl);
        D B = primitive(b, cb, lvl);
        if (A.cs.size() < B.cs.size()) std::swap(A, B);
        while (true) {
            D r = prem(std::move(A), B, lvl);
            if (r.cs.empty()) break;
            if (r.cs.size() == 1) {
                B = one(lvl);
                break;
            }
            A = std::move(B);
            const D cr = content(r, lvl);
            B = primitive(std::move(r), cr, lvl);
        }
        if (constant(c, lvl - 1)) return B;
        for (D& x : B.cs)
            if (!zero(x, lvl - 1)) x = mul(x, c, lvl - 1);
        return B;
    }

private:
    PrimeChar ch_;
};

// Variables occurring in any argument, innermost (largest degree) first.
struct Layout {
    std::vector<std::size_t> order;
    bool fits = true;
};

Layout layout_for(std::initializer_list<const Poly*> polys) {
    const std::size_t n = (*polys.begin())->arity();
    std::vector<Exponent> deg(n, 0);
    for (const Poly* p : polys)
        for (std::size_t v = 0; v < n; ++v) deg[v] = std::max(deg[v], p->degree_in(v));
    Layout out;
    std::uint64_t cells = 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (deg[v] == 0) continue;
        out.order.push_back(v);
        cells *= static_cast<std::uint64_t>(deg[v]) + 1;
        if (cells > kMaxCells) out.fits = false;
    }
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t i, std::size_t j) { return deg[i] > deg[j]; });
    return out;
}

D to_dense(const Poly& a, const std::vector<std::size_t>& order) {
    const int levels = static_cast<int>(order.size());
    D root;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const auto e = a.exponents(t);
        D* node = &root;
        for (int lvl = levels; lvl >= 2; --lvl) {
            const auto k = static_cast<std::size_t>(e[order[lvl - 1]]);
            if (node->cs.size() <= k) node->cs.resize(k + 1);
            node = &node->cs[k];
        }
        const auto k = static_cast<std::size_t>(e[order[0]]);
        if (node->u.size() <= k) node->u.resize(k + 1, 0);
        node->u[k] = a.coefficient(t);
    }
    return root;
}

void collect(const D& d, int lvl, const std::vector<std::size_t>& order, ExponentVector& e,
             std::vector<std::pair<ExponentVector, std::int64_t>>& terms) {
    const std::size_t var = order[lvl - 1];
    if (lvl == 1) {
        for (std::size_t k = 0; k < d.u.size(); ++k) {
            if (d.u[k] == 0) continue;
            e[var] = static_cast<Exponent>(k);
            terms.emplace_back(e, d.u[k]);
        }
    } else {
        for (std::size_t k = 0; k < d.cs.size(); ++k) {
            e[var] = static_cast<Exponent>(k);
            collect(d.cs[k], lvl - 1, order, e, terms);
        }
    }
    e[var] = 0;
}

Poly from_dense(const D& d, const std::vector<std::size_t>& order, PrimeChar ch, std::size_t arity) {
    std::vector<std::pair<ExponentVector, std::int64_t>> terms;
    ExponentVector e(arity, 0);
    collect(d, static_cast<int>(order.size()), order, e, terms);
    return Poly::from_terms(ch, arity, terms);
}

}  // namespace

std::optional<Poly> gcd(const Poly& a, const Poly& b) {
    const Layout lay = layout_for({&a, &b});
    if (!lay.fits || lay.order.empty()) return std::nullopt;
    const int levels = static_cast<int>(lay.order.size());
    const Ring ring(a.characteristic());
    const D g = ring.gcd(to_dense(a, lay.order), to_dense(b, lay.order), levels);
    return from_dense(g, lay.order, a.characteristic(), a.arity()).monic();
}

std::optional<std::optional<Poly>> divide_exact(const Poly& a, const Poly& b) {
    const Layout lay = layout_for({&a, &b});
    if (!lay.fits || lay.order.empty()) return std::nullopt;
    const int levels = static_cast<int>(lay.order.size());
    const Ring ring(a.characteristic());
    auto q = ring.exdiv(to_dense(a, lay.order), to_dense(b, lay.order), levels);
    if (!q) return std::optional<Poly>{};
    return std::optional<Poly>{from_dense(*q, lay.order, a.characteristic(), a.arity())};
}

}  // namespace pclosed::dense
