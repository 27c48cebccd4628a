#include "pclosed/poly.hpp"

#include "dense.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pclosed {

int compare_grlex(std::span<const Exponent> a, std::span<const Exponent> b) noexcept {
    std::int64_t da = 0, db = 0;
    for (const Exponent e : a) da += e;
    for (const Exponent e : b) db += e;
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

// Accumulates terms in arbitrary order and produces a canonical Poly.
class PolyBuilder {
public:
    PolyBuilder(PrimeChar ch, std::size_t arity) : ch_(ch), arity_(arity) {}

    void reserve(std::size_t n) {
        exps_.reserve(n * arity_);
        coeffs_.reserve(n);
    }

    void add(std::span<const Exponent> exps, std::uint32_t c) {
        if (c == 0) return;
        exps_.insert(exps_.end(), exps.begin(), exps.end());
        coeffs_.push_back(c);
    }

    Poly build() && {
        const std::size_t n = coeffs_.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto term = [&](std::size_t i) {
            return std::span<const Exponent>(exps_.data() + i * arity_, arity_);
        };
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
            return compare_grlex(term(i), term(j)) > 0;
        });
        Poly out(ch_, arity_);
        out.exps_.reserve(exps_.size());
        out.coeffs_.reserve(n);
        for (std::size_t k = 0; k < n;) {
            std::uint32_t c = coeffs_[order[k]];
            std::size_t m = k + 1;
            while (m < n && compare_grlex(term(order[k]), term(order[m])) == 0)
                c = ch_.add(c, coeffs_[order[m++]]);
            if (c != 0) {
                const auto t = term(order[k]);
                out.exps_.insert(out.exps_.end(), t.begin(), t.end());
                out.coeffs_.push_back(c);
            }
            k = m;
        }
        return out;
    }

private:
    PrimeChar ch_;
    std::size_t arity_;
    std::vector<Exponent> exps_;
    std::vector<std::uint32_t> coeffs_;
};

Poly::Poly(PrimeChar ch, std::size_t arity) : ch_(ch), arity_(arity) {
    if (arity == 0) fail(ErrorCode::Mismatch, "polynomial arity must be at least 1");
}

Poly Poly::constant(PrimeChar ch, std::size_t arity, std::int64_t c) {
    const ExponentVector zero(arity, 0);
    return monomial(ch, arity, zero, c);
}

Poly Poly::variable(PrimeChar ch, std::size_t arity, std::size_t index) {
    if (index >= arity) fail(ErrorCode::IndexOutOfRange, "variable index out of range");
    ExponentVector e(arity, 0);
    e[index] = 1;
    return monomial(ch, arity, e, 1);
}

Poly Poly::monomial(PrimeChar ch, std::size_t arity, std::span<const Exponent> exps,
                    std::int64_t c) {
    if (exps.size() != arity) fail(ErrorCode::Mismatch, "exponent vector length differs from arity");
    Poly out(ch, arity);
    const std::uint32_t r = ch.reduce(c);
    if (r == 0) return out;
    for (const Exponent e : exps)
        if (e < 0) fail(ErrorCode::InvariantViolation, "negative exponent in polynomial");
    out.exps_.assign(exps.begin(), exps.end());
    out.coeffs_.push_back(r);
    return out;
}

Poly Poly::from_terms(PrimeChar ch, std::size_t arity,
                      const std::vector<std::pair<ExponentVector, std::int64_t>>& terms) {
    PolyBuilder b(ch, arity);
    b.reserve(terms.size());
    for (const auto& [e, c] : terms) {
        if (e.size() != arity) fail(ErrorCode::Mismatch, "exponent vector length differs from arity");
        for (const Exponent x : e)
            if (x < 0) fail(ErrorCode::InvariantViolation, "negative exponent in polynomial");
        b.add(e, ch.reduce(c));
    }
    return std::move(b).build();
}

bool Poly::is_constant() const noexcept {
    if (is_zero()) return true;
    if (size() > 1) return false;
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint32_t Poly::coefficient_of(std::span<const Exponent> exps) const {
    if (exps.size() != arity_) fail(ErrorCode::Mismatch, "exponent vector length differs from arity");
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const int c = compare_grlex(exponents(mid), exps);
        if (c == 0) return coeffs_[mid];
        if (c > 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return 0;
}

int Poly::total_degree() const noexcept {
    if (is_zero()) return -1;
    const auto lead = exponents(0);
    return std::accumulate(lead.begin(), lead.end(), 0);
}

Exponent Poly::degree_in(std::size_t var) const {
    if (var >= arity_) fail(ErrorCode::IndexOutOfRange, "variable index out of range");
    Exponent d = -1;
    for (std::size_t t = 0; t < size(); ++t) d = std::max(d, exps_[t * arity_ + var]);
    return d;
}

void Poly::check_compatible(const Poly& o) const {
    if (o.arity_ != arity_) fail(ErrorCode::Mismatch, "arity mismatch");
    if (o.ch_ != ch_) fail(ErrorCode::Mismatch, "characteristic mismatch");
}

// this + factor * o, by merging the two sorted term lists.
Poly Poly::add_scaled(const Poly& o, std::uint32_t factor) const {
    check_compatible(o);
    Poly out(ch_, arity_);
    if (factor == 0 || o.is_zero()) {
        out = *this;
        return out;
    }
    out.exps_.reserve(exps_.size() + o.exps_.size());
    out.coeffs_.reserve(size() + o.size());
    auto push = [&](std::span<const Exponent> e, std::uint32_t c) {
        if (c == 0) return;
        out.exps_.insert(out.exps_.end(), e.begin(), e.end());
        out.coeffs_.push_back(c);
    };
    std::size_t i = 0, j = 0;
    while (i < size() && j < o.size()) {
        const int c = compare_grlex(exponents(i), o.exponents(j));
        if (c > 0) {
            push(exponents(i), coeffs_[i]);
            ++i;
        } else if (c < 0) {
            push(o.exponents(j), ch_.mul(factor, o.coeffs_[j]));
            ++j;
        } else {
            push(exponents(i), ch_.add(coeffs_[i], ch_.mul(factor, o.coeffs_[j])));
            ++i;
            ++j;
        }
    }
    for (; i < size(); ++i) push(exponents(i), coeffs_[i]);
    for (; j < o.size(); ++j) push(o.exponents(j), ch_.mul(factor, o.coeffs_[j]));
    return out;
}

Poly Poly::operator+(const Poly& o) const { return add_scaled(o, 1); }

Poly Poly::operator-(const Poly& o) const { return add_scaled(o, ch_.neg(1)); }

Poly Poly::operator-() const { return scaled(ch_.neg(1)); }

Poly Poly::scaled(std::uint32_t c) const {
    c %= ch_.value();
    if (c == 0) return Poly(ch_, arity_);
    Poly out = *this;
    for (auto& x : out.coeffs_) x = ch_.mul(x, c);
    return out;
}

Poly Poly::shifted(std::span<const Exponent> exps) const {
    if (exps.size() != arity_) fail(ErrorCode::Mismatch, "exponent vector length differs from arity");
    Poly out = *this;
    for (std::size_t t = 0; t < size(); ++t)
        for (std::size_t v = 0; v < arity_; ++v) {
            Exponent& e = out.exps_[t * arity_ + v];
            e += exps[v];
            if (e < 0) fail(ErrorCode::InvariantViolation, "monomial shift produced a negative exponent");
        }
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Poly(ch_, arity_);
    const Poly& small = size() <= o.size() ? *this : o;
    const Poly& large = size() <= o.size() ? o : *this;
    // Each term of `small` times `large` is already sorted; merge the pieces
    // pairwise so the total work is N log(size(small)).
    std::vector<Poly> parts;
    parts.reserve(small.size());
    for (std::size_t t = 0; t < small.size(); ++t)
        parts.push_back(large.shifted(small.exponents(t)).scaled(small.coeffs_[t]));
    while (parts.size() > 1) {
        std::vector<Poly> next;
        next.reserve((parts.size() + 1) / 2);
        for (std::size_t k = 0; k + 1 < parts.size(); k += 2) next.push_back(parts[k] + parts[k + 1]);
        if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return std::move(parts.front());
}

Poly Poly::frobenius() const {
    Poly out = *this;
    const Exponent p = static_cast<Exponent>(ch_.value());
    for (auto& e : out.exps_) e *= p;
    return out;
}

Poly Poly::pow(std::uint64_t e) const {
    const std::uint64_t p = ch_.value();
    if (e == 0) return constant(ch_, arity_, 1);
    if (e == 1) return *this;
    if (e >= p) {
        Poly out = pow(e / p).frobenius();
        if (e % p != 0) out *= pow(e % p);
        return out;
    }
    Poly half = pow(e / 2);
    Poly out = half * half;
    if (e % 2 == 1) out *= *this;
    return out;
}

Poly Poly::monic() const {
    if (is_zero() || coeffs_[0] == 1) return *this;
    return scaled(ch_.inv(coeffs_[0]));
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
    const Exponent d = degree_in(var);
    std::vector<PolyBuilder> builders(d < 0 ? 0 : static_cast<std::size_t>(d) + 1,
                                      PolyBuilder(ch_, arity_));
    ExponentVector e(arity_);
    for (std::size_t t = 0; t < size(); ++t) {
        const auto src = exponents(t);
        std::copy(src.begin(), src.end(), e.begin());
        const Exponent k = e[var];
        e[var] = 0;
        builders[static_cast<std::size_t>(k)].add(e, coeffs_[t]);
    }
    std::vector<Poly> out;
    out.reserve(builders.size());
    for (auto& b : builders) out.push_back(std::move(b).build());
    return out;
}

Poly Poly::from_coefficients(PrimeChar ch, std::size_t arity, std::size_t var,
                             const std::vector<Poly>& coeffs) {
    PolyBuilder b(ch, arity);
    ExponentVector e(arity);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Poly& c = coeffs[k];
        for (std::size_t t = 0; t < c.size(); ++t) {
            const auto src = c.exponents(t);
            std::copy(src.begin(), src.end(), e.begin());
            e[var] += static_cast<Exponent>(k);
            b.add(e, c.coefficient(t));
        }
    }
    return std::move(b).build();
}

ExponentVector Poly::monomial_content() const {
    if (is_zero()) fail(ErrorCode::InvariantViolation, "monomial content of zero");
    ExponentVector m(exponents(0).begin(), exponents(0).end());
    for (std::size_t t = 1; t < size(); ++t)
        for (std::size_t v = 0; v < arity_; ++v) m[v] = std::min(m[v], exps_[t * arity_ + v]);
    return m;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.ch_ == b.ch_ && a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_ && a.exps_ == b.exps_;
}

Poly partial(const Poly& b, std::size_t var) {
    if (var >= b.arity()) fail(ErrorCode::IndexOutOfRange, "variable index out of range");
    // Lowering one exponent by 1 preserves graded-lex order among the
    // surviving terms, so no re-sort is needed.
    const PrimeChar ch = b.characteristic();
    const std::size_t n = b.arity();
    Poly out(ch, n);
    for (std::size_t t = 0; t < b.size(); ++t) {
        const auto e = b.exponents(t);
        if (e[var] == 0) continue;
        const std::uint32_t c = ch.mul(b.coefficient(t), ch.reduce(e[var]));
        if (c == 0) continue;
        out.exps_.insert(out.exps_.end(), e.begin(), e.end());
        out.exps_[out.exps_.size() - n + var] -= 1;
        out.coeffs_.push_back(c);
    }
    return out;
}

Poly iterated_partial(const Poly& b, std::size_t var, std::size_t count) {
    if (var >= b.arity()) fail(ErrorCode::IndexOutOfRange, "variable index out of range");
    Poly out = b;
    for (std::size_t k = 0; k < count && !out.is_zero(); ++k) out = partial(out, var);
    return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorCode::ZeroDenominator, "division by the zero polynomial");
    if (a.arity() != b.arity() || a.characteristic() != b.characteristic())
        fail(ErrorCode::Mismatch, "arity or characteristic mismatch");
    const PrimeChar ch = a.characteristic();
    const std::size_t n = a.arity();
    if (a.is_zero()) return Poly(ch, n);
    const std::uint32_t inv_lc = ch.inv(b.leading_coefficient());
    const auto lead_b = b.exponents(0);
    for (std::size_t v = 0; v < n; ++v)
        if (a.degree_in(v) < b.degree_in(v)) return std::nullopt;

    ExponentVector t(n);
    auto quotient_exponent = [&](std::span<const Exponent> e) {
        for (std::size_t v = 0; v < n; ++v) {
            t[v] = e[v] - lead_b[v];
            if (t[v] < 0) return false;
        }
        return true;
    };

    if (b.size() > 1)
        if (auto q = dense::divide_exact(a, b)) return std::move(*q);

    if (b.size() == 1) {
        std::vector<std::pair<ExponentVector, std::int64_t>> q;
        q.reserve(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (!quotient_exponent(a.exponents(k))) return std::nullopt;
            q.emplace_back(t, ch.mul(a.coefficient(k), inv_lc));
        }
        return Poly::from_terms(ch, n, q);
    }

    Poly r = a;
    std::vector<std::pair<ExponentVector, std::int64_t>> q;
    while (!r.is_zero()) {
        if (!quotient_exponent(r.exponents(0))) return std::nullopt;
        const std::uint32_t c = ch.mul(r.leading_coefficient(), inv_lc);
        q.emplace_back(t, c);
        r -= b.shifted(t).scaled(c);
    }
    return Poly::from_terms(ch, n, q);
}

namespace {

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto q = divide_exact(a, b);
    if (!q) fail(ErrorCode::InvariantViolation, "expected exact polynomial division");
    return std::move(*q);
}

Poly gcd_nonzero(const Poly& a, const Poly& b);

// gcd of the nonzero entries of a coefficient list.
Poly content(const std::vector<Poly>& coeffs) {
    std::optional<Poly> g;
    for (const Poly& c : coeffs) {
        if (c.is_zero()) continue;
        g = g ? gcd_nonzero(*g, c) : c.monic();
        if (g->is_constant()) break;
    }
    return *g;
}

void trim(std::vector<Poly>& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// Pseudo-remainder of a by b as polynomials in one variable.
std::vector<Poly> pseudo_remainder(std::vector<Poly> r, const std::vector<Poly>& b) {
    const std::size_t db = b.size() - 1;
    const Poly& lcb = b.back();
    trim(r);
    while (!r.empty() && r.size() - 1 >= db) {
        const std::size_t dr = r.size() - 1;
        const Poly lcr = r.back();
        for (auto& c : r) c = c * lcb;
        for (std::size_t k = 0; k <= db; ++k) r[k + dr - db] -= lcr * b[k];
        trim(r);
    }
    return r;
}

std::vector<Poly> primitive_part(std::vector<Poly> u) {
    const Poly c = content(u);
    if (!c.is_constant())
        for (auto& x : u) x = exact_quotient(x, c);
    return u;
}

// Both arguments nonzero and free of monomial factors.
Poly gcd_primitive(const Poly& a, const Poly& b) {
    const PrimeChar ch = a.characteristic();
    const std::size_t n = a.arity();
    if (a.is_constant() || b.is_constant()) return Poly::constant(ch, n, 1);
    std::size_t var = n;
    for (std::size_t v = n; v-- > 0;)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
            var = v;
            break;
        }
    if (a.degree_in(var) == 0) return gcd_nonzero(a, content(b.coefficients_in(var)));
    if (b.degree_in(var) == 0) return gcd_nonzero(content(a.coefficients_in(var)), b);

    std::vector<Poly> ua = a.coefficients_in(var);
    std::vector<Poly> ub = b.coefficients_in(var);
    const Poly ca = content(ua);
    const Poly cb = content(ub);
    const Poly c = gcd_nonzero(ca, cb);
    ua = primitive_part(std::move(ua));
    ub = primitive_part(std::move(ub));
    if (ua.size() < ub.size()) std::swap(ua, ub);
    while (true) {
        std::vector<Poly> r = pseudo_remainder(ua, ub);
        if (r.empty()) break;
        if (r.size() == 1) {
            ub = {Poly::constant(ch, n, 1)};
            break;
        }
        ua = std::move(ub);
        ub = primitive_part(std::move(r));
    }
    return c * Poly::from_coefficients(ch, n, var, ub);
}

Poly gcd_nonzero(const Poly& a, const Poly& b) {
    const PrimeChar ch = a.characteristic();
    const std::size_t n = a.arity();
    if (a.is_constant() || b.is_constant()) return Poly::constant(ch, n, 1);
    ExponentVector ma = a.monomial_content();
    const ExponentVector mb = b.monomial_content();
    ExponentVector m(n), neg_a(n), neg_b(n);
    for (std::size_t v = 0; v < n; ++v) {
        m[v] = std::min(ma[v], mb[v]);
        neg_a[v] = -ma[v];
        neg_b[v] = -mb[v];
    }
    const Poly mono = Poly::monomial(ch, n, m);
    if (a.size() == 1 || b.size() == 1) return mono;
    return gcd_primitive(a.shifted(neg_a), b.shifted(neg_b)).shifted(m);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.arity() != b.arity() || a.characteristic() != b.characteristic())
        fail(ErrorCode::Mismatch, "arity or characteristic mismatch");
    if (a.is_zero() && b.is_zero()) fail(ErrorCode::ZeroGcdInput, "gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.characteristic(), a.arity(), 1);
    if (a.size() > 1 && b.size() > 1)
        if (auto g = dense::gcd(a, b)) return std::move(*g);
    return gcd_nonzero(a, b).monic();
}

std::string variable_name(std::size_t arity, std::size_t index) {
    if (arity <= 2) return index == 0 ? "x" : "y";
    return "x" + std::to_string(index + 1);
}

std::string to_string(const Poly& b) {
    if (b.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t t = 0; t < b.size(); ++t) {
        if (t > 0) os << " + ";
        const auto e = b.exponents(t);
        std::string mono;
        for (std::size_t v = 0; v < b.arity(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += variable_name(b.arity(), v);
            if (e[v] != 1) mono += '^' + std::to_string(e[v]);
        }
        const std::uint32_t c = b.coefficient(t);
        if (mono.empty())
            os << c;
        else if (c == 1)
            os << mono;
        else
            os << c << '*' << mono;
    }
    return os.str();
}

}  // namespace pclosed
