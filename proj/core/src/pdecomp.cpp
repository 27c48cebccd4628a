#include "pclosed/pdecomp.hpp"

#include <algorithm>

namespace pclosed {

MultiIndex::MultiIndex(PrimeChar ch, ExponentVector exps) : exps_(std::move(exps)) {
    const auto p = static_cast<Exponent>(ch.value());
    for (const Exponent e : exps_)
        if (e < 0 || e >= p) fail(ErrorCode::IndexOutOfRange, "multi-index entry outside [0, p-1]");
}

bool MultiIndex::is_zero() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

RatFn PDecomp::root(const MultiIndex& index) const {
    const auto it = roots_.find(index);
    return it == roots_.end() ? RatFn(ch_, arity_) : it->second;
}

void PDecomp::set(const MultiIndex& index, RatFn root) {
    if (index.size() != arity_) fail(ErrorCode::Mismatch, "multi-index length differs from arity");
    if (root.is_zero())
        roots_.erase(index);
    else
        roots_.insert_or_assign(index, std::move(root));
}

bool PDecomp::concentrated_at_zero() const {
    return std::all_of(roots_.begin(), roots_.end(),
                       [](const auto& kv) { return kv.first.is_zero(); });
}

RatFn PDecomp::recompose() const {
    RatFn out(ch_, arity_);
    for (const auto& [index, root] : roots_) {
        const ExponentVector e(index.exps().begin(), index.exps().end());
        out += root.frobenius() * RatFn(Poly::monomial(ch_, arity_, e));
    }
    return out;
}

PDecomp p_decompose(const RatFn& b) {
    const PrimeChar ch = b.characteristic();
    const std::size_t n = b.arity();
    const auto p = static_cast<Exponent>(ch.value());
    PDecomp out(ch, n);
    // num/den = (num * den^(p-1)) / den^p, so the roots share the
    // denominator den.
    const Poly numerator = b.is_polynomial() ? b.num() : b.num() * b.den().pow(ch.value() - 1);
    std::map<MultiIndex, std::vector<std::pair<ExponentVector, std::int64_t>>> groups;
    ExponentVector index(n), quotient(n);
    for (std::size_t t = 0; t < numerator.size(); ++t) {
        const auto e = numerator.exponents(t);
        for (std::size_t v = 0; v < n; ++v) {
            index[v] = e[v] % p;
            quotient[v] = e[v] / p;
        }
        groups[MultiIndex(ch, index)].emplace_back(quotient, numerator.coefficient(t));
    }
    for (const auto& [key, terms] : groups)
        out.set(key, RatFn(Poly::from_terms(ch, n, terms), b.den()));
    return out;
}

RatFn pth_root(const RatFn& b) {
    const PDecomp d = p_decompose(b);
    if (!d.concentrated_at_zero()) fail(ErrorCode::NotAPthPower, "element is not a p-th power");
    return d.root(MultiIndex(b.characteristic(), ExponentVector(b.arity(), 0)));
}

bool is_pth_power(const RatFn& b) { return p_decompose(b).concentrated_at_zero(); }

}  // namespace pclosed
