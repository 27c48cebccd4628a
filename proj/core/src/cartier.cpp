#include "pclosed/cartier.hpp"

#include "pclosed/pdecomp.hpp"

namespace pclosed {

OneForm::OneForm(RatFn u_, RatFn v_) : u(std::move(u_)), v(std::move(v_)) {
    if (u.arity() != 2 || v.arity() != 2) fail(ErrorCode::Mismatch, "one-forms live in F_p(x, y)");
    if (u.characteristic() != v.characteristic()) fail(ErrorCode::Mismatch, "characteristic mismatch");
}

OneForm exterior_derivative(const RatFn& h) { return OneForm(partial(h, 0), partial(h, 1)); }

bool is_closed(const OneForm& w) { return partial(w.v, 0) == partial(w.u, 1); }

OneForm cartier(const OneForm& w) {
    if (!is_closed(w)) fail(ErrorCode::NotClosed, "the Cartier operator needs a closed form");
    const std::size_t k = w.u.characteristic().value() - 1;
    // On a closed form both (p-1)-fold derivatives are killed by d/dx and
    // d/dy, so they are p-th powers.
    try {
        return OneForm(-pth_root(iterated_partial(w.u, 0, k)), -pth_root(iterated_partial(w.v, 1, k)));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAPthPower) throw;
        fail(ErrorCode::InvariantViolation, "Cartier component of a closed form is not a p-th power");
    }
}

RatFn pair(const OneForm& w, const Derivation& d) {
    if (d.arity() != 2 || d.characteristic() != w.u.characteristic())
        fail(ErrorCode::Mismatch, "form and derivation disagree in arity or characteristic");
    return w.u * d.coeff(0) + w.v * d.coeff(1);
}

}  // namespace pclosed
