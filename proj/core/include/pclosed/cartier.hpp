#pragma once

#include "pclosed/derivation.hpp"

namespace pclosed {

/// u dx + v dy over F_p(x, y).
struct OneForm {
    RatFn u;
    RatFn v;

    /// Throws Mismatch unless both coefficients live in F_p(x, y) with one
    /// characteristic.
    OneForm(RatFn u, RatFn v);

    friend bool operator==(const OneForm&, const OneForm&) = default;
};

/// dh = (dh/dx) dx + (dh/dy) dy.
OneForm exterior_derivative(const RatFn& h);

/// d(u dx + v dy) = 0, i.e. dv/dx = du/dy.
bool is_closed(const OneForm& w);

/// The Cartier operator on a closed form:
///   C(u dx + v dy) = -(d^(p-1)u/dx^(p-1))^(1/p) dx - (d^(p-1)v/dy^(p-1))^(1/p) dy.
/// Throws NotClosed for a form that is not closed.
OneForm cartier(const OneForm& w);

/// w(D) = u D(x) + v D(y).
RatFn pair(const OneForm& w, const Derivation& d);

}  // namespace pclosed
