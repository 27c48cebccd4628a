// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "pclosed/pclosed.hpp"
#include "pclosed_cli/cli.hpp"
#include "pclosed_cli/expr.hpp"
#include "pclosed_cli/generators.hpp"

using namespace pclosed;
using gen::Rng;

namespace {

// Collects failures; the first few are kept for the report.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (notes_.size() < 3) notes_.push_back(what);
    }
    bool ok() const { return failures_ == 0 && checks_ > 0; }
    std::size_t checks() const { return checks_; }
    std::string summary() const {
        std::string s = std::to_string(checks_ - failures_) + "/" + std::to_string(checks_) + " checks";
        for (const auto& n : notes_) s += "; " + n;
        return s;
    }

private:
    std::size_t checks_ = 0, failures_ = 0;
    std::vector<std::string> notes_;
};

RatFn K(const std::string& s, std::uint32_t p) { return cli::parse_ratfn(s, PrimeChar(p), 2); }

RatFn xpow(PrimeChar ch, Exponent i, Exponent j) { return RatFn(Poly::monomial(ch, 2, ExponentVector{i, j})); }

std::string show(const RatFn& f, const RatFn& g) { return "(" + to_string(f) + ", " + to_string(g) + ")"; }

int run_cli(const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    out = o.str();
    return code;
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

// Polynomial divergence-free pair from h and constant c-coefficients.
gen::DivergenceFreePair poly_divergence_free(Rng& rng, PrimeChar ch, int deg, int terms, bool with_c) {
    const Poly h = gen::random_poly(rng, ch, 2, deg, terms);
    const auto top = static_cast<Exponent>(ch.value() - 1);
    const auto c = [&] { return with_c ? gen::uniform(rng, 0, ch.value() - 1) : 0; };
    const RatFn cf = RatFn::constant(ch, 2, c()), cg = RatFn::constant(ch, 2, c());
    const RatFn hr(h);
    return {partial(hr, 1) + cf * xpow(ch, 0, top), -partial(hr, 0) + cg * xpow(ch, top, 0)};
}

constexpr std::uint32_t kPrimes[] = {2, 3, 5};

// 1. y d/dx + x^2 d/dy at p = 5 through the CLI.
std::string criterion1(Tally& t) {
    std::string out;
    const int code = run_cli({"check", "--p", "5", "--f", "y", "--g", "x^2"}, out);
    t.expect(code == 0, "exit code " + std::to_string(code));
    t.expect(has_line(out, "p_closed: true"), "p_closed line");
    t.expect(has_line(out, "c_f: 0"), "c_f line");
    t.expect(has_line(out, "c_g: 0"), "c_g line");
    const auto w = closure_witness(Derivation::planar(K("y", 5), K("x^2", 5)));
    t.expect(w && w->verified, "closure witness");
    return "check --p 5 --f y --g x^2";
}

// 2. a(D(x)D^p(y) - D(y)D^p(x)) = f^p d_x^(p-1)(ag) - g^p d_y^(p-1)(af).
std::string criterion2(Tally& t) {
    Rng rng(2002);
    int multiplier_found = 0, scaled = 0;
    for (int i = 0; i < 210; ++i) {
        const PrimeChar ch(kPrimes[i % 3]);
        RatFn f(ch, 2), g(ch, 2), a(ch, 2);
        if (i % 2 == 0) {
            f = gen::random_ratfn(rng, ch, 2, 4, 2);
            g = gen::random_ratfn(rng, ch, 2, 4, 2);
            a = find_multiplier({f, g});
            ++multiplier_found;
        } else {
            // (F, G) divergence-free, b arbitrary: (f, g) = (F, G)/b has multiplier b.
            const auto [F, G] = poly_divergence_free(rng, ch, 4, 3, true);
            a = RatFn(gen::random_nonzero_poly(rng, ch, 2, 4, 3));
            f = F / a;
            g = G / a;
            ++scaled;
        }
        const RatFn lhs = a * brute_obstruction(Derivation::planar(f, g));
        t.expect(lhs == rhs_obstruction(f, g, a), "identity fails for " + show(f, g));
    }
    return std::to_string(multiplier_found) + " with computed multiplier, " + std::to_string(scaled) +
           " with scaled divergence-free pairs";
}

// 3. Fast verdict against brute force.
std::string criterion3(Tally& t) {
    Rng rng(3003);
    int closed = 0;
    for (int i = 0; i < 240; ++i) {
        const PrimeChar ch(kPrimes[i % 3]);
        RatFn f(ch, 2), g(ch, 2);
        switch (i / 3 % 4) {
            case 0:
            case 1:
                f = gen::random_ratfn(rng, ch, 2, 3, 2);
                g = gen::random_ratfn(rng, ch, 2, 3, 2);
                break;
            case 2: {  // Hamiltonian times u: always p-closed
                const auto [F, G] = poly_divergence_free(rng, ch, 4, 3, false);
                const RatFn u = gen::random_nonzero_ratfn(rng, ch, 2, 2, 2);
                f = u * F;
                g = u * G;
                break;
            }
            default: {
                const auto [F, G] = poly_divergence_free(rng, ch, 4, 3, true);
                f = F;
                g = G;
            }
        }
        const bool fast = is_p_closed(f, g).p_closed;
        closed += fast;
        t.expect(fast == brute_obstruction(Derivation::planar(f, g)).is_zero(), "disagree on " + show(f, g));
    }
    return std::to_string(closed) + " p-closed, " + std::to_string(240 - closed) + " not";
}

// 4. Monomial grid.
std::string criterion4(Tally& t) {
    int closed = 0, cells = 0;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const PrimeChar ch(p);
        for (std::int64_t mx = -3; mx <= 6; ++mx)
            for (std::int64_t my = -3; my <= 6; ++my) {
                ++cells;
                const std::string at = "(" + std::to_string(mx) + "," + std::to_string(my) + ") p=" + std::to_string(p);
                const bool verdict = classify_monomial(mx, my, ch).p_closed;
                closed += verdict;
                const Derivation d = monomial_derivation(mx, my, ch);
                t.expect(verdict == monomial_obstruction(mx, my, ch).is_zero(), "closed form at " + at);
                t.expect(verdict == rhs_obstruction(d.coeff(0), d.coeff(1), RatFn::constant(ch, 2, 1)).is_zero(),
                         "criterion at " + at);
                if (p <= 5) t.expect(verdict == brute_obstruction(d).is_zero(), "brute force at " + at);
            }
    }
    return std::to_string(cells) + " cells, " + std::to_string(closed) + " p-closed";
}

// 5. (x-y)^(p-1) fixtures and coprime polynomial pairs.
std::string criterion5(Tally& t) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const PrimeChar ch(p);
        const RatFn f = K("x-y", p).pow(p - 1);
        const CriterionReport r = is_p_closed(f, f);
        t.expect(r.c_f == RatFn::constant(ch, 2, 1) && r.c_g == RatFn::constant(ch, 2, 1), "c-values at p=" + std::to_string(p));
        t.expect(r.p_closed, "verdict at p=" + std::to_string(p));
        bool rejected = false;
        try {
            coprime_case_check(f.num(), f.num());
        } catch (const Error& e) {
            rejected = e.code() == ErrorCode::NotCoprime;
        }
        t.expect(rejected, "NotCoprime at p=" + std::to_string(p));
    }
    Rng rng(5005);
    int pairs = 0, closed = 0;
    for (int i = 0; pairs < 50; ++i) {
        const PrimeChar ch(kPrimes[i % 3]);
        const auto [f, g] = poly_divergence_free(rng, ch, 4, 3, i % 2 == 0);
        if (f.is_zero() || g.is_zero() || !gcd(f.num(), g.num()).is_one()) continue;
        ++pairs;
        const CriterionReport r = is_p_closed(f, g);
        closed += r.p_closed;
        const bool c_zero = r.c_f.is_zero() && r.c_g.is_zero();
        t.expect(r.p_closed == c_zero, "verdict vs c at " + show(f, g));
        t.expect(coprime_case_check(f.num(), g.num()) == r.p_closed, "coprime check at " + show(f, g));
    }
    return "4 fixtures, 50 coprime pairs (" + std::to_string(closed) + " p-closed)";
}

// 6. Multipliers.
std::string criterion6(Tally& t) {
    Rng rng(6006);
    for (int i = 0; i < 100; ++i) {
        const PrimeChar ch(kPrimes[i % 3]);
        const std::size_t n = 1 + (i / 3) % 2;
        std::vector<RatFn> f;
        for (std::size_t k = 0; k < n; ++k) f.push_back(gen::random_ratfn(rng, ch, n, 3, 2));
        const RatFn a = find_multiplier(f);
        std::vector<RatFn> af;
        for (const RatFn& fi : f) af.push_back(a * fi);
        t.expect(!a.is_zero() && divergence(af).is_zero(), "multiplier invalid");
        const MultiplierSystem s = build_system(f);
        const auto top = s.row_of(MultiIndex(ch, ExponentVector(n, static_cast<Exponent>(ch.value() - 1))));
        bool zero_row = true;
        for (const RatFn& e : s.matrix[top]) zero_row = zero_row && e.is_zero();
        t.expect(zero_row, "top row nonzero");
    }
    return "100 tuples";
}

// 7. Cartier operator.
std::string criterion7(Tally& t) {
    Rng rng(7007);
    for (std::uint32_t p : kPrimes) {
        const PrimeChar ch(p);
        for (int i = 0; i < 50; ++i) {
            RatFn h = gen::random_ratfn(rng, ch, 2, 3, 3);
            OneForm dh = exterior_derivative(h);
            while (dh.u.is_zero() && dh.v.is_zero()) {
                h = gen::random_ratfn(rng, ch, 2, 3, 3);
                dh = exterior_derivative(h);
            }
            const OneForm c = cartier(dh);
            t.expect(c.u.is_zero() && c.v.is_zero(), "C(dh) != 0");
            const RatFn hp = h.pow(p - 1);
            t.expect(cartier(OneForm(hp * dh.u, hp * dh.v)) == dh, "C(h^(p-1) dh) != dh");

            const auto [F, G] = gen::random_divergence_free(rng, ch, 3, 3);
            const OneForm w(G, -F);
            const RatFn u = gen::random_ratfn(rng, ch, 2, 2, 2);
            const OneForm cw = cartier(w);
            t.expect(cartier(OneForm(u.pow(p) * w.u, u.pow(p) * w.v)) == OneForm(u * cw.u, u * cw.v), "p-linearity");
        }
        for (int i = 0; i < 50; ++i) {
            const RatFn f = gen::random_ratfn(rng, ch, 2, 2, 2);
            const RatFn g = gen::random_ratfn(rng, ch, 2, 2, 2);
            const RatFn a = find_multiplier({f, g});
            const OneForm w(a * g, -(a * f));
            const Derivation d = Derivation::planar(f, g);
            const RatFn cw_d = pair(cartier(w), d);
            t.expect(pair(w, brute_power_p(d)) == cw_d.pow(p), "proof identity at " + show(f, g));
            t.expect(-cw_d.pow(p) == rhs_obstruction(f, g, a), "criterion consistency at " + show(f, g));
        }
    }
    return "150 exact forms, 150 forms for p-linearity, 150 derivation-induced forms";
}

// 8. Series family.
std::string criterion8(Tally& t) {
    Rng rng(8008);
    int nonzero = 0;
    for (int i = 0; i < 20; ++i) {
        const PrimeChar ch(i % 2 == 0 ? 2 : 3);
        const Poly h = gen::random_nonzero_poly(rng, ch, 2, 3, 3);
        const Poly c = gen::random_poly(rng, ch, 2, 1, 2).frobenius();
        const auto level = static_cast<unsigned>(gen::uniform(rng, 0, 2));
        const SeriesReport r = series_verify(SeriesSpec(h, c, level));
        const std::string at = to_string(h) + " ; " + to_string(c) + " I=" + std::to_string(level);
        t.expect(r.divergence_free, "divergence at " + at);
        t.expect(r.vanishes_below_threshold, "low-degree terms at " + at);
        t.expect(r.c_closed_form_matches, "c closed form at " + at);
        nonzero += !r.obstruction.is_zero();
    }
    return "20 specs, " + std::to_string(nonzero) + " with a nonzero tail";
}

// 9. Foundations.
std::string criterion9(Tally& t) {
    Rng rng(9009);
    for (int i = 0; i < 200; ++i) {
        const std::uint32_t p = kPrimes[i % 3];
        const PrimeChar ch(p);
        const RatFn b = gen::random_ratfn(rng, ch, 2, 4, 4);
        t.expect(p_decompose(b).recompose() == b, "recompose");
        t.expect(pth_root(b.pow(p)) == b, "pth_root");
        t.expect(iterated_partial(b, 0, p).is_zero() && iterated_partial(b, 1, p).is_zero(), "d^p != 0");
        t.expect(fast_partial_pow(b, Axis::X) == iterated_partial(b, 0, p - 1) &&
                     fast_partial_pow(b, Axis::Y) == iterated_partial(b, 1, p - 1),
                 "fast rule");
        const Derivation d = Derivation::planar(gen::random_ratfn(rng, ch, 2, 2, 2), gen::random_ratfn(rng, ch, 2, 2, 2));
        const Derivation dp = brute_power_p(d);
        const RatFn u = gen::random_ratfn(rng, ch, 2, 2, 2);
        const RatFn v = gen::random_ratfn(rng, ch, 2, 2, 2);
        t.expect(apply(dp, u * v) == u * apply(dp, v) + v * apply(dp, u), "Leibniz for D^p");
    }
    return "200 cases per property";
}

// 10. CLI round-trips, goldens, bench.
std::string criterion10(Tally& t) {
    Rng rng(10010);
    for (int i = 0; i < 200; ++i) {
        const PrimeChar ch(std::uint32_t{kPrimes[i % 3]});
        const std::size_t arity = 1 + i % 3;
        const RatFn b = gen::random_ratfn(rng, ch, arity, 4, 4);
        const std::string text = to_string(b);
        t.expect(cli::parse_ratfn(text, ch, arity) == b, "round-trip of " + text);
    }
    const auto golden = testing::load_golden(PCLOSED_GOLDEN_DIR);
    for (const auto& c : golden) {
        std::string out;
        const int code = run_cli(c.args, out);
        t.expect(code == 0 && out == c.expected, "golden " + c.name);
    }
    std::string bench;
    const int code = run_cli({"bench", "--p", "5", "--deg", "3", "--trials", "25"}, bench);
    t.expect(code == 0 && has_line(bench, "agreement: 25/25"), "bench agreement");
    std::string speedup = "?";
    std::istringstream in(bench);
    for (std::string l; std::getline(in, l);)
        if (l.rfind("speedup: ", 0) == 0) speedup = l.substr(9);
    return "200 round-trips, " + std::to_string(golden.size()) + " goldens, bench 25/25, speedup " + speedup +
           " (informational)";
}

struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0: no limit
    std::function<std::string(Tally&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "y d/dx + x^2 d/dy fixture", 1, criterion1},
        {2, "obstruction identity", 120, criterion2},
        {3, "criterion agrees with brute force", 180, criterion3},
        {4, "monomial grid", 120, criterion4},
        {5, "(x-y)^(p-1) fixtures and coprime pairs", 0, criterion5},
        {6, "multipliers", 120, criterion6},
        {7, "Cartier operator", 0, criterion7},
        {8, "series family", 60, criterion8},
        {9, "foundations", 0, criterion9},
        {10, "CLI", 0, criterion10},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Tally tally;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        try {
            detail = c.run(tally);
        } catch (const std::exception& e) {
            tally.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_s == 0 || secs < c.limit_s;
        const bool ok = tally.ok() && in_time;
        failed += !ok;
        char timing[64];
        if (c.limit_s > 0)
            std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, c.limit_s);
        else
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << timing << "] "
                  << tally.summary() << (detail.empty() ? "" : "; " + detail) << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
