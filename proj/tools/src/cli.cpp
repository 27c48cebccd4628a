#include "pclosed_cli/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pclosed/pclosed.hpp"
#include "pclosed_cli/expr.hpp"
#include "pclosed_cli/generators.hpp"

namespace pclosed::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "pclosed/1";

std::string text(const RatFn& b) { return to_string(b); }

// Human form: one `key: value` line per field.
void print_human(const Json& j, std::ostream& out) {
    for (const auto& [key, value] : j.items()) {
        if (key == "schema") continue;
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else if (value.is_null())
            out << "none";
        else if (value.is_array()) {
            out << '[';
            bool first = true;
            for (const auto& v : value) {
                out << (first ? "" : ", ") << (v.is_string() ? v.get<std::string>() : v.dump());
                first = false;
            }
            out << ']';
        } else
            out << value.dump();
        out << '\n';
    }
}

void emit(const Json& j, bool json, std::ostream& out) {
    if (json)
        out << j.dump(2) << '\n';
    else
        print_human(j, out);
}

Json header(const std::string& command, PrimeChar ch) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["p"] = ch.value();
    return j;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (const char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

Poly require_polynomial(const RatFn& b, const char* what) {
    if (!b.is_polynomial()) fail(ErrorCode::MalformedSeries, std::string(what) + " must be a polynomial");
    return b.num();
}

// ---- commands ----

int cmd_check(PrimeChar ch, const std::string& fs, const std::string& gs, bool no_witness, bool json,
              std::ostream& out) {
    const RatFn f = parse_ratfn(fs, ch, 2);
    const RatFn g = parse_ratfn(gs, ch, 2);
    const CriterionReport r = is_p_closed(f, g, !no_witness);
    Json j = header("check", ch);
    j["f"] = text(r.f);
    j["g"] = text(r.g);
    j["a"] = text(r.a);
    j["c_f"] = text(r.c_f);
    j["c_g"] = text(r.c_g);
    j["c_f_root"] = text(r.c_f_root);
    j["c_g_root"] = text(r.c_g_root);
    j["obstruction"] = text(r.obstruction);
    j["p_closed"] = r.p_closed;
    j["verdict"] = r.p_closed ? "p-closed" : "not p-closed";
    j["witness_a"] = r.witness ? Json(text(r.witness->a)) : Json(nullptr);
    emit(j, json, out);
    return kSuccess;
}

int cmd_multiplier(PrimeChar ch, const std::string& fs, bool json, std::ostream& out) {
    const std::vector<std::string> parts = split_commas(fs);
    const std::size_t n = parts.size();
    std::vector<RatFn> f;
    for (const auto& s : parts) f.push_back(parse_ratfn(s, ch, n));
    const RatFn a = find_multiplier(f);
    Json j = header("multiplier", ch);
    j["n"] = n;
    Json arr = Json::array();
    for (const RatFn& c : f) arr.push_back(text(c));
    j["f"] = arr;
    j["a"] = text(a);
    emit(j, json, out);
    return kSuccess;
}

int cmd_witness(PrimeChar ch, const std::string& fs, const std::string& gs, bool json, std::ostream& out) {
    const RatFn f = parse_ratfn(fs, ch, 2);
    const RatFn g = parse_ratfn(gs, ch, 2);
    const auto w = closure_witness(Derivation::planar(f, g));
    Json j = header("witness", ch);
    j["f"] = text(f);
    j["g"] = text(g);
    j["p_closed"] = w.has_value();
    j["verdict"] = w ? "p-closed" : "not p-closed";
    j["witness_a"] = w ? Json(text(w->a)) : Json(nullptr);
    j["verified"] = w ? w->verified : false;
    emit(j, json, out);
    return kSuccess;
}

int cmd_decompose(PrimeChar ch, const std::string& fs, const std::string& gs, bool json, std::ostream& out) {
    const RatFn f = parse_ratfn(fs, ch, 2);
    const RatFn g = parse_ratfn(gs, ch, 2);
    const HamiltonianDecomposition d = hamiltonian_decompose(f, g);
    Json j = header("decompose", ch);
    j["f"] = text(f);
    j["g"] = text(g);
    j["h"] = text(d.h);
    j["c_f"] = text(d.c_f);
    j["c_g"] = text(d.c_g);
    j["c_f_root"] = text(pth_root(d.c_f));
    j["c_g_root"] = text(pth_root(d.c_g));
    emit(j, json, out);
    return kSuccess;
}

int cmd_cartier(PrimeChar ch, const std::string& us, const std::string& vs, bool json, std::ostream& out) {
    const OneForm w(parse_ratfn(us, ch, 2), parse_ratfn(vs, ch, 2));
    const OneForm cw = cartier(w);
    Json j = header("cartier", ch);
    j["u"] = text(w.u);
    j["v"] = text(w.v);
    j["cartier_u"] = text(cw.u);
    j["cartier_v"] = text(cw.v);
    emit(j, json, out);
    return kSuccess;
}

int cmd_classify(PrimeChar ch, std::int64_t mx, std::int64_t my, bool json, std::ostream& out) {
    const MonomialClass m = classify_monomial(mx, my, ch);
    Json j = header("classify-monomial", ch);
    j["m_x"] = m.m_x;
    j["m_y"] = m.m_y;
    j["n_x"] = m.n_x;
    j["n_y"] = m.n_y;
    j["eps_x"] = m.eps_x.value();
    j["eps_y"] = m.eps_y.value();
    j["obstruction"] = text(monomial_obstruction(mx, my, ch));
    j["p_closed"] = m.p_closed;
    j["verdict"] = m.p_closed ? "p-closed" : "not p-closed";
    emit(j, json, out);
    return kSuccess;
}

int cmd_series(PrimeChar ch, const std::string& hs, const std::string& cs, unsigned level, bool json,
               std::ostream& out, std::ostream& err) {
    const Poly h = require_polynomial(parse_ratfn(hs, ch, 2), "h");
    const Poly c = require_polynomial(parse_ratfn(cs, ch, 2), "c");
    const SeriesSpec spec(h, c, level);
    const SeriesReport r = series_verify(spec);
    Json j = header("series-gen", ch);
    j["h"] = to_string(h);
    j["c"] = to_string(c);
    j["level"] = level;
    j["f"] = to_string(r.f);
    j["g"] = to_string(r.g);
    j["divergence_free"] = r.divergence_free;
    j["c_f"] = text(r.c_f);
    j["c_g"] = text(r.c_g);
    j["obstruction"] = to_string(r.obstruction);
    j["threshold"] = r.threshold;
    j["vanishes_below_threshold"] = r.vanishes_below_threshold;
    j["lowest_degree"] = r.lowest_degree ? Json(*r.lowest_degree) : Json(nullptr);
    j["c_closed_form_matches"] = r.c_closed_form_matches;
    j["ok"] = r.ok();
    emit(j, json, out);
    if (!r.ok()) {
        err << "error: series verification failed\n";
        return kDomainError;
    }
    return kSuccess;
}

// Trials cycle through three families: a random polynomial pair, a
// polynomial multiple of a Hamiltonian pair (always p-closed), and a
// divergence-free pair with random K^p corrections.
std::pair<RatFn, RatFn> bench_input(gen::Rng& rng, PrimeChar ch, int deg, int trial) {
    switch (trial % 3) {
        case 0:
            return {RatFn(gen::random_poly(rng, ch, 2, deg, 3)), RatFn(gen::random_poly(rng, ch, 2, deg, 3))};
        case 1: {
            const Poly h = gen::random_nonzero_poly(rng, ch, 2, deg + 1, 3);
            const Poly u = gen::random_nonzero_poly(rng, ch, 2, 1, 2);
            return {RatFn(u * partial(h, 1)), RatFn(-(u * partial(h, 0)))};
        }
        default: {
            const Poly h = gen::random_nonzero_poly(rng, ch, 2, deg + 1, 3);
            const auto top = static_cast<Exponent>(ch.value() - 1);
            const Poly cf = gen::random_poly(rng, ch, 2, 1, 1).frobenius();
            const Poly cg = gen::random_poly(rng, ch, 2, 1, 1).frobenius();
            return {RatFn(partial(h, 1) + cf * Poly::monomial(ch, 2, ExponentVector{0, top})),
                    RatFn(-partial(h, 0) + cg * Poly::monomial(ch, 2, ExponentVector{top, 0}))};
        }
    }
}

// fast_ms covers the whole criterion (multiplier search included);
// rhs_ms is the obstruction formula alone once a is known.
int cmd_bench(PrimeChar ch, int deg, int trials, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    using Clock = std::chrono::steady_clock;
    auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
    gen::Rng rng(seed);
    double fast_total = 0, rhs_total = 0, brute_total = 0;
    int agree = 0;
    out << "trial  verdict          fast_ms      rhs_ms    brute_ms  agree\n";
    for (int t = 0; t < trials; ++t) {
        const auto [f, g] = bench_input(rng, ch, deg, t);
        const auto t0 = Clock::now();
        const CriterionReport rep = is_p_closed(f, g);
        const auto t1 = Clock::now();
        const bool rhs_zero = rhs_obstruction(f, g, rep.a).is_zero();
        const auto t2 = Clock::now();
        const bool brute = brute_obstruction(Derivation::planar(f, g)).is_zero();
        const auto t3 = Clock::now();
        const double fm = ms(t1 - t0), rm = ms(t2 - t1), bm = ms(t3 - t2);
        fast_total += fm;
        rhs_total += rm;
        brute_total += bm;
        const bool ok = rep.p_closed == brute && rhs_zero == brute;
        agree += ok;
        out << std::left << std::setw(7) << t + 1 << std::setw(14) << (rep.p_closed ? "p-closed" : "not p-closed")
            << std::right << std::fixed << std::setprecision(3) << std::setw(10) << fm << std::setw(12) << rm
            << std::setw(12) << bm << "  " << (ok ? "yes" : "NO") << '\n';
    }
    auto ratio = [](double num, double den) { return den > 0 ? num / den : 0.0; };
    out << std::defaultfloat << "agreement: " << agree << '/' << trials << '\n' << std::fixed
        << std::setprecision(3) << "fast_total_ms: " << fast_total << '\n'
        << "rhs_total_ms: " << rhs_total << '\n'
        << "brute_total_ms: " << brute_total << '\n'
        << std::setprecision(2) << "speedup: " << ratio(brute_total, fast_total) << "x\n"
        << "speedup_given_multiplier: " << ratio(brute_total, rhs_total) << "x\n"
        << std::defaultfloat;
    if (agree != trials) {
        err << "error: fast criterion and brute-force oracle disagree\n";
        return kDomainError;
    }
    return kSuccess;
}

int cmd_selftest(std::ostream& out) {
    int passed = 0;
    const auto& fixtures = worked_examples();
    for (const Fixture& fx : fixtures) {
        std::string problem;
        try {
            problem = fx.check();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        if (problem.empty()) {
            ++passed;
            out << "PASS " << fx.name << '\n';
        } else {
            out << "FAIL " << fx.name << ": " << problem << '\n';
        }
    }
    out << passed << '/' << fixtures.size() << " worked examples passed\n";
    return passed == static_cast<int>(fixtures.size()) ? kSuccess : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide p-closedness of derivations f d/dx + g d/dy over F_p(x, y)", "pclosed"};
    app.require_subcommand(1);

    std::uint64_t p = 0;
    std::string f, g, u, v, h, c;
    bool json = false, no_witness = false;
    std::int64_t mx = 0, my = 0;
    unsigned level = 0;
    int deg = 3, trials = 25;
    std::uint64_t seed = 1;

    auto add_p = [&](CLI::App* s) { s->add_option("--p", p, "prime characteristic")->required(); };
    auto add_json = [&](CLI::App* s) { s->add_flag("--json", json, "machine-readable output"); };

    auto* check = app.add_subcommand("check", "run the fast criterion on f d/dx + g d/dy");
    add_p(check);
    check->add_option("--f", f, "coefficient of d/dx")->required();
    check->add_option("--g", g, "coefficient of d/dy")->required();
    check->add_flag("--no-witness", no_witness, "skip the brute-force closure witness");
    add_json(check);

    auto* mult = app.add_subcommand("multiplier", "find a with sum d(a f_i)/dx_i = 0");
    add_p(mult);
    mult->add_option("--f", f, "comma-separated coefficients f_1,...,f_n")->required();
    add_json(mult);

    auto* wit = app.add_subcommand("witness", "compute a with D^p = a D by brute force");
    add_p(wit);
    wit->add_option("--f", f)->required();
    wit->add_option("--g", g)->required();
    add_json(wit);

    auto* dec = app.add_subcommand("decompose", "write a divergence-free pair via h, c_f, c_g");
    add_p(dec);
    dec->add_option("--f", f)->required();
    dec->add_option("--g", g)->required();
    add_json(dec);

    auto* car = app.add_subcommand("cartier", "apply the Cartier operator to the closed form u dx + v dy");
    add_p(car);
    car->add_option("--u", u)->required();
    car->add_option("--v", v)->required();
    add_json(car);

    auto* mono = app.add_subcommand(
        "classify-monomial",
        "classify y^my d/dx + x^mx d/dy (integer exponents only; negative ones act as denominators)");
    add_p(mono);
    mono->add_option("--mx", mx, "integer exponent of x")->required();
    mono->add_option("--my", my, "integer exponent of y")->required();
    add_json(mono);

    auto* ser = app.add_subcommand("series-gen", "generate and verify a truncated p-closed series pair");
    ser->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
    add_p(ser);
    ser->add_option("--h", h, "polynomial h")->required();
    ser->add_option("--c", c, "polynomial in x^p, y^p")->required();
    ser->add_option("--level", level, "last series index I")->required();
    add_json(ser);

    auto* bench = app.add_subcommand("bench", "time the fast criterion against the brute-force oracle");
    add_p(bench);
    bench->add_option("--deg", deg, "maximum degree of generated inputs")->check(CLI::Range(0, 12));
    bench->add_option("--trials", trials, "number of random inputs")->check(CLI::Range(1, 100000));
    bench->add_option("--seed", seed, "random seed");

    auto* self = app.add_subcommand("selftest", "check the embedded worked examples");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (self->parsed()) return cmd_selftest(out);
        const PrimeChar ch = [&] {
            try {
                return PrimeChar(p);
            } catch (const Error&) {
                throw CLI::ValidationError("--p", std::to_string(p) + " is not a prime");
            }
        }();
        if (check->parsed()) return cmd_check(ch, f, g, no_witness, json, out);
        if (mult->parsed()) return cmd_multiplier(ch, f, json, out);
        if (wit->parsed()) return cmd_witness(ch, f, g, json, out);
        if (dec->parsed()) return cmd_decompose(ch, f, g, json, out);
        if (car->parsed()) return cmd_cartier(ch, u, v, json, out);
        if (mono->parsed()) return cmd_classify(ch, mx, my, json, out);
        if (ser->parsed()) return cmd_series(ch, h, c, level, json, out, err);
        if (bench->parsed()) return cmd_bench(ch, deg, trials, seed, out, err);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        err << "error: cannot parse expression " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kDomainError;
    }
    err << "error: no command\n";
    return kUsageError;
}

}  // namespace pclosed::cli
