#include <sstream>

#include "pclosed/pclosed.hpp"
#include "pclosed_cli/cli.hpp"
#include "pclosed_cli/expr.hpp"
#include "pclosed_cli/generators.hpp"

namespace pclosed::cli {

namespace {

constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7};

RatFn R(const char* s, std::uint32_t p) { return parse_ratfn(s, PrimeChar(p), 2); }

// (x - y)^(p-1)
RatFn diagonal(std::uint32_t p) {
    const PrimeChar ch(p);
    return (RatFn::variable(ch, 2, 0) - RatFn::variable(ch, 2, 1)).pow(p - 1);
}

// d/dx + x^(p-1) d/dy
Derivation wilson(std::uint32_t p) {
    const PrimeChar ch(p);
    return Derivation::planar(RatFn::constant(ch, 2, 1), RatFn::variable(ch, 2, 0).pow(p - 1));
}

std::string expect(bool ok, const std::string& why) { return ok ? "" : why; }

std::string at_p(std::uint32_t p, const std::string& why) { return "p=" + std::to_string(p) + ": " + why; }

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = run(args, out, err);
    return out.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::vector<Fixture> build() {
    std::vector<Fixture> fx;
    const Derivation yx2 = Derivation::planar(R("y", 5), R("x^2", 5));

    fx.push_back({"apply: D(x) = y for D = y d/dx + x^2 d/dy", [=] {
                      return expect(apply(yx2, R("x", 5)) == R("y", 5), "D(x) != y");
                  }});
    fx.push_back({"apply: D(y) = x^2 for D = y d/dx + x^2 d/dy", [=] {
                      return expect(apply(yx2, R("y", 5)) == R("x^2", 5), "D(y) != x^2");
                  }});
    fx.push_back({"brute power: D^5 is parallel to D for y d/dx + x^2 d/dy", [=] {
                      const Derivation pw = brute_power_p(yx2);
                      return expect(R("x^2", 5) * pw.coeff(0) == R("y", 5) * pw.coeff(1),
                                    "x^2 D^5(x) != y D^5(y)");
                  }});
    fx.push_back({"brute obstruction vanishes for y d/dx + x^2 d/dy", [=] {
                      return expect(brute_obstruction(yx2).is_zero(), "nonzero obstruction");
                  }});
    fx.push_back({"brute obstruction is nonzero for d/dx + x^(p-1) d/dy", [] {
                      for (auto p : kPrimes)
                          if (brute_obstruction(wilson(p)).is_zero()) return at_p(p, "zero obstruction");
                      return std::string();
                  }});
    fx.push_back({"closure witness: found for y d/dx + x^2 d/dy", [=] {
                      const auto w = closure_witness(yx2);
                      return expect(w && w->verified, "no verified witness");
                  }});
    fx.push_back({"closure witness: none for d/dx + x^(p-1) d/dy", [] {
                      for (auto p : kPrimes)
                          if (closure_witness(wilson(p))) return at_p(p, "unexpected witness");
                      return std::string();
                  }});
    fx.push_back({"divergence: monomial pairs (y^my, x^mx) are divergence free", [] {
                      for (auto p : kPrimes) {
                          const PrimeChar ch(p);
                          for (std::int64_t mx = -3; mx <= 6; ++mx)
                              for (std::int64_t my = -3; my <= 6; ++my) {
                                  const RatFn f = RatFn::variable(ch, 2, 1).pow(my);
                                  const RatFn g = RatFn::variable(ch, 2, 0).pow(mx);
                                  if (!check_divergence_free(f, g)) return at_p(p, "monomial pair fails");
                              }
                      }
                      return std::string();
                  }});
    fx.push_back({"divergence: ((x-y)^(p-1), (x-y)^(p-1)) is divergence free", [] {
                      for (auto p : kPrimes)
                          if (!check_divergence_free(diagonal(p), diagonal(p))) return at_p(p, "not free");
                      return std::string();
                  }});
    fx.push_back({"fast rule: (p-1)-fold y-derivative of (x-y)^(p-1) is -1", [] {
                      for (auto p : kPrimes) {
                          const PrimeChar ch(p);
                          if (fast_partial_pow(diagonal(p), Axis::Y) != RatFn::constant(ch, 2, -1))
                              return at_p(p, "wrong value");
                      }
                      return std::string();
                  }});
    fx.push_back({"c-coefficients: (x-y)^(p-1) pair gives c_f = c_g = 1", [] {
                      for (auto p : kPrimes) {
                          const CCoefficients c = c_coefficients(diagonal(p), diagonal(p));
                          if (!c.c_f.is_one() || !c.c_g.is_one()) return at_p(p, "c != (1, 1)");
                      }
                      return std::string();
                  }});
    fx.push_back({"obstruction: y d/dx + x^2 d/dy with a = 1 gives 0", [] {
                      return expect(rhs_obstruction(R("y", 5), R("x^2", 5), R("1", 5)).is_zero(), "nonzero");
                  }});
    fx.push_back({"obstruction: (x-y)^(p-1) pair with a = 1 gives 0", [] {
                      for (auto p : kPrimes)
                          if (!rhs_obstruction(diagonal(p), diagonal(p), RatFn::constant(PrimeChar(p), 2, 1))
                                   .is_zero())
                              return at_p(p, "nonzero");
                      return std::string();
                  }});
    fx.push_back({"criterion: y d/dx + x^2 d/dy is p-closed at p = 5", [] {
                      const CriterionReport r = is_p_closed(R("y", 5), R("x^2", 5), true);
                      return expect(r.p_closed && r.c_f.is_zero() && r.c_g.is_zero() && r.witness,
                                    "unexpected report");
                  }});
    fx.push_back({"criterion: (f, 0) and (0, f) are p-closed", [] {
                      gen::Rng rng(2024);
                      for (std::uint32_t p : {2u, 3u, 5u}) {
                          const PrimeChar ch(p);
                          for (int t = 0; t < 5; ++t) {
                              const RatFn f = gen::random_ratfn(rng, ch, 2, 3, 3);
                              const RatFn zero(ch, 2);
                              if (!is_p_closed(f, zero).p_closed || !is_p_closed(zero, f).p_closed)
                                  return at_p(p, "not p-closed: " + to_string(f));
                          }
                      }
                      return std::string();
                  }});
    fx.push_back({"criterion: d/dx + x^(p-1) d/dy is not p-closed", [] {
                      for (auto p : kPrimes) {
                          const Derivation d = wilson(p);
                          if (is_p_closed(d.coeff(0), d.coeff(1)).p_closed) return at_p(p, "reported p-closed");
                      }
                      return std::string();
                  }});
    fx.push_back({"star certificate: none for d/dx + x^(p-1) d/dy", [] {
                      for (auto p : kPrimes) {
                          const Derivation d = wilson(p);
                          if (star_certificate(d.coeff(0), d.coeff(1))) return at_p(p, "certificate found");
                      }
                      return std::string();
                  }});
    fx.push_back({"coprime case: (y, x^2) accepted and p-closed at p = 5", [] {
                      return expect(coprime_case_check(R("y", 5).num(), R("x^2", 5).num()), "rejected");
                  }});
    fx.push_back({"coprime case: (x-y)^(p-1) pair rejected as not coprime", [] {
                      for (auto p : kPrimes) {
                          try {
                              coprime_case_check(diagonal(p).num(), diagonal(p).num());
                              return at_p(p, "accepted");
                          } catch (const Error& e) {
                              if (e.code() != ErrorCode::NotCoprime) return at_p(p, "wrong error");
                          }
                      }
                      return std::string();
                  }});
    fx.push_back({"decomposition: (x-y)^(p-1) pair has c = (1, 1) and reconstructs", [] {
                      for (auto p : kPrimes) {
                          const PrimeChar ch(p);
                          const RatFn f = diagonal(p);
                          const HamiltonianDecomposition d = hamiltonian_decompose(f, f);
                          const RatFn yp = RatFn::variable(ch, 2, 1).pow(p - 1);
                          const RatFn xp = RatFn::variable(ch, 2, 0).pow(p - 1);
                          if (!d.c_f.is_one() || !d.c_g.is_one()) return at_p(p, "c != (1, 1)");
                          if (partial(d.h, 1) + d.c_f * yp != f || -partial(d.h, 0) + d.c_g * xp != f)
                              return at_p(p, "reconstruction fails");
                      }
                      return std::string();
                  }});
    fx.push_back({"forms: g dx - f dy is closed and kills D for divergence-free pairs", [=] {
                      const OneForm w(R("x^2", 5), -R("y", 5));
                      if (!is_closed(w)) return std::string("g dx - f dy not closed for (y, x^2)");
                      if (!pair(w, yx2).is_zero()) return std::string("g dx - f dy does not kill y d/dx + x^2 d/dy");
                      for (auto p : kPrimes) {
                          const RatFn f = diagonal(p);
                          const OneForm wd(f, -f);
                          if (!is_closed(wd)) return at_p(p, "form not closed");
                          if (!pair(wd, Derivation::planar(f, f)).is_zero()) return at_p(p, "pairing nonzero");
                      }
                      return std::string();
                  }});
    fx.push_back({"monomial: (m_x, m_y) = (2, 1) is p-closed at p = 5", [] {
                      const MonomialClass m = classify_monomial(2, 1, PrimeChar(5));
                      return expect(m.p_closed && m.n_x == 3 && m.n_y == 2, "wrong class");
                  }});
    fx.push_back({"monomial: (p-1, 0) is not p-closed", [] {
                      for (auto p : kPrimes)
                          if (classify_monomial(p - 1, 0, PrimeChar(p)).p_closed) return at_p(p, "p-closed");
                      return std::string();
                  }});
    fx.push_back({"monomial: (-1, -1) is p-closed", [] {
                      for (auto p : kPrimes)
                          if (!classify_monomial(-1, -1, PrimeChar(p)).p_closed) return at_p(p, "not p-closed");
                      return std::string();
                  }});
    fx.push_back({"monomial obstruction: (2, 1) at p = 5 is 0", [] {
                      return expect(monomial_obstruction(2, 1, PrimeChar(5)).is_zero(), "nonzero");
                  }});
    fx.push_back({"monomial obstruction: (-1, -1) is 0 with both eps = -1", [] {
                      for (auto p : kPrimes) {
                          const MonomialClass m = classify_monomial(-1, -1, PrimeChar(p));
                          if (m.eps_x.value() != p - 1 || m.eps_y.value() != p - 1) return at_p(p, "eps");
                          if (!monomial_obstruction(-1, -1, PrimeChar(p)).is_zero()) return at_p(p, "nonzero");
                      }
                      return std::string();
                  }});
    fx.push_back({"parser: x^2 is a power of x", [] {
                      const ExprPtr e = parse_expr("x^2", 2);
                      return expect(e->kind == Expr::Kind::Pow && e->exponent == 2 &&
                                        e->kids[0]->kind == Expr::Kind::Variable && e->kids[0]->variable == 0,
                                    "wrong tree");
                  }});
    fx.push_back({"parser: (x-y)^4 is a power of a difference", [] {
                      const ExprPtr e = parse_expr("(x-y)^4", 2);
                      return expect(e->kind == Expr::Kind::Pow && e->exponent == 4 &&
                                        e->kids[0]->kind == Expr::Kind::Sub,
                                    "wrong tree");
                  }});
    fx.push_back({"cli: check --p 5 --f y --g x^2 reports p-closed", [] {
                      int code = 0;
                      const std::string out = run_cli({"check", "--p", "5", "--f", "y", "--g", "x^2"}, code);
                      return expect(code == 0 && contains(out, "p_closed: true\n"), "unexpected output");
                  }});
    fx.push_back({"cli: classify-monomial --p 5 --mx 2 --my 1 reports p-closed", [] {
                      int code = 0;
                      const std::string out =
                          run_cli({"classify-monomial", "--p", "5", "--mx", "2", "--my", "1"}, code);
                      return expect(code == 0 && contains(out, "verdict: p-closed\n"), "unexpected output");
                  }});
    fx.push_back({"cli: check (x-y)^4 pair at p = 5 gives c_f = c_g = 1", [] {
                      int code = 0;
                      const std::string out =
                          run_cli({"check", "--p", "5", "--f", "(x-y)^4", "--g", "(x-y)^4"}, code);
                      return expect(code == 0 && contains(out, "p_closed: true\n") &&
                                        contains(out, "c_f: 1\n") && contains(out, "c_g: 1\n"),
                                    "unexpected output");
                  }});
    return fx;
}

}  // namespace

const std::vector<Fixture>& worked_examples() {
    static const std::vector<Fixture> fixtures = build();
    return fixtures;
}

}  // namespace pclosed::cli
