#include "dimjac/jacobi/lichnerowicz.hpp"

#include "dimjac/errors.hpp"
#include "dimjac/jacobi/polynomial_parser.hpp"

namespace dimjac {

LichnerowiczStructure::LichnerowiczStructure(MultiVector pi, MultiVector r,
                                             std::vector<std::string> names)
    : pi_(std::move(pi)), r_(std::move(r)), names_(std::move(names)) {
  if (pi_.degree() != 2) throw InvalidArgument("pi must be a bivector");
  if (r_.degree() != 1) throw InvalidArgument("R must be a vector field");
  if (pi_.dimension() != r_.dimension())
    throw InvalidArgument("pi and R live on charts of different dimension");
  if (names_.empty()) names_ = default_names(pi_.dimension());
  if (names_.size() != pi_.dimension())
    throw InvalidArgument("expected " + std::to_string(pi_.dimension()) +
                          " variable names");
}

LichnerowiczStructure LichnerowiczStructure::zero(std::size_t n,
                                                  std::vector<std::string> names) {
  return LichnerowiczStructure(MultiVector(n, 2), MultiVector(n, 1),
                               std::move(names));
}

Polynomial LichnerowiczStructure::parse(std::string_view text) const {
  return parse_polynomial(text, names_);
}

JacobiCheck is_jacobi_pair(const LichnerowiczStructure& l) {
  const auto& names = l.names();
  // Trivectors vanish on charts of dimension below three.
  MultiVector first = l.dimension() < 3
                          ? MultiVector(l.dimension(), 3)
                          : schouten(l.pi(), l.pi()) +
                                wedge(l.r(), l.pi()) * Rational(2);
  if (!first.is_zero()) {
    const auto& [mask, f] = *first.components().begin();
    return {false, MultiVector::term_string(mask, f, names), "[pi,pi]+2R^pi"};
  }
  MultiVector second = schouten(l.r(), l.pi());
  if (!second.is_zero()) {
    const auto& [mask, f] = *second.components().begin();
    return {false, MultiVector::term_string(mask, f, names), "[R,pi]"};
  }
  return {};
}

Polynomial bivector_pairing(const LichnerowiczStructure& l, const Polynomial& f,
                            const Polynomial& g) {
  const Polynomial fg[] = {f, g};
  return l.pi().evaluate(fg);
}

Polynomial jacobi_bracket(const LichnerowiczStructure& l, const Polynomial& f,
                          const Polynomial& g) {
  return bivector_pairing(l, f, g) + f * l.r().apply(g) - g * l.r().apply(f);
}

MultiVector hamiltonian_vf(const LichnerowiczStructure& l, const Polynomial& f) {
  return l.pi().contract(f) + l.r() * f;
}

namespace {

std::vector<std::string> darboux_names(std::size_t n) {
  if (n == 1) return {"q", "p", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  names.push_back("z");
  return names;
}

}  // namespace

LichnerowiczStructure canonical_darboux(std::size_t n) {
  if (n == 0) throw InvalidArgument("need at least one degree of freedom");
  std::size_t dim = 2 * n + 1, z = 2 * n;
  MultiVector pi(dim, 2);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t q = i, p = n + i;
    const std::size_t pq[] = {p, q}, pz[] = {p, z};
    pi = pi + MultiVector::basis(dim, pq, Polynomial::constant(dim, Rational(1)));
    pi = pi + MultiVector::basis(dim, pz, Polynomial::variable(dim, p));
  }
  const std::size_t zs[] = {z};
  MultiVector r = MultiVector::basis(dim, zs, Polynomial::constant(dim, Rational(-1)));
  return LichnerowiczStructure(pi, r, darboux_names(n));
}

LichnerowiczStructure canonical_symplectic(std::size_t n) {
  if (n == 0) throw InvalidArgument("need at least one degree of freedom");
  std::size_t dim = 2 * n;
  MultiVector pi(dim, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t qp[] = {i, n + i};
    pi = pi + MultiVector::basis(dim, qp, Polynomial::constant(dim, Rational(1)));
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back(n == 1 ? "q" : "q" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back(n == 1 ? "p" : "p" + std::to_string(i));
  return LichnerowiczStructure(pi, MultiVector(dim, 1), names);
}

std::vector<Polynomial> monomial_probes(std::size_t n, int max_degree) {
  std::vector<Polynomial> probes;
  Exponents e(n, 0);
  // Enumerate exponent vectors with total degree <= max_degree.
  auto recurse = [&](auto& self, std::size_t i, int budget) -> void {
    if (i == n) {
      probes.push_back(Polynomial::monomial(n, e));
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      e[i] = k;
      self(self, i + 1, budget - k);
    }
    e[i] = 0;
  };
  recurse(recurse, 0, max_degree);
  return probes;
}

int probe_degree(const LichnerowiczStructure& l) {
  int d = 0;
  for (const auto& [mask, f] : l.pi().components()) d = std::max(d, f.degree());
  for (const auto& [mask, f] : l.r().components()) d = std::max(d, f.degree());
  return std::max(2, d + 1);
}

ExtensionReport check_extension_conditions(const LichnerowiczStructure& l) {
  ExtensionReport report;
  const auto& names = l.names();
  std::size_t n = l.dimension();
  auto probes = monomial_probes(n, probe_degree(l));
  auto text = [&](const Polynomial& p) { return p.to_string(names); };

  // 1. [X_1, X_1] = X_{[1,1]}: both sides vanish for a single spanning section.
  report.conditions[0] = {true, ""};

  // 2. X_{f.1} = f X_1 + Lambda#(df (x) 1), with X_1 = R and
  //    Lambda#(df (x) 1)[g] = pi(df, dg).
  MultiVector x1 = hamiltonian_vf(l, Polynomial::constant(n, Rational(1)));
  for (const auto& f : probes) {
    if (!report.conditions[1].ok) break;
    MultiVector lhs = hamiltonian_vf(l, f);
    for (const auto& g : probes) {
      Polynomial diff = lhs.apply(g) - (x1 * f).apply(g) - bivector_pairing(l, f, g);
      if (!diff.is_zero()) {
        report.conditions[1] = {false, "X_{" + text(f) + "}[" + text(g) + "] off by " +
                                           text(diff)};
        break;
      }
    }
  }

  // 3. [X_1, Lambda#(df (x) 1)] = Lambda#(d X_1[f] (x) 1).
  for (const auto& f : probes) {
    if (!report.conditions[2].ok) break;
    MultiVector lam = l.pi().contract(f);
    MultiVector lhs = schouten(x1, lam);
    MultiVector rhs = l.pi().contract(x1.apply(f));
    MultiVector diff = lhs - rhs;
    if (!diff.is_zero()) {
      report.conditions[2] = {false, "f = " + text(f) + ": " + diff.to_string(names)};
    }
  }

  // 4. Cyclic sum of Lambda(df, Lambda(dg, dh)) against the X_1 terms.
  auto lam = [&](const Polynomial& a, const Polynomial& b) {
    return bivector_pairing(l, a, b);
  };
  auto R = [&](const Polynomial& a) { return x1.apply(a); };
  for (std::size_t i = 0; i < probes.size() && report.conditions[3].ok; ++i)
    for (std::size_t j = i + 1; j < probes.size() && report.conditions[3].ok; ++j)
      for (std::size_t k = j + 1; k < probes.size(); ++k) {
        const auto &f = probes[i], &g = probes[j], &h = probes[k];
        Polynomial lhs = lam(f, lam(g, h)) + lam(g, lam(h, f)) + lam(h, lam(f, g));
        Polynomial rhs = R(f) * lam(h, g) + R(g) * lam(f, h) + R(h) * lam(g, f);
        Polynomial diff = lhs - rhs;
        if (!diff.is_zero()) {
          report.conditions[3] = {false, "(" + text(f) + ", " + text(g) + ", " +
                                             text(h) + "): " + text(diff)};
          break;
        }
      }
  return report;
}

}  // namespace dimjac
