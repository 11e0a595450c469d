#include "cochain/poincare.hpp"

#include "cochain/errors.hpp"
#include "cochain/extension.hpp"
#include "cochain/linalg.hpp"

namespace cochain {

PolyForm poincare(const PolyForm& u, const RationalPoint& a) {
  const int k = u.degree();
  if (k == 0) throw DegreeMismatch("the Poincare operator needs k >= 1");
  if (a.vertices().labels() != u.vertices().labels())
    throw DimensionMismatch("base point lives on another simplex");
  const int nv = chart_size(u.vertices());
  if (nv + 1 > Polynomial::kMaxVars) throw DimensionMismatch("too many variables for the Poincare operator");
  const auto av = a.chart_values();

  // Variables 0..nv-1 are the chart coordinates z, variable nv is tau.
  const Polynomial tau = Polynomial::variable(nv + 1, nv);
  std::vector<Polynomial> line, field;
  for (int i = 0; i < nv; ++i) {
    const Polynomial zi = Polynomial::variable(nv + 1, i) - Polynomial::constant(nv + 1, av[static_cast<std::size_t>(i)]);
    line.push_back(Polynomial::constant(nv + 1, av[static_cast<std::size_t>(i)]) + tau * zi);
    field.push_back(zi);
  }
  field.push_back(Polynomial(nv + 1));

  ChartForm lifted(nv + 1, k);
  for (const auto& [mask, p] : u.chart().terms()) lifted.add_term(mask, p.substitute(line));
  const ChartForm contracted = contract(lifted, field);

  const Polynomial::Monomial tau_byte = Polynomial::unit(nv) * 0xffu;
  ChartForm out(nv, k - 1);
  for (const auto& [mask, p] : contracted.terms()) {
    std::vector<Polynomial::Term> terms;
    for (const auto& t : p.terms()) {
      const int e = Polynomial::exponent(t.mono, nv);
      terms.push_back({t.mono & ~tau_byte, t.coeff / (k + e)});
    }
    out.add_term(mask, Polynomial::from_terms(nv, std::move(terms)));
  }
  return PolyForm(u.vertices(), std::move(out));
}

PolyForm poincare_bc(const PolyForm& u, const RationalPoint& a) {
  const int n = u.vertices().size() - 1;
  if (u.degree() < 1 || u.degree() > n) throw DegreeMismatch("the boundary-preserving Poincare operator needs 1 <= k <= n");
  if (!a.strictly_inside()) throw OutOfDomain("the base point must be strictly interior");
  PolyForm q = poincare(u, a);
  return q - extend(boundary_trace(q));
}

std::vector<PolyForm> vanishing_trace_basis(int n, int r, int k, Family family) {
  std::vector<PolyForm> full = basis(n, r, k, family);
  if (k > n - 1) return full;
  std::vector<SparseVector> traces;
  traces.reserve(full.size());
  for (const auto& u : full) traces.push_back(to_vector(boundary_trace(u)));
  std::vector<PolyForm> out;
  for (const auto& c : nullspace(traces)) {
    PolyForm u(IndexSet::full(n), k);
    for (std::size_t i = 0; i < full.size(); ++i)
      if (c[i] != 0) u += full[i] * c[i];
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<SpaceChoice> complex_spaces(int n, int r, const std::vector<Family>& middle) {
  if (n < 1) throw InvalidIndexSet("complexes need n >= 1");
  if (static_cast<int>(middle.size()) != n - 1)
    throw InvalidIndexSet("a complex pattern names the families of degrees 1..n-1");
  if (r < 1) throw InvalidIndexSet("complexes start at P_r with r >= 1");
  std::vector<SpaceChoice> spaces{{Family::full, r}};
  for (int k = 1; k <= n; ++k) {
    const Family f = k < n ? middle[static_cast<std::size_t>(k - 1)] : Family::full;
    const int index = spaces.back().index - (f == Family::full ? 1 : 0);
    if (index < (f == Family::full ? 0 : 1))
      throw InvalidIndexSet("pattern is not admissible for r = " + std::to_string(r));
    spaces.push_back({f, index});
  }
  return spaces;
}

std::vector<std::vector<Family>> complex_patterns(int n) {
  std::vector<std::vector<Family>> out;
  const int slots = n - 1;
  for (std::uint32_t bits = 0; bits < (1u << slots); ++bits) {
    std::vector<Family> p;
    for (int i = slots - 1; i >= 0; --i) p.push_back(bits & (1u << i) ? Family::full : Family::trimmed);
    out.push_back(std::move(p));
  }
  return out;
}

bool ComplexReport::passed() const {
  for (const auto& d : homotopy)
    if (!d.failures.empty()) return false;
  for (const auto& d : boundary_homotopy)
    if (!d.failures.empty()) return false;
  return true;
}

namespace {

std::string describe(const SpaceChoice& s, int k) {
  return std::string(s.family == Family::full ? "P_" : "P-_") + std::to_string(s.index) + "L^" + std::to_string(k);
}

}  // namespace

ComplexReport verify_complex(int n, int r, const std::vector<Family>& middle, const RationalPoint& a) {
  ComplexReport report;
  report.n = n;
  report.r = r;
  report.spaces = complex_spaces(n, r, middle);
  const IndexSet full = IndexSet::full(n);

  for (int k = 0; k <= n; ++k) {
    const SpaceChoice space = report.spaces[static_cast<std::size_t>(k)];
    DegreeReport d;
    d.k = k;
    d.space = space;
    const auto elements = basis(n, space.index, k, space.family);
    d.dim = static_cast<int>(elements.size());
    for (std::size_t e = 0; e < elements.size(); ++e) {
      const PolyForm& u = elements[e];
      const std::string tag = describe(space, k) + " basis element " + std::to_string(e);
      PolyForm rebuilt(full, k);
      bool mapped = true;
      if (k == 0) {
        rebuilt = PolyForm::constant(full, u.chart().coefficient(0).evaluate(a.chart_values()));
      } else {
        const PolyForm q = poincare(u, a);
        rebuilt += exterior_derivative(q);
        const SpaceChoice prev = report.spaces[static_cast<std::size_t>(k - 1)];
        mapped = membership(q, prev.family, prev.index);
        if (!mapped) d.failures.push_back(tag + ": Q^k u leaves " + describe(prev, k - 1));
      }
      if (k < n) rebuilt += poincare(exterior_derivative(u), a);
      if (rebuilt == u) {
        if (mapped) ++d.passes;
      } else {
        d.failures.push_back(tag + ": dQu + Qdu != u");
      }
    }
    report.homotopy.push_back(std::move(d));
  }

  for (int k = 0; k <= n; ++k) {
    const SpaceChoice space = report.spaces[static_cast<std::size_t>(k)];
    const auto elements = vanishing_trace_basis(n, space.index, k, space.family);
    if (k == n) {
      report.top_bc_dim = static_cast<int>(elements.size());
      for (const auto& u : elements)
        if (exterior_derivative(poincare_bc(u, a)) == u) ++report.top_bc_holds;
      continue;
    }
    DegreeReport d;
    d.k = k;
    d.space = space;
    d.dim = static_cast<int>(elements.size());
    for (std::size_t e = 0; e < elements.size(); ++e) {
      const PolyForm& u = elements[e];
      const std::string tag = "vanishing-trace " + describe(space, k) + " element " + std::to_string(e);
      bool ok = true;
      PolyForm rebuilt = poincare_bc(exterior_derivative(u), a);
      if (k > 0) {
        const PolyForm q = poincare_bc(u, a);
        const SpaceChoice prev = report.spaces[static_cast<std::size_t>(k - 1)];
        if (!boundary_trace(q).is_zero()) {
          ok = false;
          d.failures.push_back(tag + ": Q_bc u has a nonzero trace");
        }
        if (!membership(q, prev.family, prev.index)) {
          ok = false;
          d.failures.push_back(tag + ": Q_bc u leaves " + describe(prev, k - 1));
        }
        rebuilt += exterior_derivative(q);
      }
      if (!(rebuilt == u)) {
        ok = false;
        d.failures.push_back(tag + ": dQ_bc u + Q_bc du != u");
      }
      if (ok) ++d.passes;
    }
    report.boundary_homotopy.push_back(std::move(d));
  }
  return report;
}

}  // namespace cochain
