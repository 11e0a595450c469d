#include "cochain/blending.hpp"

#include "cochain/errors.hpp"

#include <bit>

namespace cochain {

namespace {

const PolyForm* interior(const FormData& u) { return std::get_if<PolyForm>(&u); }

void check_ordered(const IndexSet& J, int n, const char* what) {
  if (J.empty()) throw InvalidIndexSet(std::string(what) + " must be nonempty");
  if (J.ambient_n() != n)
    throw InvalidIndexSet(std::string(what) + " " + J.to_string() + " belongs to another dimension");
}

bool subset(const IndexSet& J, const IndexSet& I) { return (J.mask() & ~I.mask()) == 0; }

// Smallest label in I that is not in J, or -1.
int first_outside(const IndexSet& I, const IndexSet& J) {
  const std::uint32_t m = I.mask() & ~J.mask();
  return m ? std::countr_zero(m) : -1;
}

// Source form and its vertex set for a pullback whose range avoids the
// facet opposite `facet` (or the interior form when facet < 0).
const PolyForm& source_form(const FormData& u, int facet) {
  if (const auto* p = interior(u)) return *p;
  return std::get<BoundaryForm>(u).facet(facet);
}

}  // namespace

int data_dimension(const FormData& u) {
  if (const auto* p = interior(u)) return p->vertices().size() - 1;
  return std::get<BoundaryForm>(u).n();
}

int data_degree(const FormData& u) {
  if (const auto* p = interior(u)) return p->degree();
  return std::get<BoundaryForm>(u).degree();
}

AffineMap proj_map(int n, const IndexSet& I, int j) {
  check_ordered(I, n, "projection index set");
  if (!I.increasing()) throw InvalidIndexSet("projection index set must be increasing");
  if (j < 0 || j > n) throw InvalidIndexSet("projection target label out of range");
  const IndexSet full = IndexSet::full(n);
  const BaryPoly lambda_I = BaryPoly::lambda_sum(full, I);
  AffineMap g{full, full, {}};
  for (int m = 0; m <= n; ++m) {
    if (m == j)
      g.images.push_back(I.contains(j) ? lambda_I : BaryPoly::lambda(full, j) + lambda_I);
    else if (I.contains(m))
      g.images.push_back(BaryPoly(full));
    else
      g.images.push_back(BaryPoly::lambda(full, m));
  }
  return g;
}

PolyForm proj_pullback(const IndexSet& I, int j, const FormData& u) {
  const int n = data_dimension(u);
  AffineMap g = proj_map(n, I, j);
  if (interior(u)) return pullback_affine(g, std::get<PolyForm>(u));
  const int facet = first_outside(I, IndexSet(n, {j}));
  if (facet < 0) throw OutOfDomain("P_{I,j} with I = {j} does not map into the boundary");
  const IndexSet face = facet_vertices(n, facet);
  std::vector<BaryPoly> images;
  for (int m : face) images.push_back(g.images[static_cast<std::size_t>(m)]);
  return pullback_affine(AffineMap{g.source, face, std::move(images)},
                         std::get<BoundaryForm>(u).facet(facet));
}

ChartForm ProductForm::bidegree(int s) const {
  const std::uint32_t fiber_bits = ((1u << (form.nvars() - base_vars)) - 1u) << base_vars;
  ChartForm out(form.nvars(), form.degree());
  for (const auto& [mask, p] : form.terms())
    if (std::popcount(mask & fiber_bits) == s) out.add_term(mask, p);
  return out;
}

ProductForm product_pullback(const IndexSet& I, const IndexSet& J, const FormData& u) {
  const int n = data_dimension(u);
  check_ordered(I, n, "I");
  check_ordered(J, n, "J");
  const int s = J.size() - 1;
  const int nv = n + s;
  if (nv > Polynomial::kMaxVars) throw DimensionMismatch("product space has too many variables");

  int facet = -1;
  if (!interior(u)) {
    facet = first_outside(I, J);
    if (facet < 0)
      throw OutOfDomain("F_I maps S_n x [x_J] into the interior for I = " + I.to_string() +
                        ", J = " + J.to_string());
  }

  std::vector<Polynomial> lambda(static_cast<std::size_t>(n + 1));
  lambda[0] = Polynomial::one_minus_sum(n).embed(nv);
  for (int m = 1; m <= n; ++m) lambda[static_cast<std::size_t>(m)] = Polynomial::variable(nv, m - 1);
  Polynomial lambda_I(nv);
  for (int i : I) lambda_I += lambda[static_cast<std::size_t>(i)];

  std::vector<Polynomial> y(static_cast<std::size_t>(n + 1), Polynomial(nv));
  Polynomial t0 = Polynomial::constant(nv, 1);
  for (int a = 1; a <= s; ++a) {
    const Polynomial t = Polynomial::variable(nv, n + a - 1);
    y[static_cast<std::size_t>(J[a])] = t;
    t0 -= t;
  }
  y[static_cast<std::size_t>(J[0])] = t0;

  const PolyForm& src = source_form(u, facet);
  std::vector<Polynomial> images;
  const auto& labels = src.vertices().labels();
  for (std::size_t i = 1; i < labels.size(); ++i) {
    const int m = labels[i];
    Polynomial mu = lambda_I * y[static_cast<std::size_t>(m)];
    if (!I.contains(m)) mu += lambda[static_cast<std::size_t>(m)];
    images.push_back(std::move(mu));
  }
  return ProductForm{n, J, pullback(src.chart(), images)};
}

Rational c_const(int s, int n, int k) {
  if (s < 0 || s > n - 1)
    throw InvalidIndexSet("c_{s,n}^k needs 0 <= s <= n-1 (s = " + std::to_string(s) +
                          ", n = " + std::to_string(n) + ")");
  if (s == 0) return -1;
  Rational c = factorial(static_cast<unsigned>(s));
  c *= c;
  for (int i = 1; i <= s; ++i) c /= n - i;
  return (1 + k * s) % 2 ? -c : c;
}

BlendingOperators::BlendingOperators(FormData u)
    : data_(std::move(u)), n_(data_dimension(data_)), k_(data_degree(data_)), full_(IndexSet::full(n_)) {
  if (const auto* p = interior(data_))
    if (p->vertices().labels() != full_.labels())
      throw DimensionMismatch("interior data must live on the full simplex");
}

void BlendingOperators::check_I(const IndexSet& I) const {
  check_ordered(I, n_, "I");
  if (!I.increasing()) throw InvalidIndexSet("I must be increasing");
}

PolyForm BlendingOperators::zero_form(int degree) const { return PolyForm(full_, std::max(degree, 0)); }

const Polynomial& BlendingOperators::lambda_power(const IndexSet& I, int e) {
  const auto key = std::make_pair(I.mask(), e);
  auto it = lambda_cache_.find(key);
  if (it != lambda_cache_.end()) return it->second;
  Polynomial p = BaryPoly::lambda_sum(full_, I).chart().pow(static_cast<unsigned>(e));
  return lambda_cache_.emplace(key, std::move(p)).first->second;
}

PolyForm BlendingOperators::divide_by_lambda(const PolyForm& f, const IndexSet& I, int e,
                                             const IndexSet& J) {
  if (e == 0) return f;
  const Polynomial& q = lambda_power(I, e);
  try {
    return PolyForm(full_, f.chart().map_coefficients([&](const Polynomial& p) { return divide_exact(p, q); }));
  } catch (const NotDivisible&) {
    throw NotDivisible("lambda_I^" + std::to_string(e) + " does not divide the operator value for I = " +
                       I.to_string() + ", J = " + J.to_string());
  }
}

const PolyForm& BlendingOperators::r_sorted(const IndexSet& I, const IndexSet& J) {
  const Key key{I.mask(), J.mask()};
  auto it = r_cache_.find(key);
  if (it != r_cache_.end()) return it->second;
  const int s = J.size() - 1;
  if (s > k_) return r_cache_.emplace(key, zero_form(k_ - s)).first->second;

  const ProductForm pf = product_pullback(I, J, data_);
  const std::uint32_t fiber_bits = ((1u << s) - 1u) << n_;
  const Polynomial::Monomial fiber_bytes = [&] {
    Polynomial::Monomial m = 0;
    for (int a = 0; a < s; ++a) m |= Polynomial::unit(n_ + a) * 0xffu;
    return m;
  }();
  ChartForm out(n_, k_ - s);
  std::vector<int> exps(static_cast<std::size_t>(s));
  for (const auto& [mask, p] : pf.form.terms()) {
    if ((mask & fiber_bits) != fiber_bits) continue;
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
      for (int a = 0; a < s; ++a) exps[static_cast<std::size_t>(a)] = Polynomial::exponent(t.mono, n_ + a);
      terms.push_back({t.mono & ~fiber_bytes, t.coeff * simplex_monomial_integral(exps)});
    }
    out.add_term(mask & ~fiber_bits, Polynomial::from_terms(n_, std::move(terms)));
  }
  return r_cache_.emplace(key, PolyForm(full_, std::move(out))).first->second;
}

PolyForm BlendingOperators::r(const IndexSet& I, const IndexSet& J) {
  check_I(I);
  check_ordered(J, n_, "J");
  const auto [sorted, sign] = sort_with_sign(J);
  const PolyForm& v = r_sorted(I, sorted);
  return sign < 0 ? -v : v;
}

const PolyForm& BlendingOperators::r_div_sorted(const IndexSet& I, const IndexSet& J) {
  const Key key{I.mask(), J.mask()};
  auto it = r_div_cache_.find(key);
  if (it != r_div_cache_.end()) return it->second;
  PolyForm q = divide_by_lambda(r_sorted(I, J), I, J.size() - 1, J);
  return r_div_cache_.emplace(key, std::move(q)).first->second;
}

PolyForm BlendingOperators::r_div(const IndexSet& I, const IndexSet& J) {
  check_I(I);
  check_ordered(J, n_, "J");
  const auto [sorted, sign] = sort_with_sign(J);
  const PolyForm& v = r_div_sorted(I, sorted);
  return sign < 0 ? -v : v;
}

PolyForm BlendingOperators::delta_r(const IndexSet& I, const IndexSet& J) {
  check_I(I);
  check_ordered(J, n_, "J");
  if (J.size() < 2) throw InvalidIndexSet("(delta R)_J needs |J| >= 2");
  PolyForm out = zero_form(k_ - J.size() + 2);
  for (int i = 0; i < J.size(); ++i) {
    const PolyForm term = r(I, remove_at(J, i));
    if (i % 2)
      out -= term;
    else
      out += term;
  }
  return out;
}

const PolyForm& BlendingOperators::a_sorted(const IndexSet& I, const IndexSet& J) {
  const Key key{I.mask(), J.mask()};
  auto it = a_cache_.find(key);
  if (it != a_cache_.end()) return it->second;
  const int s = J.size() - 1;
  if (s > n_ - 1) throw InvalidIndexSet("A_{I,J} needs |J| <= n");
  PolyForm value = zero_form(k_ - s);
  if (s == 0) {
    value = r_sorted(I, J);
  } else if (s <= k_) {
    const Rational c = c_const(s, n_, k_);
    const IndexSet Jc = complement(J);
    for (int p : Jc)
      for (int i = 0; i <= s; ++i) {
        const PolyForm term = r(I, prepend(p, remove_at(J, i)));
        if (i % 2)
          value -= term;
        else
          value += term;
      }
    value *= c;
  }
  return a_cache_.emplace(key, std::move(value)).first->second;
}

PolyForm BlendingOperators::a(const IndexSet& I, const IndexSet& J) {
  check_I(I);
  check_ordered(J, n_, "J");
  if (!subset(J, I)) throw InvalidIndexSet("A_{I,J} needs J inside I");
  const auto [sorted, sign] = sort_with_sign(J);
  const PolyForm& v = a_sorted(I, sorted);
  return sign < 0 ? -v : v;
}

const PolyForm& BlendingOperators::a_div_sorted(const IndexSet& I, const IndexSet& J) {
  const Key key{I.mask(), J.mask()};
  auto it = a_div_cache_.find(key);
  if (it != a_div_cache_.end()) return it->second;
  PolyForm q = divide_by_lambda(a_sorted(I, J), I, J.size() - 1, J);
  return a_div_cache_.emplace(key, std::move(q)).first->second;
}

PolyForm BlendingOperators::a_div(const IndexSet& I, const IndexSet& J) {
  check_I(I);
  check_ordered(J, n_, "J");
  if (!subset(J, I)) throw InvalidIndexSet("A_{I,J} needs J inside I");
  const auto [sorted, sign] = sort_with_sign(J);
  const PolyForm& v = a_div_sorted(I, sorted);
  return sign < 0 ? -v : v;
}

PolyForm BlendingOperators::delta_a(const IndexSet& I, const IndexSet& J) {
  check_I(I);
  check_ordered(J, n_, "J");
  if (J.size() < 2) throw InvalidIndexSet("(delta A)_J needs |J| >= 2");
  if (!subset(J, I)) throw InvalidIndexSet("(delta A)_J needs J inside I");
  PolyForm out = zero_form(k_ - J.size() + 2);
  for (int i = 0; i < J.size(); ++i) {
    const PolyForm term = a(I, remove_at(J, i));
    if (i % 2)
      out -= term;
    else
      out += term;
  }
  return out;
}

PolyForm r_op(const IndexSet& I, const IndexSet& J, const FormData& u) { return BlendingOperators(u).r(I, J); }
PolyForm r_div(const IndexSet& I, const IndexSet& J, const FormData& u) {
  return BlendingOperators(u).r_div(I, J);
}
PolyForm delta_r(const IndexSet& I, const IndexSet& J, const FormData& u) {
  return BlendingOperators(u).delta_r(I, J);
}
PolyForm a_op(const IndexSet& I, const IndexSet& J, const FormData& u) { return BlendingOperators(u).a(I, J); }
PolyForm a_div(const IndexSet& I, const IndexSet& J, const FormData& u) {
  return BlendingOperators(u).a_div(I, J);
}
PolyForm delta_a(const IndexSet& I, const IndexSet& J, const FormData& u) {
  return BlendingOperators(u).delta_a(I, J);
}

}  // namespace cochain
