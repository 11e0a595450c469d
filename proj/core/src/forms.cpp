#include "cochain/forms.hpp"

#include "cochain/errors.hpp"

#include <bit>
#include <utility>

namespace cochain {

namespace {

void require_same_simplex(const IndexSet& a, const IndexSet& b) {
  if (a.labels() != b.labels())
    throw DimensionMismatch("forms live on different simplices " + a.to_string() + " and " +
                            b.to_string());
}

std::uint32_t lowest_bit(std::uint32_t m) { return m & (~m + 1u); }

}  // namespace

// ---------------------------------------------------------------------------
// ChartForm

ChartForm::ChartForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 0 || nvars > Polynomial::kMaxVars)
    throw DimensionMismatch("form variable count out of range");
  if (degree < 0) throw DegreeMismatch("negative form degree");
}

ChartForm ChartForm::scalar(const Polynomial& p) {
  ChartForm f(p.nvars(), 0);
  f.add_term(0, p);
  return f;
}

ChartForm ChartForm::differential(int nvars, int var) {
  ChartForm f(nvars, 1);
  f.add_term(1u << var, Polynomial::constant(nvars, 1));
  return f;
}

ChartForm ChartForm::gradient(const Polynomial& p) {
  ChartForm f(p.nvars(), 1);
  for (int v = 0; v < p.nvars(); ++v) f.add_term(1u << v, p.derivative(v));
  return f;
}

Polynomial ChartForm::coefficient(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Polynomial(nvars_) : it->second;
}

void ChartForm::add_term(std::uint32_t mask, const Polynomial& p) {
  if (p.is_zero()) return;
  if (std::popcount(mask) != degree_ || (mask >> nvars_) != 0)
    throw DegreeMismatch("term mask does not match the form degree");
  if (p.nvars() != nvars_) throw DimensionMismatch("coefficient has the wrong variable count");
  auto [it, inserted] = terms_.try_emplace(mask, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int ChartForm::coefficient_degree() const {
  int d = -1;
  for (const auto& [mask, p] : terms_) d = std::max(d, p.degree());
  return d;
}

ChartForm& ChartForm::operator+=(const ChartForm& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("adding forms on different spaces");
  if (o.degree_ != degree_) throw DegreeMismatch("adding forms of different degree");
  for (const auto& [mask, p] : o.terms_) add_term(mask, p);
  return *this;
}

ChartForm& ChartForm::operator-=(const ChartForm& o) {
  if (o.nvars_ != nvars_) throw DimensionMismatch("subtracting forms on different spaces");
  if (o.degree_ != degree_) throw DegreeMismatch("subtracting forms of different degree");
  for (const auto& [mask, p] : o.terms_) add_term(mask, -p);
  return *this;
}

ChartForm& ChartForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [mask, p] : terms_) p *= c;
  }
  return *this;
}

ChartForm& ChartForm::operator*=(const Polynomial& q) {
  Terms out;
  for (auto& [mask, p] : terms_) {
    Polynomial r = p * q;
    if (!r.is_zero()) out.emplace(mask, std::move(r));
  }
  terms_ = std::move(out);
  return *this;
}

std::string ChartForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mask, p] : terms_) {
    if (!s.empty()) s += " + ";
    s += "[" + p.to_string() + "]";
    for (int v = 0; v < nvars_; ++v)
      if (mask & (1u << v)) s += " dz" + std::to_string(v);
  }
  return s;
}

int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int swaps = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    const std::uint32_t bit = lowest_bit(rest);
    // Elements of a that sit after this element of b.
    swaps += std::popcount(a & ~(bit | (bit - 1u)));
  }
  return swaps % 2 ? -1 : 1;
}

ChartForm wedge(const ChartForm& u, const ChartForm& v) {
  if (u.nvars() != v.nvars()) throw DimensionMismatch("wedge of forms on different spaces");
  const int degree = u.degree() + v.degree();
  if (degree > u.nvars()) return ChartForm(u.nvars(), std::min(degree, u.nvars()));
  ChartForm r(u.nvars(), degree);
  for (const auto& [ma, pa] : u.terms())
    for (const auto& [mb, pb] : v.terms()) {
      const int sign = wedge_sign(ma, mb);
      if (sign == 0) continue;
      Polynomial prod = pa * pb;
      if (sign < 0) prod = -prod;
      r.add_term(ma | mb, prod);
    }
  return r;
}

ChartForm exterior_derivative(const ChartForm& u) {
  const int nv = u.nvars();
  if (u.degree() >= nv) return ChartForm(nv, u.degree() + 1);
  ChartForm r(nv, u.degree() + 1);
  for (const auto& [mask, p] : u.terms())
    for (int v = 0; v < nv; ++v) {
      if (mask & (1u << v)) continue;
      Polynomial dp = p.derivative(v);
      if (dp.is_zero()) continue;
      // dz_v moves past the elements of mask smaller than v.
      if (std::popcount(mask & ((1u << v) - 1u)) % 2) dp = -dp;
      r.add_term(mask | (1u << v), dp);
    }
  return r;
}

ChartForm contract(const ChartForm& u, std::span<const Polynomial> field) {
  if (u.degree() == 0) throw DegreeMismatch("cannot contract a 0-form");
  if (static_cast<int>(field.size()) != u.nvars())
    throw DimensionMismatch("vector field has the wrong number of components");
  ChartForm r(u.nvars(), u.degree() - 1);
  for (const auto& [mask, p] : u.terms()) {
    int position = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1, ++position) {
      const int var = std::countr_zero(rest);
      const Polynomial& w = field[static_cast<std::size_t>(var)];
      if (w.is_zero()) continue;
      Polynomial c = p * w;
      if (position % 2) c = -c;
      r.add_term(mask & ~(1u << var), c);
    }
  }
  return r;
}

ChartForm pullback(const ChartForm& u, std::span<const Polynomial> images) {
  if (static_cast<int>(images.size()) != u.nvars())
    throw DimensionMismatch("pullback needs one image per variable");
  int target = 0;
  if (!images.empty()) {
    target = images.front().nvars();
  } else {
    // A 0-dimensional source; only constants survive.
    ChartForm r(0, u.degree());
    if (u.degree() == 0) r.add_term(0, u.coefficient(0));
    return r;
  }
  const int degree = u.degree();
  if (degree > target) return ChartForm(target, degree);

  std::vector<ChartForm> dz;
  dz.reserve(images.size());
  for (const auto& im : images) dz.push_back(ChartForm::gradient(im));

  // Wedge products of the pulled back differentials, keyed by source mask.
  std::map<std::uint32_t, ChartForm> wedges;
  wedges.emplace(0u, ChartForm::scalar(Polynomial::constant(target, 1)));
  auto wedge_of = [&](auto&& self, std::uint32_t mask) -> const ChartForm& {
    auto it = wedges.find(mask);
    if (it != wedges.end()) return it->second;
    const int first = std::countr_zero(mask);
    ChartForm w = wedge(dz[static_cast<std::size_t>(first)], self(self, mask & (mask - 1)));
    return wedges.emplace(mask, std::move(w)).first->second;
  };

  ChartForm r(target, degree);
  for (const auto& [mask, p] : u.terms()) {
    const ChartForm& w = wedge_of(wedge_of, mask);
    if (w.is_zero()) continue;
    const Polynomial coeff = p.substitute(images);
    if (coeff.is_zero()) continue;
    r += w * coeff;
  }
  return r;
}

// ---------------------------------------------------------------------------
// TangentVector

TangentVector::TangentVector(IndexSet vertices, std::vector<Rational> coeffs)
    : vertices_(std::move(vertices)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != vertices_.size())
    throw DimensionMismatch("tangent vector needs one coefficient per vertex");
  Rational sum = 0;
  for (const auto& c : coeffs_) sum += c;
  if (sum != 0) throw OutOfDomain("tangent vector coefficients must sum to 0");
}

TangentVector TangentVector::edge(const IndexSet& vertices, int from, int to) {
  std::vector<Rational> c(static_cast<std::size_t>(vertices.size()), Rational(0));
  c[static_cast<std::size_t>(chart_index(vertices, to) + 1)] += 1;
  c[static_cast<std::size_t>(chart_index(vertices, from) + 1)] -= 1;
  return TangentVector(vertices, std::move(c));
}

const Rational& TangentVector::operator[](int label) const {
  return coeffs_[static_cast<std::size_t>(chart_index(vertices_, label) + 1)];
}

// ---------------------------------------------------------------------------
// PolyForm

PolyForm::PolyForm(IndexSet vertices, int k)
    : vertices_(std::move(vertices)), chart_(chart_size(vertices_), k) {}

PolyForm::PolyForm(IndexSet vertices, ChartForm chart)
    : vertices_(std::move(vertices)), chart_(std::move(chart)) {
  if (chart_.nvars() != chart_size(vertices_))
    throw DimensionMismatch("chart form does not match the simplex");
}

PolyForm PolyForm::scalar(const BaryPoly& p) {
  return PolyForm(p.vertices(), ChartForm::scalar(p.chart()));
}

PolyForm PolyForm::constant(const IndexSet& vertices, const Rational& c) {
  return scalar(BaryPoly::constant(vertices, c));
}

PolyForm PolyForm::lambda(const IndexSet& vertices, int label) {
  return scalar(BaryPoly::lambda(vertices, label));
}

PolyForm PolyForm::dlambda(const IndexSet& vertices, int label) {
  return PolyForm(vertices, ChartForm::gradient(chart_coordinate(vertices, label)));
}

BaryPoly PolyForm::component(const std::vector<int>& sigma) const {
  std::uint32_t mask = 0;
  for (int l : sigma) {
    const int idx = chart_index(vertices_, l);
    if (idx < 0) throw InvalidIndexSet("the anchor differential is not a stored component");
    mask |= 1u << idx;
  }
  return BaryPoly(vertices_, chart_.coefficient(mask));
}

std::optional<int> PolyForm::poly_degree() const {
  if (chart_.is_zero()) return std::nullopt;
  return chart_.coefficient_degree();
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  require_same_simplex(vertices_, o.vertices_);
  chart_ += o.chart_;
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  require_same_simplex(vertices_, o.vertices_);
  chart_ -= o.chart_;
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
  chart_ *= c;
  return *this;
}

std::string PolyForm::to_string() const {
  if (chart_.is_zero()) return "0";
  std::string s;
  const auto& labels = vertices_.labels();
  for (const auto& [mask, p] : chart_.terms()) {
    if (!s.empty()) s += " + ";
    std::string coeff;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      if (!coeff.empty()) coeff += " + ";
      coeff += it->coeff.get_str();
      for (int v = 0; v < p.nvars(); ++v) {
        const int e = Polynomial::exponent(it->mono, v);
        if (e == 0) continue;
        coeff += "*l" + std::to_string(labels[static_cast<std::size_t>(v + 1)]);
        if (e > 1) coeff += "^" + std::to_string(e);
      }
    }
    s += "(" + coeff + ")";
    for (int v = 0; v < p.nvars(); ++v)
      if (mask & (1u << v)) s += " dl" + std::to_string(labels[static_cast<std::size_t>(v + 1)]);
  }
  return s;
}

PolyForm wedge(const PolyForm& u, const PolyForm& v) {
  require_same_simplex(u.vertices(), v.vertices());
  return PolyForm(u.vertices(), wedge(u.chart(), v.chart()));
}

PolyForm multiply(const BaryPoly& p, const PolyForm& u) {
  require_same_simplex(p.vertices(), u.vertices());
  return PolyForm(u.vertices(), u.chart() * p.chart());
}

PolyForm exterior_derivative(const PolyForm& u) {
  return PolyForm(u.vertices(), exterior_derivative(u.chart()));
}

PolyForm contract(const PolyForm& u, const TangentVector& w) {
  require_same_simplex(u.vertices(), w.vertices());
  const int nv = chart_size(u.vertices());
  std::vector<Polynomial> field;
  for (int v = 0; v < nv; ++v)
    field.push_back(Polynomial::constant(nv, w.coeffs()[static_cast<std::size_t>(v + 1)]));
  return PolyForm(u.vertices(), contract(u.chart(), field));
}

PolyForm contract_koszul(const PolyForm& u, const RationalPoint& a) {
  require_same_simplex(u.vertices(), a.vertices());
  const int nv = chart_size(u.vertices());
  std::vector<Polynomial> field;
  for (int v = 0; v < nv; ++v)
    field.push_back(Polynomial::variable(nv, v) -
                    Polynomial::constant(nv, a.coords()[static_cast<std::size_t>(v + 1)]));
  return PolyForm(u.vertices(), contract(u.chart(), field));
}

PolyForm contract_koszul_anchor(const PolyForm& u) {
  const int nv = chart_size(u.vertices());
  std::vector<Polynomial> field;
  for (int v = 0; v < nv; ++v) field.push_back(Polynomial::variable(nv, v));
  return PolyForm(u.vertices(), contract(u.chart(), field));
}

PolyForm trace(const PolyForm& u, const IndexSet& face) {
  if (face.empty() || !face.increasing())
    throw InvalidIndexSet("trace needs a nonempty increasing face");
  for (int w : face)
    if (!u.vertices().contains(w))
      throw InvalidIndexSet("face " + face.to_string() + " is not contained in " +
                            u.vertices().to_string());
  const int nf = chart_size(face);
  std::vector<Polynomial> images;
  const auto& labels = u.vertices().labels();
  for (std::size_t i = 1; i < labels.size(); ++i)
    images.push_back(face.contains(labels[i]) ? chart_coordinate(face, labels[i])
                                              : Polynomial(nf));
  return PolyForm(face, pullback(u.chart(), images));
}

void validate(const AffineMap& g) {
  if (static_cast<int>(g.images.size()) != g.target.size())
    throw DimensionMismatch("affine map needs one image per target vertex");
  BaryPoly sum(g.source);
  for (const auto& im : g.images) {
    if (im.vertices().labels() != g.source.labels())
      throw DimensionMismatch("affine map image lives on the wrong simplex");
    if (im.degree().value_or(0) > 1) throw ParseError("affine map image has degree > 1");
    sum += im;
  }
  if (sum != BaryPoly::constant(g.source, 1))
    throw ParseError("affine map images do not sum to 1");
  for (const auto& im : g.images)
    for (int v : g.source)
      if (im.evaluate(RationalPoint::vertex(g.source, v)) < 0)
        throw OutOfDomain("affine map leaves the target simplex");
}

PolyForm pullback_affine(const AffineMap& g, const PolyForm& u) {
  validate(g);
  require_same_simplex(g.target, u.vertices());
  std::vector<Polynomial> images;
  for (std::size_t i = 1; i < g.images.size(); ++i) images.push_back(g.images[i].chart());
  if (images.empty()) {
    // Target is a point: only 0-forms survive and they are constants.
    ChartForm r(chart_size(g.source), u.degree());
    if (u.degree() == 0)
      r.add_term(0, Polynomial::constant(chart_size(g.source), u.chart().coefficient(0).constant_term()));
    return PolyForm(g.source, r);
  }
  return PolyForm(g.source, pullback(u.chart(), images));
}

PolyForm whitney(const IndexSet& vertices, const IndexSet& J) {
  if (J.empty()) throw InvalidIndexSet("Whitney form of the empty set");
  for (int j : J)
    if (!vertices.contains(j))
      throw InvalidIndexSet("Whitney index " + J.to_string() + " not in " + vertices.to_string());
  const int m = J.size() - 1;
  PolyForm result(vertices, m);
  for (int i = 0; i <= m; ++i) {
    PolyForm term = PolyForm::lambda(vertices, J[i]);
    for (int a = 0; a <= m; ++a)
      if (a != i) term = wedge(term, PolyForm::dlambda(vertices, J[a]));
    if (i % 2) term = -term;
    result += term;
  }
  return result;
}

PolyForm delta_whitney(const IndexSet& vertices, const IndexSet& J) {
  if (J.size() < 2) throw InvalidIndexSet("(delta phi)_J needs |J| >= 2");
  PolyForm result(vertices, J.size() - 2);
  for (int i = 0; i < J.size(); ++i) {
    PolyForm phi = whitney(vertices, remove_at(J, i));
    if (i % 2) phi = -phi;
    result += phi;
  }
  return result;
}

Rational integrate_over(const PolyForm& u, const IndexSet& J) {
  const int s = J.size() - 1;
  if (s < 0) throw InvalidIndexSet("integration over the empty simplex");
  if (u.degree() != s)
    throw DegreeMismatch("integrating a " + std::to_string(u.degree()) + "-form over a " +
                         std::to_string(s) + "-simplex");
  for (int j : J)
    if (!u.vertices().contains(j))
      throw InvalidIndexSet(J.to_string() + " is not a face of " + u.vertices().to_string());
  // Parameterize y(t) = sum_a t_a x_{j_a} with t_0 = 1 - sum_{a>=1} t_a.
  const auto& labels = u.vertices().labels();
  std::vector<Polynomial> images;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    Polynomial im(s);
    for (int a = 0; a <= s; ++a)
      if (J[a] == labels[i]) im = a == 0 ? Polynomial::one_minus_sum(s) : Polynomial::variable(s, a - 1);
    images.push_back(std::move(im));
  }
  Polynomial integrand(s);
  if (images.empty()) {
    integrand = Polynomial::constant(0, u.chart().coefficient(0).constant_term());
  } else {
    integrand = pullback(u.chart(), images).coefficient(s == 0 ? 0u : (1u << s) - 1u);
  }
  Rational total = 0;
  std::vector<int> exps(static_cast<std::size_t>(s));
  for (const auto& t : integrand.terms()) {
    for (int a = 0; a < s; ++a) exps[static_cast<std::size_t>(a)] = Polynomial::exponent(t.mono, a);
    total += t.coeff * simplex_monomial_integral(exps);
  }
  return total;
}

Rational determinant(std::vector<Rational> m, int size) {
  Rational det = 1;
  for (int c = 0; c < size; ++c) {
    int pivot = -1;
    for (int r = c; r < size; ++r)
      if (m[static_cast<std::size_t>(r * size + c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int k = 0; k < size; ++k)
        std::swap(m[static_cast<std::size_t>(pivot * size + k)], m[static_cast<std::size_t>(c * size + k)]);
      det = -det;
    }
    const Rational p = m[static_cast<std::size_t>(c * size + c)];
    det *= p;
    for (int r = c + 1; r < size; ++r) {
      const Rational f = m[static_cast<std::size_t>(r * size + c)] / p;
      if (f == 0) continue;
      for (int k = c; k < size; ++k)
        m[static_cast<std::size_t>(r * size + k)] -= f * m[static_cast<std::size_t>(c * size + k)];
    }
  }
  return det;
}

Rational form_eval(const PolyForm& u, const RationalPoint& x, std::span<const TangentVector> vs) {
  require_same_simplex(u.vertices(), x.vertices());
  const int k = u.degree();
  if (static_cast<int>(vs.size()) != k)
    throw DegreeMismatch("a " + std::to_string(k) + "-form needs " + std::to_string(k) + " vectors");
  if (!x.inside()) throw OutOfDomain("evaluation point is outside the simplex");
  for (const auto& v : vs) require_same_simplex(u.vertices(), v.vertices());
  const auto values = x.chart_values();
  Rational total = 0;
  for (const auto& [mask, p] : u.chart().terms()) {
    std::vector<Rational> m;
    m.reserve(static_cast<std::size_t>(k * k));
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int var = std::countr_zero(rest);
      for (const auto& v : vs) m.push_back(v.coeffs()[static_cast<std::size_t>(var + 1)]);
    }
    total += p.evaluate(values) * determinant(std::move(m), k);
  }
  return total;
}

}  // namespace cochain
