#include "cochain/polynomial.hpp"

#include "cochain/errors.hpp"

#include <algorithm>
#include <cassert>

namespace cochain {

namespace {

void check_same(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw DimensionMismatch("polynomials over " + std::to_string(a.nvars()) + " and " +
                            std::to_string(b.nvars()) + " variables");
}

// Sorts by monomial and merges equal monomials, dropping zeros.
void normalize(std::vector<Polynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Polynomial::Term& a, const Polynomial::Term& b) { return a.mono < b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
    if (c != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw DimensionMismatch("polynomial variable count " + std::to_string(nvars) +
                            " outside [0, 8]");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({0, c});
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw DimensionMismatch("variable index out of range");
  Polynomial p(nvars);
  p.terms_.push_back({unit(var), Rational(1)});
  return p;
}

Polynomial Polynomial::one_minus_sum(int nvars) {
  Polynomial p(nvars);
  for (int v = nvars - 1; v >= 0; --v) p.terms_.push_back({unit(v), Rational(-1)});
  p.terms_.insert(p.terms_.begin(), Term{0, Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  p.terms_ = std::move(terms);
  normalize(p.terms_);
  return p;
}

Polynomial::Monomial Polynomial::pack(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw DimensionMismatch("too many exponents");
  Monomial m = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent)
      throw DimensionMismatch("exponent out of range");
    m |= static_cast<Monomial>(exponents[i]) << (8 * (kMaxVars - 1 - static_cast<int>(i)));
  }
  return m;
}

int Polynomial::total_degree(Monomial m) {
  int d = 0;
  for (; m; m >>= 8) d += static_cast<int>(m & 0xffu);
  return d;
}

bool Polynomial::divides(Monomial a, Monomial b) {
  for (int v = 0; v < kMaxVars; ++v)
    if (exponent(a, v) > exponent(b, v)) return false;
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono == 0);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

Rational Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void Polynomial::add_scaled(const Polynomial& o, int sign) {
  check_same(*this, o);
  if (o.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      merged.push_back({b->mono, sign > 0 ? b->coeff : Rational(-b->coeff)});
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->coeff + b->coeff) : Rational(a->coeff - b->coeff);
      if (c != 0) merged.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_scaled(o, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  add_scaled(o, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  Polynomial r(a.nvars_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.terms_.push_back({x.mono + y.mono, x.coeff * y.coeff});
  normalize(r.terms_);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(nvars_);
  const Monomial u = unit(var);
  for (const auto& t : terms_) {
    const int e = exponent(t.mono, var);
    if (e == 0) continue;
    r.terms_.push_back({t.mono - u, t.coeff * e});
  }
  // Subtracting the same unit from distinct monomials keeps them distinct
  // and ordered.
  return r;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_)
    if (total_degree(t.mono) == degree) r.terms_.push_back(t);
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw DimensionMismatch("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < nvars_; ++i) {
      const int e = exponent(t.mono, i);
      for (int j = 0; j < e; ++j) v *= x[static_cast<std::size_t>(i)];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw DimensionMismatch("substitution needs one image per variable");
  int target = 0;
  if (!images.empty()) target = images.front().nvars();
  for (const auto& im : images) check_same(im, images.front());
  Polynomial result(target);
  if (terms_.empty()) return result;

  // Powers of each image, built lazily up to the largest exponent used.
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(nvars_));
  auto power = [&](int var, int e) -> const Polynomial& {
    auto& cache = powers[static_cast<std::size_t>(var)];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[static_cast<std::size_t>(var)]);
    return cache[static_cast<std::size_t>(e)];
  };

  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (int v = 0; v < nvars_ && !prod.is_zero(); ++v) {
      const int e = exponent(t.mono, v);
      if (e) prod = prod * power(v, e);
    }
    for (auto& term : prod.terms_) acc.push_back(std::move(term));
  }
  normalize(acc);
  result.terms_ = std::move(acc);
  return result;
}

Polynomial Polynomial::embed(int new_nvars, int offset) const {
  if (offset < 0 || offset + nvars_ > new_nvars)
    throw DimensionMismatch("embedding does not fit the target variable count");
  Polynomial r(new_nvars);
  r.terms_ = terms_;
  if (offset > 0)
    for (auto& t : r.terms_) t.mono >>= 8 * offset;
  // A uniform shift keeps lexicographic order.
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->coeff.get_str() + ")";
    for (int v = 0; v < nvars_; ++v) {
      const int e = exponent(it->mono, v);
      if (e == 0) continue;
      s += "*z" + std::to_string(v);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  check_same(p, q);
  if (q.is_zero()) throw NotDivisible("division by the zero polynomial");
  // Exact division in lexicographic order: when q | p the leading monomial of
  // q divides the leading monomial of every remaining dividend.
  const Polynomial::Term& lead = q.terms().back();
  Polynomial remainder = p;
  std::vector<Polynomial::Term> quotient;
  while (!remainder.is_zero()) {
    const Polynomial::Term& top = remainder.terms().back();
    if (!Polynomial::divides(lead.mono, top.mono))
      throw NotDivisible("exact division failed: " + q.to_string() + " does not divide " +
                         p.to_string());
    Polynomial::Term t{top.mono - lead.mono, top.coeff / lead.coeff};
    Polynomial step = Polynomial::from_terms(p.nvars(), {t});
    remainder -= step * q;
    quotient.push_back(std::move(t));
  }
  return Polynomial::from_terms(p.nvars(), std::move(quotient));
}

Rational simplex_monomial_integral(std::span<const int> exponents) {
  Integer num = 1;
  unsigned total = 0;
  for (int b : exponents) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned>(b));
    num *= f;
    total += static_cast<unsigned>(b);
  }
  Integer den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned>(exponents.size()) + total);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace cochain
