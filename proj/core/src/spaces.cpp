#include "cochain/spaces.hpp"

#include "cochain/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cochain {

namespace {

void check_parameters(int n, int r, int k, int min_r) {
  if (n < 1 || n > kMaxAmbientDim)
    throw InvalidIndexSet("dimension n = " + std::to_string(n) + " is out of range");
  if (k < 0 || k > n)
    throw InvalidIndexSet("form degree k = " + std::to_string(k) + " is out of range for n = " +
                          std::to_string(n));
  if (r < min_r) throw InvalidIndexSet("polynomial degree r = " + std::to_string(r) + " is too small");
}

void collect_monomials(int nvars, int var, int remaining, std::vector<int>& exps,
                       std::vector<Polynomial::Monomial>& out) {
  if (var == nvars - 1) {
    exps[static_cast<std::size_t>(var)] = remaining;
    out.push_back(Polynomial::pack(exps));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(var)] = e;
    collect_monomials(nvars, var + 1, remaining - e, exps, out);
  }
}

// Homogeneous forms of degree d, ordered by mask then monomial.
std::vector<PolyForm> homogeneous_forms(const IndexSet& v, int d, int k) {
  const int nv = chart_size(v);
  std::vector<PolyForm> out;
  for (std::uint32_t mask : masks_of_size(nv, k))
    for (auto mono : monomials_of_degree(nv, d)) {
      ChartForm f(nv, k);
      f.add_term(mask, Polynomial::from_terms(nv, {{mono, Rational(1)}}));
      out.emplace_back(v, std::move(f));
    }
  return out;
}

void scale_to_integers(std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  Integer g = 0;
  for (auto& x : v) {
    x *= l;
    g = gcd(g, Integer(x.get_num()));
  }
  if (g > 1)
    for (auto& x : v) x /= g;
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::full ? "full" : "trimmed"; }

Family parse_family(std::string_view s) {
  if (s == "full") return Family::full;
  if (s == "trimmed") return Family::trimmed;
  throw ParseError("unknown family '" + std::string(s) + "'");
}

std::vector<Polynomial::Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Polynomial::Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.push_back(0);
    return out;
  }
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  collect_monomials(nvars, 0, d, exps, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> masks_of_size(int nvars, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > nvars) return out;
  for (std::uint32_t m = 0; m < (1u << nvars); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  // Lexicographic on the element lists: compare reversed bit patterns.
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    while (a && b) {
      const int la = std::countr_zero(a), lb = std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  });
  return out;
}

std::vector<PolyForm> basis_full(int n, int r, int k) {
  check_parameters(n, r, k, 0);
  const IndexSet v = IndexSet::full(n);
  std::vector<PolyForm> out;
  for (int d = 0; d <= r; ++d)
    for (auto& f : homogeneous_forms(v, d, k)) out.push_back(std::move(f));
  return out;
}

std::vector<PolyForm> basis_trimmed(int n, int r, int k) {
  check_parameters(n, r, k, 1);
  if (k == 0) return basis_full(n, r, 0);
  std::vector<PolyForm> out = basis_full(n, r - 1, k);
  // Top-degree part: homogeneous degree-r forms annihilated by the Koszul
  // contraction, since lower-degree parts never leave P_r after contraction.
  const auto top = homogeneous_forms(IndexSet::full(n), r, k);
  std::vector<SparseVector> images;
  images.reserve(top.size());
  for (const auto& f : top) images.push_back(to_vector(contract_koszul_anchor(f)));
  for (auto coeffs : nullspace(images)) {
    scale_to_integers(coeffs);
    PolyForm u(IndexSet::full(n), k);
    for (std::size_t i = 0; i < top.size(); ++i)
      if (coeffs[i] != 0) u += top[i] * coeffs[i];
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<PolyForm> basis(int n, int r, int k, Family family) {
  return family == Family::full ? basis_full(n, r, k) : basis_trimmed(n, r, k);
}

Integer dim_full(int n, int r, int k) {
  check_parameters(n, r, k, 0);
  return binomial(static_cast<unsigned>(n + r), static_cast<unsigned>(n)) *
         binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

Integer dim_trimmed(int n, int r, int k) {
  check_parameters(n, r, k, 1);
  return binomial(static_cast<unsigned>(r + k - 1), static_cast<unsigned>(k)) *
         binomial(static_cast<unsigned>(n + r), static_cast<unsigned>(n - k));
}

bool in_full(const PolyForm& u, int r) { return u.poly_degree().value_or(0) <= r; }

bool in_trimmed(const PolyForm& u, int r) {
  if (!in_full(u, r)) return false;
  if (u.degree() == 0) return true;
  return in_full(contract_koszul_anchor(u), r);
}

bool membership(const PolyForm& u, Family family, int r) {
  return family == Family::full ? in_full(u, r) : in_trimmed(u, r);
}

void append_vector(SparseVector& out, const PolyForm& u, int piece) {
  for (const auto& [mask, p] : u.chart().terms())
    for (const auto& t : p.terms()) out.emplace(CoordKey{piece, mask, t.mono}, t.coeff);
}

SparseVector to_vector(const PolyForm& u, int piece) {
  SparseVector v;
  append_vector(v, u, piece);
  return v;
}

}  // namespace cochain
