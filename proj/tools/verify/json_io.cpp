#include "json_io.hpp"

#include "cochain/errors.hpp"

#include <optional>

namespace cochain::io {

namespace {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed integer '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError("expected an integer");
}

json index_set_to_json(const IndexSet& J) { return J.labels(); }

json form_to_json(const PolyForm& u) {
  const IndexSet& v = u.vertices();
  json terms = json::array();
  for (const auto& [mask, p] : u.chart().terms()) {
    json sigma = json::array();
    for (int var = 0; var + 1 < v.size(); ++var)
      if (mask & (1u << var)) sigma.push_back(v[var + 1]);
    json poly = json::array();
    for (const auto& mono : to_symmetric(BaryPoly(v, p)))
      poly.push_back({{"alpha", mono.alpha},
                      {"num", integer_to_json(mono.coeff.get_num())},
                      {"den", integer_to_json(mono.coeff.get_den())}});
    terms.push_back({{"dlambda", std::move(sigma)}, {"poly", std::move(poly)}});
  }
  return {{"n", v.ambient_n()}, {"vertices", v.labels()}, {"k", u.degree()}, {"terms", std::move(terms)}};
}

PolyForm form_from_json(const json& j) {
  const int n = get_field<int>(j, "n");
  const int k = get_field<int>(j, "k");
  if (n < 1 || n > kMaxAmbientDim) throw ParseError("form dimension n out of range");
  IndexSet v = IndexSet::full(n);
  if (j.contains("vertices")) {
    try {
      v = IndexSet(n, get_field<std::vector<int>>(j, "vertices"));
    } catch (const InvalidIndexSet& e) {
      throw ParseError(std::string("bad vertex list: ") + e.what());
    }
    if (v.empty() || !v.increasing()) throw ParseError("vertex list must be nonempty and increasing");
  }
  const int nv = chart_size(v);
  if (k < 0 || k > nv) throw ParseError("form degree k out of range");
  ChartForm chart(nv, k);
  const json terms = j.contains("terms") ? j.at("terms") : json::array();
  if (!terms.is_array()) throw ParseError("'terms' must be an array");
  for (const auto& term : terms) {
    const auto sigma = get_field<std::vector<int>>(term, "dlambda");
    if (static_cast<int>(sigma.size()) != k) throw ParseError("dlambda list must have k labels");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (i > 0 && sigma[i] <= sigma[i - 1]) throw ParseError("dlambda labels must be increasing");
      if (!v.contains(sigma[i])) throw ParseError("dlambda label " + std::to_string(sigma[i]) + " is not a vertex");
      if (sigma[i] == anchor_of(v)) throw ParseError("dlambda must omit the anchor label");
      mask |= 1u << chart_index(v, sigma[i]);
    }
    const json poly = term.contains("poly") ? term.at("poly") : json::array();
    if (!poly.is_array()) throw ParseError("'poly' must be an array");
    std::vector<SymmetricMonomial> monomials;
    for (const auto& m : poly) {
      const Integer num = integer_from_json(m.contains("num") ? m.at("num") : json());
      const Integer den = m.contains("den") ? integer_from_json(m.at("den")) : Integer(1);
      if (den == 0) throw ParseError("zero denominator");
      Rational c(num, den);
      c.canonicalize();
      monomials.push_back({get_field<std::vector<int>>(m, "alpha"), c});
    }
    chart.add_term(mask, poly_from_symmetric(v, monomials).chart());
  }
  return PolyForm(v, std::move(chart));
}

json boundary_to_json(const BoundaryForm& b) {
  json facets = json::array();
  for (int i = 0; i <= b.n(); ++i) facets.push_back({{"omit", i}, {"form", form_to_json(b.facet(i))}});
  return {{"n", b.n()}, {"k", b.degree()}, {"facets", std::move(facets)}};
}

BoundaryForm boundary_from_json(const json& j) {
  const int n = get_field<int>(j, "n");
  const int k = get_field<int>(j, "k");
  if (n < 1 || n > kMaxAmbientDim) throw ParseError("boundary dimension n out of range");
  if (k < 0 || k > n - 1) throw ParseError("boundary form degree must satisfy 0 <= k <= n-1");
  const json facets = j.contains("facets") ? j.at("facets") : json();
  if (!facets.is_array()) throw ParseError("'facets' must be an array");
  std::vector<std::optional<PolyForm>> forms(static_cast<std::size_t>(n + 1));
  for (const auto& f : facets) {
    const int omit = get_field<int>(f, "omit");
    if (omit < 0 || omit > n) throw ParseError("facet 'omit' label out of range");
    if (forms[static_cast<std::size_t>(omit)]) throw ParseError("facet " + std::to_string(omit) + " given twice");
    if (!f.contains("form")) throw ParseError("facet entry without 'form'");
    json form = f.at("form");
    if (form.is_object() && !form.contains("vertices")) form["vertices"] = facet_vertices(n, omit).labels();
    PolyForm u = form_from_json(form);
    if (u.vertices().labels() != facet_vertices(n, omit).labels())
      throw ParseError("facet form " + std::to_string(omit) + " lives on the wrong face");
    if (u.degree() != k) throw ParseError("facet form " + std::to_string(omit) + " has the wrong degree");
    forms[static_cast<std::size_t>(omit)] = std::move(u);
  }
  std::vector<PolyForm> list;
  for (int i = 0; i <= n; ++i) {
    if (!forms[static_cast<std::size_t>(i)]) throw ParseError("facet " + std::to_string(i) + " is missing");
    list.push_back(std::move(*forms[static_cast<std::size_t>(i)]));
  }
  BoundaryForm b(n, k, std::move(list));
  require_compatible(b);
  return b;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace cochain::io
