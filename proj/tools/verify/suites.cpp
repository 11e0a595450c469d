#include "suites.hpp"

#include "json_io.hpp"
#include "sampling.hpp"

#include "cochain/blending.hpp"
#include "cochain/errors.hpp"
#include "cochain/extension.hpp"
#include "cochain/oracle.hpp"
#include "cochain/poincare.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <span>

namespace cochain::verify {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

struct Case {
  int n;
  int r;
  int k;
  Family family;
};

json case_json(const Case& c) {
  return {{"n", c.n}, {"r", c.r}, {"k", c.k}, {"family", std::string(to_string(c.family))}};
}

bool within_envelope(int n, int r) { return (n <= 2 && r <= 3) || (n == 3 && r <= 2); }

std::vector<int> k_values(const SuiteConfig& config, int n) {
  std::vector<int> out;
  for (int k = 0; k <= n - 1; ++k)
    if (config.k_values.empty() || std::count(config.k_values.begin(), config.k_values.end(), k)) out.push_back(k);
  return out;
}

void for_each_case(const SuiteConfig& config, const std::function<void(const Case&)>& fn) {
  for (int n : config.n_values)
    for (int r : config.r_values)
      for (int k : k_values(config, n))
        for (Family f : config.families) fn(Case{n, r, k, f});
}

void for_each_nr(const SuiteConfig& config, const std::function<void(int, int)>& fn) {
  for (int n : config.n_values)
    for (int r : config.r_values) fn(n, r);
}

std::vector<IndexSet> all_index_sets(int n) {
  std::vector<IndexSet> out;
  for (int m = 0; m <= n; ++m)
    for (auto& I : enumerate_gamma(n, m)) out.push_back(std::move(I));
  return out;
}

bool meets_complement(const IndexSet& I, const IndexSet& J) { return (I.mask() & ~J.mask()) != 0; }

json element_payload(const Case& c, std::size_t index, const BoundaryForm& b) {
  json p = case_json(c);
  p["element"] = index;
  p["input"] = io::boundary_to_json(b);
  return p;
}

json element_payload(const Case& c, std::size_t index, const PolyForm& u) {
  json p = case_json(c);
  p["element"] = index;
  p["input"] = io::form_to_json(u);
  return p;
}

json with_sets(json p, const IndexSet& I, const IndexSet& J) {
  p["I"] = I.labels();
  p["J"] = J.labels();
  return p;
}

// Runs body, recording a failure with the error text if it throws.
template <class Body>
void guarded(CheckResult& check, const json& payload, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    json p = payload;
    p["error"] = e.what();
    check.record(false, p);
  }
}

PolyForm zero_form(int n, int degree) { return PolyForm(IndexSet::full(n), std::max(degree, 0)); }

// ---------------------------------------------------------------------------

void suite_trace(const SuiteConfig& config, SuiteResult& out) {
  auto& ext = out.check("extension");
  for_each_case(config, [&](const Case& c) {
    const auto bases = boundary_basis(c.n, c.r, c.k, c.family);
    for (std::size_t e = 0; e < bases.size(); ++e) {
      const json payload = element_payload(c, e, bases[e]);
      guarded(ext, payload, [&] { ext.record(boundary_trace(extend(bases[e])) == bases[e], payload); });
    }
  });
}

void suite_cochain(const SuiteConfig& config, SuiteResult& out) {
  auto& chk = out.check("commutes-with-d");
  for_each_case(config, [&](const Case& c) {
    if (c.k > c.n - 2) return;
    const auto bases = boundary_basis(c.n, c.r, c.k, c.family);
    for (std::size_t e = 0; e < bases.size(); ++e) {
      const json payload = element_payload(c, e, bases[e]);
      guarded(chk, payload, [&] {
        chk.record(exterior_derivative(extend(bases[e])) == extend(exterior_derivative(bases[e])), payload);
      });
    }
  });
}

void suite_preserve(const SuiteConfig& config, SuiteResult& out) {
  auto& whole = out.check("extension-membership");
  auto& parts = out.check("component-membership");
  for_each_case(config, [&](const Case& c) {
    const auto bases = boundary_basis(c.n, c.r, c.k, c.family);
    for (std::size_t e = 0; e < bases.size(); ++e) {
      const json payload = element_payload(c, e, bases[e]);
      guarded(whole, payload, [&] {
        Extender ext(bases[e]);
        whole.record(membership(ext.extend(), c.family, c.r), payload);
        for (int m = 1; m <= c.n; ++m)
          for (const auto& I : enumerate_gamma(c.n, m)) {
            json p = payload;
            p["I"] = I.labels();
            parts.record(membership(ext.component(I), c.family, c.r), p);
          }
      });
    }
  });
}

void suite_rops(const SuiteConfig& config, SuiteResult& out) {
  auto& commuting = out.check("commuting-differential");
  auto& trace_chk = out.check("trace-consistency");
  auto& antisym = out.check("antisymmetry");
  auto& depends = out.check("depends-only-on-trace");
  auto& proj = out.check("projection-agreement");
  auto& divis = out.check("divisibility-and-degree");
  auto& top = out.check("top-degree-vanishing");

  for_each_case(config, [&](const Case& c) {
    const int n = c.n, k = c.k;
    const auto sets = all_index_sets(n);
    const auto interior = basis(n, c.r, k, c.family);
    for (std::size_t e = 0; e < interior.size(); ++e) {
      const PolyForm& u = interior[e];
      const json payload = element_payload(c, e, u);
      guarded(commuting, payload, [&] {
        BlendingOperators ops(u);
        BlendingOperators dops(exterior_derivative(u));
        BlendingOperators bops(boundary_trace(u));
        for (const auto& I : sets)
          for (const auto& J : sets) {
            const int s = J.size() - 1;
            if (s > k + 1) continue;
            PolyForm lhs = s <= k ? exterior_derivative(ops.r(I, J)) : zero_form(n, k - s + 1);
            PolyForm rhs = dops.r(I, J);
            if (s >= 1) {
              const PolyForm dr = ops.delta_r(I, J);
              rhs += (k - s) % 2 ? -dr : dr;
            }
            commuting.record(lhs == rhs, with_sets(payload, I, J));
            if (s > k) continue;

            std::vector<int> reversed(J.labels().rbegin(), J.labels().rend());
            const IndexSet Jr(n, reversed);
            const PolyForm rr = ops.r(I, Jr);
            antisym.record(rr == (permutation_sign(reversed) < 0 ? -ops.r(I, J) : ops.r(I, J)), with_sets(payload, I, J));

            for (int j = 0; j <= n; ++j) {
              if (I.contains(j)) continue;
              const IndexSet face = facet_vertices(n, j);
              json p = with_sets(payload, I, J);
              p["j"] = j;
              trace_chk.record(trace(ops.r(I, J), face) == trace(ops.r(insert_sorted(I, j), J), face), p);
            }
            if (meets_complement(I, J)) depends.record(bops.r(I, J) == ops.r(I, J), with_sets(payload, I, J));
          }
      });
    }

    const auto bases = boundary_basis(n, c.r, k, c.family);
    for (std::size_t e = 0; e < bases.size(); ++e) {
      const json payload = element_payload(c, e, bases[e]);
      BlendingOperators ops(bases[e]);
      for (const auto& I : sets) {
        for (int j = 0; j <= n; ++j) {
          if (I.size() == 1 && I[0] == j) continue;
          json p = payload;
          p["I"] = I.labels();
          p["j"] = j;
          guarded(proj, p, [&] { proj.record(ops.r(I, IndexSet(n, {j})) == proj_pullback(I, j, bases[e]), p); });
        }
        for (const auto& J : sets) {
          const int s = J.size() - 1;
          if (s > k || !meets_complement(I, J)) continue;
          const json p = with_sets(payload, I, J);
          guarded(divis, p, [&] { divis.record(membership(ops.r_div(I, J), c.family, c.r), p); });
        }
      }
    }
  });

  // R^n vanishes whenever the range of F_I lies in the boundary.
  for (int n : config.n_values)
    for (int r : config.r_values) {
      const auto forms = basis_full(n, r, n);
      const auto sets = all_index_sets(n);
      for (std::size_t e = 0; e < forms.size(); ++e) {
        BlendingOperators ops(forms[e]);
        const json payload = element_payload(Case{n, r, n, Family::full}, e, forms[e]);
        for (const auto& I : sets)
          for (const auto& J : sets)
            if (meets_complement(I, J)) top.record(ops.r(I, J).is_zero(), with_sets(payload, I, J));
      }
    }
}

void suite_aops(const SuiteConfig& config, SuiteResult& out) {
  auto& commute = out.check("a-commute");
  auto& delta = out.check("delta-a");
  auto& trace_chk = out.check("trace-consistency");
  auto& divis = out.check("divisibility-and-degree");
  auto& oneform = out.check("one-form-formula");
  auto& crel = out.check("constant-relations");

  for_each_case(config, [&](const Case& c) {
    const int n = c.n, k = c.k;
    const auto bases = boundary_basis(n, c.r, k, c.family);
    for (std::size_t e = 0; e < bases.size(); ++e) {
      const json payload = element_payload(c, e, bases[e]);
      guarded(commute, payload, [&] {
        BlendingOperators ops(bases[e]);
        BlendingOperators dops(k + 1 <= n - 1 ? exterior_derivative(bases[e]) : BoundaryForm(n, n));
        for (int m = 1; m <= n; ++m)
          for (const auto& I : enumerate_gamma(n, m))
            for (int s = 0; s <= std::min({k + 1, n - 1, m}); ++s)
              for (const auto& J : enumerate_gamma_sub(I, s)) {
                const json p = with_sets(payload, I, J);
                PolyForm rhs = s <= k ? exterior_derivative(ops.a(I, J)) : zero_form(n, k - s + 1);
                if (s % 2) rhs = -rhs;
                if (s >= 1) rhs += ops.delta_a(I, J) * Rational(s);
                commute.record(dops.a(I, J) == rhs, p);

                if (s >= 1)
                  delta.record(ops.delta_a(I, J) == ops.delta_r(I, J) * Rational(-s * c_const(s - 1, n, k)), p);

                if (s <= k) {
                  divis.record(membership(ops.a_div(I, J), c.family, c.r), p);
                  for (int j = 0; j <= n; ++j) {
                    if (I.contains(j)) continue;
                    const IndexSet face = facet_vertices(n, j);
                    json pj = p;
                    pj["j"] = j;
                    trace_chk.record(trace(ops.a(I, J), face) == trace(ops.a(insert_sorted(I, j), J), face), pj);
                  }
                }

                if (k == 1 && s == 1 && n >= 2) {
                  PolyForm sum = zero_form(n, 0);
                  for (int q = 0; q <= n; ++q) {
                    if (J.contains(q)) continue;
                    sum += ops.r(I, IndexSet(n, {q, J[1]}));
                    sum -= ops.r(I, IndexSet(n, {q, J[0]}));
                  }
                  oneform.record(ops.a(I, J) == sum * Rational(1, n - 1), p);
                }
              }
        // Alternation in J.
        for (int m = 1; m <= n; ++m)
          for (const auto& I : enumerate_gamma(n, m))
            for (int s = 1; s <= std::min({k, n - 1, m}); ++s)
              for (const auto& J : enumerate_gamma_sub(I, s)) {
                std::vector<int> reversed(J.labels().rbegin(), J.labels().rend());
                const PolyForm ar = ops.a(I, IndexSet(n, reversed));
                const PolyForm a = ops.a(I, J);
                commute.record(ar == (permutation_sign(reversed) < 0 ? -a : a), with_sets(payload, I, J));
              }
      });
    }
  });

  for (int n = 2; n <= 6; ++n)
    for (int s = 1; s <= n - 1; ++s)
      for (int k = 0; k <= 6; ++k) {
        const json p = {{"n", n}, {"s", s}, {"k", k}};
        const Rational sign_s = s % 2 ? -1 : 1;
        const Rational sign_k = k % 2 ? -1 : 1;
        crel.record(c_const(s, n, k + 1) / c_const(s, n, k) == sign_s, p);
        crel.record(c_const(s, n, k) / c_const(s - 1, n, k) == Rational(sign_k * s * s / (n - s)), p);
      }
}

void suite_identities(const SuiteConfig& config, SuiteResult& out) {
  auto& dphi = out.check("whitney-quotient-derivative");
  auto& blend = out.check("blending-derivative-identity");
  auto& closed = out.check("closed-form-agreement");
  auto& closed_top = out.check("closed-form-top-degree", false);
  auto& dims = out.check("space-dimensions");
  auto& whitney_dim = out.check("whitney-dimension");

  for (int n : config.n_values) {
    const IndexSet full = IndexSet::full(n);
    for (int m = 0; m <= n; ++m)
      for (const auto& I : enumerate_gamma(n, m)) {
        const PolyForm lam = PolyForm::scalar(BaryPoly::lambda_sum(full, I));
        const PolyForm dlam = exterior_derivative(lam);
        for (int s = 0; s <= std::min(m, n - 1); ++s)
          for (const auto& J : enumerate_gamma_sub(I, s)) {
            const PolyForm phi = whitney(full, J);
            const PolyForm lhs = wedge(lam, exterior_derivative(phi)) - wedge(dlam, phi) * Rational(s + 1);
            PolyForm rhs(full, s + 1);
            for (int i : I)
              if (!J.contains(i)) rhs += whitney(full, prepend(i, J));
            dphi.record(lhs == rhs * Rational(s + 1), {{"n", n}, {"I", I.labels()}, {"J", J.labels()}});
          }
      }
    for (int k = 0; k <= n; ++k) {
      const auto b = basis_trimmed(n, 1, k);
      bool spans = Integer(static_cast<unsigned long>(b.size())) == binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k + 1));
      EchelonBasis echelon;
      for (const auto& u : b) spans = echelon.insert(to_vector(u)) && spans;
      for (const auto& J : enumerate_gamma(n, k)) spans = spans && echelon.in_span(to_vector(whitney(full, J)));
      whitney_dim.record(spans, {{"n", n}, {"k", k}, {"dim", b.size()}});
    }
  }

  for_each_case(config, [&](const Case& c) {
    const int n = c.n, k = c.k;
    const IndexSet full = IndexSet::full(n);
    dims.record(Integer(static_cast<unsigned long>(basis(n, c.r, k, c.family).size())) ==
                    (c.family == Family::full ? dim_full(n, c.r, k) : dim_trimmed(n, c.r, k)),
                case_json(c));
    const auto bases = boundary_basis(n, c.r, k, c.family);
    for (std::size_t e = 0; e < bases.size(); ++e) {
      const json payload = element_payload(c, e, bases[e]);
      guarded(blend, payload, [&] {
        Extender ext(bases[e]);
        BlendingOperators& ops = ext.ops();
        for (int m = 1; m <= n; ++m)
          for (const auto& I : enumerate_gamma(n, m)) {
            const PolyForm lam = PolyForm::scalar(BaryPoly::lambda_sum(full, I));
            const PolyForm dlam = exterior_derivative(lam);
            for (int s = 1; s <= std::min(m, n - 1); ++s) {
              PolyForm lhs(full, k), rhs(full, k);
              if (s <= k) {
                for (const auto& J : enumerate_gamma_sub(I, s)) {
                  const PolyForm dp = delta_whitney(full, J);
                  const PolyForm a = ops.a(I, J);
                  lhs += wedge(wedge(lam, exterior_derivative(dp)) - wedge(dlam, dp) * Rational(s), a);
                  rhs += wedge(whitney(full, J), a) * Rational((m + 1) * s);
                }
              }
              if (s + 1 <= m && s <= k)
                for (const auto& J : enumerate_gamma_sub(I, s + 1))
                  lhs += wedge(delta_whitney(full, J), ops.delta_a(I, J)) * Rational(s);
              json p = payload;
              p["I"] = I.labels();
              p["s"] = s;
              blend.record(lhs == rhs, p);
            }
            json p = payload;
            p["I"] = I.labels();
            if (k <= n - 2)
              closed.record(ext.component(I) == ext.component_closed(I), p);
            else
              closed_top.record(ext.component(I) == ext.component_closed(I), p);
          }
      });
    }
  });
}

void suite_homotopy(const SuiteConfig& config, SuiteResult& out) {
  auto& complex_id = out.check("complex-identity");
  auto& complex_bc = out.check("complex-boundary-identity");
  auto& top_bc = out.check("top-degree-boundary-identity", false);
  auto& base_points = out.check("base-point-independence");
  auto& mapping = out.check("mapping-degrees");
  auto& bc_trace = out.check("boundary-operator-zero-trace");
  auto& bc_mapping = out.check("boundary-operator-mapping");
  auto& skipped = out.check("inadmissible-patterns", false);

  for_each_nr(config, [&](int n, int r) {
    const IndexSet full = IndexSet::full(n);
    const RationalPoint center = RationalPoint::barycenter(full);
    for (const auto& pattern : complex_patterns(n)) {
      json pj = {{"n", n}, {"r", r}, {"pattern", json::array()}};
      for (Family f : pattern) pj["pattern"].push_back(std::string(to_string(f)));
      ComplexReport rep;
      try {
        rep = verify_complex(n, r, pattern, center);
      } catch (const InvalidIndexSet&) {
        skipped.findings["patterns"].push_back(pj["pattern"]);
        continue;
      }
      for (const auto& d : rep.homotopy) {
        complex_id.passed += d.passes;
        for (const auto& f : d.failures) {
          json p = pj;
          p["failure"] = f;
          complex_id.record(false, p);
        }
      }
      for (const auto& d : rep.boundary_homotopy) {
        complex_bc.passed += d.passes;
        for (const auto& f : d.failures) {
          json p = pj;
          p["failure"] = f;
          complex_bc.record(false, p);
        }
      }
      top_bc.passed += rep.top_bc_holds;
      top_bc.failed += rep.top_bc_dim - rep.top_bc_holds;
      json& f = top_bc.findings;
      f["cases"].push_back({{"n", n}, {"r", r}, {"pattern", pj["pattern"]}, {"dim", rep.top_bc_dim}, {"holds", rep.top_bc_holds}});
    }

    const auto points = interior_points(n, 3, case_seed(config.seed, {0x686f6d, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)}));
    for (Family fam : config.families)
      for (int k = 0; k <= n; ++k) {
        if (fam == Family::trimmed && r < 1) continue;
        const auto forms = basis(n, r, k, fam);
        const Case c{n, r, k, fam};
        for (std::size_t e = 0; e < forms.size(); ++e) {
          const PolyForm& u = forms[e];
          const json payload = element_payload(c, e, u);
          for (const auto& a : points) {
            PolyForm rebuilt = k == 0 ? PolyForm::constant(full, u.component({}).evaluate(a))
                                      : exterior_derivative(poincare(u, a));
            if (k < n) rebuilt += poincare(exterior_derivative(u), a);
            base_points.record(rebuilt == u, payload);
          }
          if (k >= 1) {
            const PolyForm q = poincare(u, center);
            mapping.record(fam == Family::full ? in_trimmed(q, r + 1) : in_full(q, r), payload);
            guarded(bc_trace, payload, [&] { bc_trace.record(boundary_trace(poincare_bc(u, center)).is_zero(), payload); });
          }
        }
        if (k >= 1) {
          const auto zero_trace = vanishing_trace_basis(n, r, k, fam);
          for (std::size_t e = 0; e < zero_trace.size(); ++e) {
            const json payload = element_payload(c, e, zero_trace[e]);
            guarded(bc_mapping, payload, [&] {
              const PolyForm q = poincare_bc(zero_trace[e], center);
              const bool in_space = fam == Family::full ? in_trimmed(q, r + 1) : in_full(q, r);
              bc_mapping.record(in_space && boundary_trace(q).is_zero(), payload);
            });
          }
        }
      }
  });
}

void suite_toplevel(const SuiteConfig& config, SuiteResult& out) {
  auto& stokes = out.check("stokes-agreement", false);
  auto& zero = out.check("d-extension-vanishes", false);
  auto& volume = out.check("d-extension-is-volume-multiple", false);
  for (int n : config.n_values)
    for (int r : config.r_values)
      for (Family f : config.families) {
        const Case c{n, r, n - 1, f};
        const auto bases = boundary_basis(n, r, n - 1, f);
        for (std::size_t e = 0; e < bases.size(); ++e) {
          const json payload = element_payload(c, e, bases[e]);
          guarded(stokes, payload, [&] {
            const TopDiagnostic diag = d_top_diagnostic(bases[e]);
            json p = payload;
            p["volume_integral"] = to_fraction_string(diag.volume_integral);
            p["boundary_integral"] = to_fraction_string(diag.boundary_integral);
            stokes.record(diag.volume_integral == diag.boundary_integral, p);
            zero.record(diag.d_is_zero, p);
            volume.record(diag.matches_volume_form, p);
          });
        }
      }
}

void suite_oracle(const SuiteConfig& config, SuiteResult& out) {
  auto& agree = out.check("representation-agreement");
  auto& rpoint = out.check("r-pointwise");
  auto& ladder = out.check("ladder-agreement");
  auto& endpoint = out.check("ladder-endpoint");
  for_each_case(config, [&](const Case& c) {
    const int n = c.n, k = c.k;
    const auto bases = boundary_basis(n, c.r, k, c.family);
    const auto sets = all_index_sets(n);
    for (std::size_t e = 0; e < bases.size(); ++e) {
      const json payload = element_payload(c, e, bases[e]);
      const std::uint64_t seed = case_seed(config.seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(c.r),
                                                         static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(c.family), e});
      std::mt19937_64 rng(seed);
      const auto points = interior_points(n, config.oracle_points, seed);
      guarded(agree, payload, [&] {
        Extender ext(bases[e]);
        const PolyForm extension = ext.extend();
        for (std::size_t pi = 0; pi < points.size(); ++pi) {
          const RationalPoint& x = points[pi];
          const auto vs = tangent_vectors(n, k, rng);
          json p = payload;
          p["point"] = json::array();
          for (const auto& q : x.coords()) p["point"].push_back(to_fraction_string(q));
          agree.record(form_eval(extension, x, vs) == extend_eval_oracle(bases[e], x, vs), p);

          if (pi == 0)
            for (const auto& I : sets)
              for (const auto& K : sets) {
                const int s = K.size() - 1;
                if (s > k || !meets_complement(I, K)) continue;
                const std::span<const TangentVector> ws(vs.data(), static_cast<std::size_t>(k - s));
                rpoint.record(form_eval(ext.ops().r(I, K), x, ws) == r_eval_oracle(bases[e], I, K, x, ws),
                              with_sets(p, I, K));
              }

          for (int m = 1; m <= n; ++m)
            for (const auto& I : enumerate_gamma(n, m)) {
              for (int ell = 0; ell <= k; ++ell) {
                const auto [truncated, represented] = ext.ladder(I, ell, x, vs);
                json pl = p;
                pl["I"] = I.labels();
                pl["level"] = ell;
                ladder.record(truncated == represented, pl);
                if (ell == k) endpoint.record(truncated == form_eval(ext.component(I), x, vs), pl);
              }
            }
        }
      });
    }
  });
}

}  // namespace

void CheckResult::record(bool ok, const json& payload) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(payload);
}

json CheckResult::to_json() const {
  json j = {{"name", name}, {"assertable", assertable}, {"passed", passed}, {"failed", failed}};
  if (!counterexamples.empty()) j["counterexamples"] = counterexamples;
  if (!findings.empty()) j["findings"] = findings;
  return j;
}

CheckResult& SuiteResult::check(const std::string& check_name, bool assertable) {
  for (auto& c : checks)
    if (c.name == check_name) return c;
  checks.push_back(CheckResult{check_name, assertable});
  return checks.back();
}

bool SuiteResult::passed() const {
  for (const auto& c : checks)
    if (c.assertable && c.failed > 0) return false;
  return true;
}

json SuiteResult::to_json() const {
  json list = json::array();
  for (const auto& c : checks) list.push_back(c.to_json());
  return {{"name", name}, {"passed", passed()}, {"checks", std::move(list)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"trace",    "cochain",  "preserve",            "rops",  "aops",
                                              "identities", "homotopy", "toplevel-diagnostic", "oracle"};
  return names;
}

void validate(const SuiteConfig& config) {
  if (config.n_values.empty() || config.r_values.empty()) throw ConfigError("empty n or r range");
  for (int n : config.n_values)
    if (n < 1 || n > kHardMaxN) throw ConfigError("n = " + std::to_string(n) + " is outside 1.." + std::to_string(kHardMaxN));
  for (int r : config.r_values)
    if (r < 1 || r > 6) throw ConfigError("r = " + std::to_string(r) + " is outside 1..6");
  for (int k : config.k_values)
    if (k < 0 || k > kHardMaxN - 1) throw ConfigError("k = " + std::to_string(k) + " is out of range");
  if (config.families.empty()) throw ConfigError("no polynomial family selected");
  for (const auto& s : config.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw ConfigError("unknown suite '" + s + "'");
  if (config.oracle_points < 1) throw ConfigError("oracle point count must be positive");
  if (!config.allow_slow)
    for (int n : config.n_values)
      for (int r : config.r_values)
        if (!within_envelope(n, r))
          throw ConfigError("(n, r) = (" + std::to_string(n) + ", " + std::to_string(r) +
                            ") is outside the default envelope; pass --allow-slow");
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  SuiteResult out{name, {}};
  if (name == "trace")
    suite_trace(config, out);
  else if (name == "cochain")
    suite_cochain(config, out);
  else if (name == "preserve")
    suite_preserve(config, out);
  else if (name == "rops")
    suite_rops(config, out);
  else if (name == "aops")
    suite_aops(config, out);
  else if (name == "identities")
    suite_identities(config, out);
  else if (name == "homotopy")
    suite_homotopy(config, out);
  else if (name == "toplevel-diagnostic")
    suite_toplevel(config, out);
  else if (name == "oracle")
    suite_oracle(config, out);
  else
    throw ConfigError("unknown suite '" + name + "'");
  return out;
}

VerifyOutcome run_verify(const SuiteConfig& config) {
  validate(config);
  VerifyOutcome outcome;
  const auto& names = config.suites.empty() ? suite_names() : config.suites;
  json suites = json::array();
  for (const auto& name : names) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult result = run_suite(name, config);
    outcome.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    outcome.passed = outcome.passed && result.passed();
    suites.push_back(result.to_json());
    outcome.suites.push_back(std::move(result));
  }
  json families = json::array();
  for (Family f : config.families) families.push_back(std::string(to_string(f)));
  outcome.report = {{"schema", 1},
                    {"command", "verify"},
                    {"config",
                     {{"n", config.n_values},
                      {"r", config.r_values},
                      {"k", config.k_values},
                      {"families", families},
                      {"seed", config.seed},
                      {"oracle_points", config.oracle_points}}},
                    {"suites", std::move(suites)},
                    {"passed", outcome.passed}};
  return outcome;
}

}  // namespace cochain::verify
