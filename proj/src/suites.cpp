#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symrig/degeneration.hpp"
#include "symrig/error.hpp"
#include "symrig/lie.hpp"
#include "symrig/report.hpp"
#include "symrig/surface.hpp"
#include "symrig/weights.hpp"

namespace symrig {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkip: return "skip";
  }
  return "?";
}

bool SuiteReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::kFail; });
}

const CheckRecord* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "algebra", "jordan", "weights", "surfaces", "degeneration"};
  return names;
}

namespace {

struct Outcome {
  CheckStatus status = CheckStatus::kPass;
  std::optional<std::string> witness;
};

Outcome pass(std::optional<std::string> w = std::nullopt) { return {CheckStatus::kPass, std::move(w)}; }
Outcome fail(std::string w) { return {CheckStatus::kFail, std::move(w)}; }
Outcome check(bool ok, std::string w) { return ok ? pass() : fail(std::move(w)); }

struct Check {
  std::string name;
  std::function<Outcome()> run;
};

using Registry = std::vector<Check>;

// splitmix64 over the run seed and an FNV-1a hash of the check name, so each
// check draws the same samples whatever else is selected.
std::uint64_t check_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  std::uint64_t z = seed + h + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<AlgebraTag> selected_tags(const SuiteOptions& o) {
  if (o.algebra) return {*o.algebra};
  return {kAllTags.begin(), kAllTags.end()};
}

std::string tag_name(AlgebraTag t) { return to_string(t); }

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string vec_string(const IntVector& v) { return "(" + join(v) + ")"; }

// ---------------------------------------------------------------------------
// algebra

void add_algebra_checks(Registry& reg, const SuiteOptions& o) {
  const std::size_t n = o.samples;
  const std::uint64_t seed = o.seed;
  for (AlgebraTag t : selected_tags(o)) {
    const std::string p = "algebra." + tag_name(t) + ".";
    auto pairs = [&](const std::string& name, auto pred) {
      reg.push_back({p + name, [=] {
                       ScalarSampler s(check_seed(seed, p + name));
                       for (std::size_t i = 0; i < n; ++i) {
                         AlgElement a = AlgElement::random(t, s), b = AlgElement::random(t, s);
                         if (!pred(a, b)) return fail("a=" + a.to_string() + " b=" + b.to_string());
                       }
                       return pass();
                     }});
    };
    pairs("norm_multiplicative", [](const AlgElement& a, const AlgElement& b) { return norm(a * b) == norm(a) * norm(b); });
    pairs("conjugate_reverses_products",
          [](const AlgElement& a, const AlgElement& b) { return conjugate(a * b) == conjugate(b) * conjugate(a); });
    pairs("trace_symmetric", [](const AlgElement& a, const AlgElement& b) { return trace_alg(a * b) == trace_alg(b * a); });
    pairs("trace_and_norm_scalar", [](const AlgElement& a, const AlgElement&) {
      return (a + conjugate(a)).is_scalar() && (a * conjugate(a)).is_scalar();
    });
    if (t != AlgebraTag::OC) {
      reg.push_back({p + "associative", [=] {
                       ScalarSampler s(check_seed(seed, p + "associative"));
                       for (std::size_t i = 0; i < n; ++i) {
                         AlgElement a = AlgElement::random(t, s), b = AlgElement::random(t, s),
                                    c = AlgElement::random(t, s);
                         if ((a * b) * c != a * (b * c))
                           return fail("a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string());
                       }
                       return pass();
                     }});
    } else {
      pairs("alternative", [](const AlgElement& x, const AlgElement& y) {
        return x * (x * y) == (x * x) * y && (y * x) * x == y * (x * x);
      });
      reg.push_back({p + "nonassociative_witness", [=] {
                       for (std::size_t i = 1; i < 8; ++i)
                         for (std::size_t j = 1; j < 8; ++j)
                           for (std::size_t k = 1; k < 8; ++k) {
                             AlgElement a = AlgElement::basis(t, i), b = AlgElement::basis(t, j),
                                        c = AlgElement::basis(t, k);
                             if ((a * b) * c != a * (b * c))
                               return pass("(e" + std::to_string(i) + "e" + std::to_string(j) + ")e" +
                                           std::to_string(k) + " != e" + std::to_string(i) + "(e" +
                                           std::to_string(j) + "e" + std::to_string(k) + ")");
                           }
                       return fail("every basis triple associates");
                     }});
    }
    if (t == AlgebraTag::HC) {
      reg.push_back({p + "quaternion_table", [=] {
                       AlgElement i = AlgElement::basis(t, 1), j = AlgElement::basis(t, 2), k = AlgElement::basis(t, 3);
                       return check(i * j == k && j * i == -k && i * i == -AlgElement::one(t),
                                    "e1e2=" + (i * j).to_string() + " e2e1=" + (j * i).to_string());
                     }});
    }
    if (t == AlgebraTag::CxC) {
      reg.push_back({p + "split_zero_divisor", [=] {
                       // x^2 = -1 has the solutions x = +-i, so 1 + i e1 has norm 0.
                       for (const ExactScalar& c : {ExactScalar::i(), -ExactScalar::i()}) {
                         AlgElement a = AlgElement::one(t) + c * AlgElement::basis(t, 1);
                         if (norm(a).is_zero() && (a * conjugate(a)).is_zero()) return pass("a=" + a.to_string());
                       }
                       return fail("no isotropic element of the form 1 + c e1");
                     }});
    }
  }
}

// ---------------------------------------------------------------------------
// jordan

constexpr std::size_t expected_derivation_dim(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::C: return 3;
    case AlgebraTag::CxC: return 8;
    case AlgebraTag::HC: return 21;
    case AlgebraTag::OC: return 52;
  }
  return 0;
}

constexpr std::size_t expected_sl3_dim(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::C: return 8;
    case AlgebraTag::CxC: return 16;
    case AlgebraTag::HC: return 35;
    case AlgebraTag::OC: return 78;
  }
  return 0;
}

DiagonalTorusElement random_torus(ScalarSampler& s) {
  ExactScalar a = s.nonzero_scalar(), b = s.nonzero_scalar();
  return {a, b, (a * b).inverse()};
}

void add_jordan_checks(Registry& reg, const SuiteOptions& o) {
  const std::size_t n = o.samples;
  const std::uint64_t seed = o.seed;
  for (AlgebraTag t : selected_tags(o)) {
    const std::string p = "jordan." + tag_name(t) + ".";
    auto singles = [&](const std::string& name, std::size_t count, auto pred) {
      reg.push_back({p + name, [=] {
                       ScalarSampler s(check_seed(seed, p + name));
                       for (std::size_t i = 0; i < count; ++i) {
                         HermitianMatrix a = HermitianMatrix::random(t, s);
                         if (!pred(a, s)) return fail("A=" + a.to_string());
                       }
                       return pass();
                     }});
    };
    singles("freudenthal_identities", n, [t](const HermitianMatrix& a, ScalarSampler&) {
      const ExactScalar d = determinant(a);
      const HermitianMatrix c = comatrix(a);
      return jordan_product(c, a) == HermitianMatrix::identity(t) * d && triple(a, a, a) == ExactScalar(3) * d &&
             cross(c, c) == d * a;
    });
    singles("determinant_trace_formula", n,
            [](const HermitianMatrix& a, ScalarSampler&) { return determinant(a) == determinant_via_traces(a); });
    singles("trace_cube_closed_formula", n, [](const HermitianMatrix& a, ScalarSampler&) {
      return trace_cube(a) == trace(jordan_product(a, jordan_product(a, a)));
    });
    singles("trace_associative", n, [t](const HermitianMatrix& a, ScalarSampler& s) {
      HermitianMatrix b = HermitianMatrix::random(t, s), c = HermitianMatrix::random(t, s);
      return trace(jordan_product(jordan_product(a, b), c)) == trace(jordan_product(a, jordan_product(b, c)));
    });
    singles("jordan_identity", n, [t](const HermitianMatrix& a, ScalarSampler& s) {
      HermitianMatrix b = HermitianMatrix::random(t, s);
      HermitianMatrix a2 = jordan_product(a, a);
      return jordan_product(jordan_product(a2, b), a) == jordan_product(a2, jordan_product(b, a));
    });
    singles("traceless_triple_vanishes", n, [t](const HermitianMatrix& b, ScalarSampler& s) {
      HermitianMatrix a = HermitianMatrix::random_traceless(t, s);
      HermitianMatrix ab = jordan_product(a, b);
      return triple(ab, b, b).is_zero();
    });
    singles("sigma_preserves_det_and_trace_sq", n, [](const HermitianMatrix& a, ScalarSampler&) {
      for (const auto& q : Permutation::all()) {
        HermitianMatrix b = sigma_action(q, a);
        if (determinant(b) != determinant(a) || trace_sq(b) != trace_sq(a)) return false;
      }
      return true;
    });
    reg.push_back({p + "sigma_generators_in_so3", [=] {
                     for (int g : {0, 1}) {
                       const Permutation q = Permutation::transposition(g, g + 1);
                       const Endomorphism e = sigma_endomorphism(t, q);
                       if (!preserves_determinant(e) || !preserves_trace_form(e)) return fail("sigma" + q.to_string());
                     }
                     return pass();
                   }});
    reg.push_back({p + "s3_group", [=] {
                     // Closure of {sigma12, sigma23} under composition.
                     std::vector<ExactMatrix> group{ExactMatrix::identity(jordan_dim(t))};
                     const std::vector<ExactMatrix> gens = {
                         sigma_endomorphism(t, Permutation::transposition(0, 1)).matrix(),
                         sigma_endomorphism(t, Permutation::transposition(1, 2)).matrix()};
                     for (std::size_t i = 0; i < group.size() && group.size() <= 12; ++i)
                       for (const auto& g : gens) {
                         ExactMatrix h = group[i] * g;
                         if (std::find(group.begin(), group.end(), h) == group.end()) group.push_back(h);
                       }
                     if (group.size() != 6) return fail("group order " + std::to_string(group.size()));
                     // p -> sigma_{p^-1} is a homomorphism from S3.
                     for (const auto& a : Permutation::all())
                       for (const auto& b : Permutation::all()) {
                         Endomorphism lhs = sigma_endomorphism(t, a.inverse()) * sigma_endomorphism(t, b.inverse());
                         if (lhs != sigma_endomorphism(t, (a * b).inverse()))
                           return fail("table mismatch at " + a.to_string() + "*" + b.to_string());
                       }
                     return pass("order 6");
                   }});
    reg.push_back({p + "mu_in_sl3", [=] {
                     ScalarSampler s(check_seed(seed, p + "mu_in_sl3"));
                     for (std::size_t i = 0; i < std::min<std::size_t>(n, 50); ++i) {
                       HermitianMatrix a = HermitianMatrix::random_traceless(t, s);
                       Endomorphism m = mu(a);
                       if (!is_in_sl3(m)) return fail("mu(A) not in sl3, A=" + a.to_string());
                       if (!a.is_zero() && is_derivation(m)) return fail("mu(A) is a derivation, A=" + a.to_string());
                     }
                     return pass();
                   }});
    reg.push_back({p + "nu_torus", [=] {
                     ScalarSampler s(check_seed(seed, p + "nu_torus"));
                     for (std::size_t i = 0; i < std::min<std::size_t>(n, 20); ++i) {
                       DiagonalTorusElement u = random_torus(s);
                       Endomorphism nu_u = nu(t, u);
                       if (!preserves_determinant(nu_u)) return fail("nu(t) changes det, t=" + u.as_matrix(t).to_string());
                       for (const auto& q : Permutation::all()) {
                         Endomorphism lhs = sigma_endomorphism(t, q) * nu_u * sigma_endomorphism(t, q.inverse());
                         if (lhs != nu(t, u.permuted(q)))
                           return fail("sigma nu(t) sigma^-1 != nu(sigma t) for " + q.to_string());
                       }
                     }
                     return pass();
                   }});
    reg.push_back({p + "derivation_dim", [=] {
                     const bool exact = t != AlgebraTag::OC || o.deep;
                     std::function<void(std::size_t, std::size_t)> prog;
                     if (o.progress && t == AlgebraTag::OC)
                       prog = [&o](std::size_t eq, std::size_t rank) {
                         o.progress("derivations OC: " + std::to_string(eq) + " equations, rank " + std::to_string(rank));
                       };
                     DerivationResult r = derivation_algebra(t, exact ? EliminationMode::kExact : EliminationMode::kModular,
                                                             false, prog);
                     std::string w = std::string(exact ? "exact" : "modular") + " unknowns=" + std::to_string(r.unknowns) +
                                     " equations=" + std::to_string(r.equations) + " rank=" + std::to_string(r.rank) +
                                     " dim=" + std::to_string(r.dimension);
                     const std::size_t j0 = jordan_dim(t) - 1;
                     if (r.dimension != expected_derivation_dim(t) || r.dimension + j0 != expected_sl3_dim(t))
                       return fail(w);
                     return pass(w + " dim_sl3=" + std::to_string(r.dimension + j0));
                   }});
    if (t == AlgebraTag::HC) {
      reg.push_back({p + "derivation_modes_agree", [=] {
                       DerivationResult e = derivation_algebra(t, EliminationMode::kExact, true);
                       DerivationResult m = derivation_algebra(t, EliminationMode::kModular);
                       if (e.rank != m.rank)
                         return fail("exact rank " + std::to_string(e.rank) + " modular rank " + std::to_string(m.rank));
                       for (const auto& d : e.basis)
                         if (!is_derivation(d)) return fail("kernel vector is not a derivation");
                       return pass();
                     }});
    }
    reg.push_back({p + "centralizer_of_h0", [=] {
                     CentralizerResult r = centralizer_in_J0(t);
                     if (r.dimension != 2) return fail("dim " + std::to_string(r.dimension));
                     std::vector<ScalarVector> rows;
                     for (const auto& b : r.basis) {
                       for (std::size_t k = 0; k < 3; ++k)
                         if (!b.x(k).is_zero()) return fail("non-diagonal basis vector " + b.to_string());
                       if (!trace(b).is_zero()) return fail("basis vector not traceless " + b.to_string());
                       rows.push_back({b.r(0), b.r(1), b.r(2)});
                     }
                     if (exact_rank(ExactMatrix::from_rows(rows)) != 2) return fail("basis vectors dependent");
                     return pass("dim 2");
                   }});
    reg.push_back({p + "phi_torus_orbit", [=] {
                     ScalarSampler s(check_seed(seed, p + "phi_torus_orbit"));
                     for (std::size_t i = 0; i < std::min<std::size_t>(n, 20); ++i) {
                       DiagonalTorusElement u = random_torus(s);
                       HermitianMatrix a = nu(t, u)(HermitianMatrix::identity(t));
                       ProjectivePoint pt = phi_map(ExactScalar(1), a);
                       ScalarVector nz;
                       for (const auto& c : pt.coords())
                         if (!c.is_zero()) nz.push_back(c);
                       ScalarVector want = {ExactScalar(1)};
                       for (std::size_t k = 0; k < 3; ++k) want.push_back(u[k] * u[k]);
                       for (std::size_t k = 0; k < 3; ++k) want.push_back((u[k] * u[k]).inverse());
                       want.push_back(ExactScalar(1));
                       if (nz != want || !on_cubic(ExactScalar(1), a)) return fail("t=" + u.as_matrix(t).to_string());
                     }
                     return pass();
                   }});
  }
}

// ---------------------------------------------------------------------------
// weights

void add_weight_checks(Registry& reg, const SuiteOptions& o) {
  for (AlgebraTag t : selected_tags(o)) {
    const std::string p = "weights." + tag_name(t) + ".";
    const long want_m0 = t == AlgebraTag::C ? 1 : 2;
    const std::size_t want_roots = std::array<std::size_t, 4>{1, 3, 9, 24}[static_cast<std::size_t>(doubling_level(t))];
    reg.push_back({p + "module_dimension", [=] {
                     JordanModule m = select_module(t);
                     Integer d = weyl_dim(m.root_system, m.highest_weight);
                     std::string w = std::string(to_string(m.root_system.type)) + " " + m.highest_weight.to_string() +
                                     " dim " + d.get_str();
                     return check(d == static_cast<long>(jordan_dim(t) - 1), w);
                   }});
    reg.push_back({p + "zero_weight_multiplicity", [=] {
                     JordanModule m = select_module(t);
                     WeightDiagram d = freudenthal_multiplicities(m.root_system, m.highest_weight);
                     const long m0 = multiplicity(d, Weight{std::vector<long>(m.root_system.rank, 0)});
                     return check(m0 == want_m0, "m(0)=" + std::to_string(m0));
                   }});
    reg.push_back({p + "root_system", [=] {
                     JordanModule m = select_module(t);
                     const auto pos = positive_roots(m.root_system);
                     if (m.root_system.cartan_matrix() != standard_cartan_matrix(m.root_system.type))
                       return fail("Cartan matrix mismatch");
                     return check(pos.size() == want_roots, std::to_string(pos.size()) + " positive roots");
                   }});
    reg.push_back({p + "weight_diagram", [=] {
                     JordanModule m = select_module(t);
                     const RootSystem& rs = m.root_system;
                     WeightDiagram d = freudenthal_multiplicities(rs, m.highest_weight);
                     const long total = diagram_dimension(d);
                     if (Integer(total) != weyl_dim(rs, m.highest_weight))
                       return fail("sum of multiplicities " + std::to_string(total));
                     for (const auto& [w, mult] : d)
                       for (std::size_t i = 0; i < rs.rank; ++i)
                         if (multiplicity(d, reflect(rs, w, i)) != mult)
                           return fail("not Weyl invariant at " + w.to_string());
                     return pass();
                   }});
  }
}

// ---------------------------------------------------------------------------
// surfaces

IntMatrix rows_matrix(const std::vector<std::vector<long>>& rows) { return IntMatrix::from_rows(rows); }

void add_surface_checks(Registry& reg) {
  reg.push_back({"surfaces.orbit_closure_fan", [] {
                   Fan2D f = orbit_closure_surface();
                   auto iso = fans_isomorphic(f, fan_dp6());
                   std::ostringstream w;
                   w << f.size() << " rays";
                   for (const auto& r : f.rays()) w << " (" << r.first << ',' << r.second << ')';
                   w << "; Picard rank " << f.picard_rank();
                   return check(f.size() == 6 && iso && f.picard_rank() == 4, w.str());
                 }});
  reg.push_back({"surfaces.single_triangle_gives_p2", [] {
                   Fan2D f = monomial_normal_fan({{2, 0}, {0, 2}, {-2, -2}});
                   return check(fans_isomorphic(f, fan_p2()).has_value(), "fan of size " + std::to_string(f.size()));
                 }});
  reg.push_back({"surfaces.hirzebruch1_is_blowup_of_p2", [] {
                   return check(fans_isomorphic(fan_hirzebruch(1), toric_blowup(fan_p2(), 0)).has_value(), "no GL2(Z) match");
                 }});
  reg.push_back({"surfaces.y_intersection_form", [] {
                   RationalSurface y = y_surface();
                   Inertia in = inertia(y.intersection_form());
                   for (const auto& l : y.class_labels()) {
                     DivisorClass c = y.boundary_class(l);
                     if (y.intersection(c, c) != -1) return fail(l + "^2 != -1");
                   }
                   return check(in.positive == 1 && in.negative == 3 && in.zero == 0,
                                "signature (" + std::to_string(in.positive) + "," + std::to_string(in.negative) + ")");
                 }});
  reg.push_back({"surfaces.y_linear_equivalences", [] {
                   RationalSurface y = y_surface();
                   auto c = [&](const char* l) { return y.boundary_class(l); };
                   const bool ok = linear_equivalent(y, c("D1") - c("E1"), c("D2") - c("E2")) &&
                                   linear_equivalent(y, c("D2") - c("E2"), c("D3") - c("E3")) &&
                                   linear_equivalent(y, c("E1") + c("E2") + c("D3"), c("E1") + c("E3") + c("D2")) &&
                                   !linear_equivalent(y, c("D1"), c("E1"));
                   return check(ok, "relation failed");
                 }});
  reg.push_back({"surfaces.s3_actions", [] {
                   RationalSurface y = y_surface();
                   const DivisorClass k = y.anticanonical();
                   std::set<DivisorClass> boundary;
                   for (const auto& l : y.class_labels()) boundary.insert(y.boundary_class(l));
                   const auto acts = s3_pic_actions();
                   const auto perms = Permutation::all();
                   for (std::size_t i = 0; i < acts.size(); ++i) {
                     const auto& a = acts[i];
                     if (a.apply(k) != k) return fail(a.label + " moves -K");
                     for (int j = 0; j < 3; ++j) {
                       const std::string dj = "D" + std::to_string(j + 1), ej = "E" + std::to_string(j + 1);
                       if (a.apply(y.boundary_class(dj)) != y.boundary_class("D" + std::to_string(perms[i](j) + 1)) ||
                           a.apply(y.boundary_class(ej)) != y.boundary_class("E" + std::to_string(perms[i](j) + 1)))
                         return fail(a.label + " does not permute the boundary");
                     }
                   }
                   // sigma12(D1) = D1 - E1 + E2.
                   const auto& s12 = acts[2];
                   if (s12.label != "sigma12" || s12.apply(y.boundary_class("D1")) != DivisorClass{1, -1, 1, 0})
                     return fail("sigma12(D1) = " + vec_string(s12.apply(y.boundary_class("D1"))));
                   return pass();
                 }});
  reg.push_back({"surfaces.theta_involution", [] {
                   RationalSurface y = y_surface();
                   PicAction th = theta_pic_action();
                   const bool ok = th.matrix * th.matrix == IntMatrix::identity(4) &&
                                   th.apply(y.anticanonical()) == y.anticanonical();
                   return check(ok, th.matrix.to_string());
                 }});
  struct Expected {
    std::string name;
    std::vector<std::string> labels;  // actions by label
    std::vector<std::vector<long>> basis;
  };
  const std::vector<Expected> expected = {
      {"sigma12", {"sigma12"}, {{1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}},     // D1+E2, E1+E2, E3
      {"sigma13", {"sigma13"}, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}}},     // D1+E3, E1+E3, E2
      {"sigma23", {"sigma23"}, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}}},     // D1, E1, E2+E3
      {"sigma123", {"sigma123"}, {{1, 0, 1, 1}, {0, 1, 1, 1}}},                 // D1+E2+E3, E1+E2+E3
      {"sigma132", {"sigma132"}, {{1, 0, 1, 1}, {0, 1, 1, 1}}},
      {"S3", {"id", "sigma12", "sigma13", "sigma23", "sigma123", "sigma132"}, {{1, 0, 1, 1}, {0, 1, 1, 1}}},
  };
  for (const auto& e : expected) {
    reg.push_back({"surfaces.invariant_sublattice." + e.name, [e] {
                     const auto all = s3_pic_actions();
                     std::vector<PicAction> acts;
                     for (const auto& l : e.labels)
                       for (const auto& a : all)
                         if (a.label == l) acts.push_back(a);
                     InvariantLattice lat = invariant_sublattice(acts);
                     std::string w = "rank " + std::to_string(lat.rank) + " basis";
                     for (const auto& b : lat.basis) w += " " + vec_string(b);
                     const bool ok = lat.rank == e.basis.size() &&
                                     same_lattice(IntMatrix::from_rows(lat.basis, 4), rows_matrix(e.basis));
                     return check(ok, w);
                   }});
  }
  reg.push_back({"surfaces.invariant_rank_equals_mean_trace", [] {
                   // rank of the fixed lattice of <g> = (1/|g|) sum_k tr(g^k).
                   for (const auto& a : s3_pic_actions()) {
                     IntMatrix g = IntMatrix::identity(4), pw = a.matrix;
                     Integer traces = 4;
                     long order = 1;
                     while (pw != g) {
                       for (std::size_t i = 0; i < 4; ++i) traces += pw(i, i);
                       pw = pw * a.matrix;
                       ++order;
                     }
                     const std::size_t rank = invariant_sublattice({a}).rank;
                     if (traces != Integer(order) * static_cast<long>(rank))
                       return fail(a.label + ": mean trace " + traces.get_str() + "/" + std::to_string(order) +
                                   " vs rank " + std::to_string(rank));
                   }
                   return pass();
                 }});
  reg.push_back({"surfaces.collinear_mori_cone", [] {
                   RationalSurface s = blowup_p2_config(true);
                   RationalCone cone = mori_cone(s);
                   const auto rays = extremal_rays(cone);
                   if (rays.size() != 4) return fail(std::to_string(rays.size()) + " extremal rays");
                   const DivisorClass f0 = s.boundary_class("F0");
                   if (s.intersection(f0, f0) != -2) return fail("F0^2 != -2");
                   for (int i = 1; i <= 3; ++i) {
                     DivisorClass fi = s.boundary_class("E" + std::to_string(i));
                     FacePosition pos = face_position(cone, f0 + fi);
                     if (s.intersection(f0, fi) != 1) return fail("F0.F" + std::to_string(i) + " != 1");
                     if (pos.kind != FaceKind::kRelativeInteriorOfFace || pos.face_dim != 2)
                       return fail("F0+F" + std::to_string(i) + " in " + pos.to_string());
                   }
                   DivisorClass k = s.anticanonical();
                   DivisorClass want = 3 * f0 + 2 * (s.boundary_class("E1") + s.boundary_class("E2") + s.boundary_class("E3"));
                   return check(k == want, "-K = " + f_basis_string(k));
                 }});
  reg.push_back({"surfaces.general_blowup_matches_y", [] {
                   RationalSurface g = blowup_p2_config(false);
                   RationalSurface y = y_surface();
                   const IntMatrix m = y_to_blowup_map();
                   if (m.transpose() * g.intersection_form() * m != y.intersection_form()) return fail("not an isometry");
                   const auto rays = extremal_rays(mori_cone(g));
                   if (rays.size() != 6) return fail(std::to_string(rays.size()) + " extremal rays");
                   std::set<DivisorClass> want(rays.begin(), rays.end()), got;
                   for (const auto& l : y.class_labels()) got.insert(m.apply(y.boundary_class(l)));
                   return check(got == want, "boundary classes do not match the negative curves");
                 }});
}

// ---------------------------------------------------------------------------
// degeneration

void add_degeneration_checks(Registry& reg) {
  reg.push_back({"degeneration.coefficient_solutions", [] {
                   const auto sols = solve_coefficient_system();
                   std::vector<std::string> names;
                   for (const auto& s : sols) names.push_back(s.to_string());
                   const std::vector<CoefficientSolution> want = {{1, 1, 0, 0, 1, 0}, {0, 1, 0, 1, 1, 0}};
                   return check(sols == want, join(names, " "));
                 }});
  reg.push_back({"degeneration.divisor_assignments", [] {
                   RationalSurface s = blowup_p2_config(true);
                   const DivisorClass k = s.anticanonical();
                   for (const auto& sol : solve_coefficient_system()) {
                     auto a = divisor_assignments(sol);
                     DivisorClass sum(4, Integer(0));
                     for (const auto& [l, c] : a) sum = sum + c;
                     if (sum != k) return fail(sol.to_string() + ": sum = " + f_basis_string(sum));
                     if (a["D1"] - a["E1"] != a["D2"] - a["E2"]) return fail(sol.to_string() + ": D1-E1 != D2-E2");
                   }
                   return pass("-K = " + f_basis_string(k));
                 }});
  const std::vector<std::pair<std::string, BoundaryModel>> starts = {
      {"P2", BoundaryModel::p2()},           {"F0", BoundaryModel::hirzebruch(0)},
      {"F1", BoundaryModel::hirzebruch(1)},  {"F2", BoundaryModel::hirzebruch(2)},
      {"F3", BoundaryModel::hirzebruch(3)},  {"F4", BoundaryModel::hirzebruch(4)}};
  for (const auto& [name, start] : starts) {
    const bool admissible = name == "P2" || name == "F0" || name == "F1";
    reg.push_back({"degeneration.search." + name, [start = start, admissible] {
                     const auto res = search_equivariant_models(start);
                     if (!admissible) return check(res.empty(), std::to_string(res.size()) + " terminal models");
                     if (res.size() != 1) return fail(std::to_string(res.size()) + " terminal models");
                     const BoundaryModel& m = res.front();
                     const std::vector<std::array<long, 3>> want = {{2, -1, 1}, {2, -1, 1}, {2, -1, 1}, {3, -2, 3}};
                     const long k2_start = start.k_squared();
                     const bool ok = m.invariants() == want && k2_start - m.k_squared() == 4 - static_cast<long>(start.picard_rank());
                     if (!ok) return fail(m.to_string());
                     return pass(m.to_string() + " via " + join(m.history(), ", "));
                   }});
  }
  reg.push_back({"degeneration.contradiction.Theta0", [] {
                   RationalSurface s = blowup_p2_config(true);
                   std::vector<std::string> ws;
                   for (const auto& sol : solve_coefficient_system()) {
                     PicAction th = theta0_action(sol);
                     if (!is_involution(th)) return fail(sol.to_string() + ": Theta0 is not an involution");
                     ContradictionResult r = contradiction_check(s, th);
                     const bool ok = r.verdict == Verdict::kContradiction && r.position &&
                                     r.position->kind == FaceKind::kRelativeInteriorOfFace && r.position->face_dim == 2;
                     if (!ok) return fail(sol.to_string() + ": " + to_string(r.verdict) + " " + r.witness);
                     ws.push_back(sol.to_string() + ": CONTRADICTION " + r.witness);
                   }
                   return pass(join(ws, "; "));
                 }});
  reg.push_back({"degeneration.control.theta_on_y", [] {
                   ContradictionResult r = contradiction_check(y_surface(), theta_pic_action());
                   return check(r.verdict == Verdict::kConsistent, r.witness);
                 }});
  reg.push_back({"degeneration.control.identity", [] {
                   RationalSurface s = blowup_p2_config(true);
                   ContradictionResult r = contradiction_check(s, PicAction::make(s, IntMatrix::identity(4), "id"));
                   return check(r.verdict == Verdict::kConsistent, r.witness);
                 }});
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + suite + "'");
  Registry reg;
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  if (want("algebra")) add_algebra_checks(reg, options);
  if (want("jordan")) add_jordan_checks(reg, options);
  if (want("weights")) add_weight_checks(reg, options);
  if (want("surfaces")) add_surface_checks(reg);
  if (want("degeneration")) add_degeneration_checks(reg);

  SuiteReport report;
  report.suite = suite;
  report.seed = options.seed;
  report.samples = options.samples;
  for (const auto& c : reg) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const auto t1 = std::chrono::steady_clock::now();
    CheckRecord rec{c.name, out.status, out.witness, 0};
    if (options.timings) rec.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    report.checks.push_back(std::move(rec));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  return report;
}

std::string to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (c.witness) e["witness"] = *c.witness;
    e["duration_ms"] = c.duration_ms;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  std::size_t passed = 0, failed = 0, skipped = 0;
  os << "suite " << r.suite << " (seed " << r.seed << ", samples " << r.samples << ")\n";
  for (const auto& c : r.checks) {
    std::string s = to_string(c.status);
    std::transform(s.begin(), s.end(), s.begin(), ::toupper);
    os << s << "  " << c.name;
    if (c.witness) os << "  [" << *c.witness << "]";
    if (c.duration_ms > 0) os << "  " << c.duration_ms << " ms";
    os << '\n';
    (c.status == CheckStatus::kPass ? passed : c.status == CheckStatus::kFail ? failed : skipped)++;
  }
  os << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return os.str();
}

}  // namespace symrig
