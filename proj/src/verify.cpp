#include "stratcx/verify.hpp"

#include <algorithm>
#include <sstream>

#include "stratcx/parallel.hpp"

namespace stratcx::verify {

namespace {

using json = json_io::json;
using rankcomb::DimVector;
using rankcomb::RankVector;

// splitmix64; decorrelates per-trial seeds from the suite seed
std::uint64_t mix(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

DimVector random_dims(SmallRng& rng, int max_maps, int max_dim) {
  const int n = rng.pick(1, max_maps);
  std::vector<Integer> d;
  d.reserve(n + 1);
  for (int i = 0; i <= n; ++i) d.emplace_back(rng.pick(0, max_dim));
  return DimVector(std::move(d));
}

RankVector random_admissible(const DimVector& d, SmallRng& rng) {
  const std::vector<RankVector> all = rankcomb::enumerate_R(d);
  return all[rng.raw() % all.size()];
}

struct TrialOutcome {
  bool failed = false;
  json repro;
};

void fold(SuiteResult& res, std::vector<TrialOutcome>& outcomes, int checks_per_trial) {
  for (TrialOutcome& t : outcomes) {
    res.checks += checks_per_trial;
    if (t.failed) {
      ++res.failures;
      res.repros.push_back(std::move(t.repro));
    }
  }
}

} // namespace

SuiteResult run_hom(std::uint64_t seed, int trials) {
  SuiteResult res{"hom", seed, trials, 0, 0, {}, {}};
  std::vector<TrialOutcome> outcomes(trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
#endif
  for (int t = 0; t < trials; ++t) {
    try {
      SmallRng rng(mix(seed, t));
      const DimVector d = random_dims(rng, 4, 4);
      const RankVector r = random_admissible(d, rng);
      DimVector d2 = d;
      // same length, independent dimensions
      {
        std::vector<Integer> e;
        const int n = static_cast<int>(d.maps());
        for (int i = 0; i <= n; ++i) e.emplace_back(rng.pick(0, 4));
        d2 = DimVector(std::move(e));
      }
      const RankVector r2 = random_admissible(d2, rng);
      const auto c = cxlin::construct_with_ranks(d, r, mix(seed, t) ^ 0x5151u);
      const auto c2 = cxlin::construct_with_ranks(d2, r2, mix(seed, t) ^ 0xa3a3u);
      const Integer expected = rankcomb::hom_dim(d, r, d2, r2);
      const std::size_t actual = cxlin::hom_space(c, c2).dim();
      if (expected != Integer(static_cast<unsigned long>(actual))) {
        outcomes[t].failed = true;
        json repro;
        repro["trial"] = t;
        repro["seed"] = mix(seed, t);
        repro["dims"] = json_io::integer_array(d.entries());
        repro["ranks"] = json_io::integer_array(r.entries());
        repro["dims2"] = json_io::integer_array(d2.entries());
        repro["ranks2"] = json_io::integer_array(r2.entries());
        repro["formula"] = to_int64(expected);
        repro["solved"] = actual;
        repro["complex"] = json_io::complex_to_json(c);
        repro["complex2"] = json_io::complex_to_json(c2);
        outcomes[t].repro = std::move(repro);
      }
    } catch (const std::exception& e) {
      outcomes[t].failed = true;
      outcomes[t].repro = json{{"trial", t}, {"error", e.what()}};
    }
  }
  fold(res, outcomes, 1);
  return res;
}

SuiteResult run_tangent(std::uint64_t seed, int trials) {
  SuiteResult res{"tangent", seed, trials, 0, 0, {}, {}};
  std::vector<TrialOutcome> outcomes(trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
#endif
  for (int t = 0; t < trials; ++t) {
    try {
      SmallRng rng(mix(seed, t));
      const DimVector d = random_dims(rng, 4, 4);
      const RankVector r = random_admissible(d, rng);
      const auto c = cxlin::construct_with_ranks(d, r, mix(seed, t) ^ 0x77u);
      const Integer expected = rankcomb::tangent_dim(d, r);
      const std::size_t solved = cxlin::tangent_space_dim(c);
      const std::size_t via_hom =
          cxlin::hom_space(c, cxlin::extended_by_zero(cxlin::shift(c))).dim();
      const bool ok = expected == Integer(static_cast<unsigned long>(solved)) && solved == via_hom;
      if (!ok) {
        outcomes[t].failed = true;
        json repro;
        repro["trial"] = t;
        repro["seed"] = mix(seed, t);
        repro["dims"] = json_io::integer_array(d.entries());
        repro["ranks"] = json_io::integer_array(r.entries());
        repro["formula"] = to_int64(expected);
        repro["solved"] = solved;
        repro["via_hom"] = via_hom;
        repro["complex"] = json_io::complex_to_json(c);
        outcomes[t].repro = std::move(repro);
      }
    } catch (const std::exception& e) {
      outcomes[t].failed = true;
      outcomes[t].repro = json{{"trial", t}, {"error", e.what()}};
    }
  }
  fold(res, outcomes, 2);
  return res;
}

SuiteResult run_star_assoc(std::uint64_t seed, int trials) {
  SuiteResult res{"star-assoc", seed, trials, 0, 0, {}, {}};
  std::vector<TrialOutcome> outcomes(trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
#endif
  for (int t = 0; t < trials; ++t) {
    try {
      SmallRng rng(mix(seed, t));
      const int r = t % 2 == 0 ? 3 : 4;
      int draw_count = 0;
      auto draw = [&](int degree) {
        const int tw = rng.pick(std::max(degree, 1), 4);
        return pforms::random_form(r, degree, tw, mix(seed, t) ^ (0x100u + 8 * ++draw_count + degree));
      };
      const auto a = draw(rng.pick(0, 2));
      const auto b = draw(rng.pick(0, 2));
      const auto c = draw(rng.pick(0, 2));

      std::ostringstream why;
      bool ok = true;

      // associativity
      const auto ab_c = star(star(a, b), c);
      const auto a_bc = star(a, star(b, c));
      if (!(ab_c == a_bc)) {
        ok = false;
        why << "associativity failed;";
      }
      // graded commutativity, both independent pairs
      for (const auto* pr : {&a, &b}) {
        const auto& x = *pr;
        const auto& y = pr == &a ? b : c;
        const int sign = ((x.degree() + 1) * (y.degree() + 1)) % 2 == 0 ? 1 : -1;
        if (!(star(x, y) == star(y, x).scaled(Rational(sign)))) {
          ok = false;
          why << "graded symmetry failed;";
        }
      }
      // radial contraction of star outputs vanishes
      if (!pforms::radial_contraction(ab_c).is_zero()) {
        ok = false;
        why << "contraction of star output nonzero;";
      }
      // w*w = w ^ dw for 1-forms, in both ambients
      for (int rr : {3, 4}) {
        const auto w = pforms::random_form(rr, 1, rng.pick(2, 4), mix(seed, t) ^ (0x900u + rr));
        const auto lhs = star(w, w).poly();
        const auto rhs = wedge(w.poly(), exterior_derivative(w.poly()));
        if (!(lhs == rhs)) {
          ok = false;
          why << "w*w != w^dw;";
        }
      }

      if (!ok) {
        outcomes[t].failed = true;
        json repro;
        repro["trial"] = t;
        repro["seed"] = mix(seed, t);
        repro["what"] = why.str();
        repro["a"] = json_io::form_to_json(a);
        repro["b"] = json_io::form_to_json(b);
        repro["c"] = json_io::form_to_json(c);
        outcomes[t].repro = std::move(repro);
      }
    } catch (const std::exception& e) {
      outcomes[t].failed = true;
      outcomes[t].repro = json{{"trial", t}, {"error", e.what()}};
    }
  }
  fold(res, outcomes, 6);
  return res;
}

SuiteResult run_bott_dims() {
  SuiteResult res{"bott-dims", 0, 0, 0, 0, {}, {}};
  for (int r = 1; r <= 5; ++r) {
    for (int k = 0; k <= r; ++k) {
      for (int e = 0; e <= 5; ++e) {
        const std::size_t computed = pforms::basis(r, k, e).dim();
        Integer expected;
        if (k == 0) {
          expected = binomial(Integer(e + r), static_cast<unsigned long>(r));
        } else if (e > k) {
          expected = pforms::bott_dimension(r, k, e);
        } else {
          expected = 0;  // constants (and below) cannot satisfy the descent condition
        }
        ++res.checks;
        if (expected != Integer(static_cast<unsigned long>(computed))) {
          ++res.failures;
          res.repros.push_back(json{{"r", r},
                                    {"k", k},
                                    {"e", e},
                                    {"computed", computed},
                                    {"closed_form", to_int64(expected)}});
        }
      }
    }
  }
  // Stage spaces of the analyze pipeline at r=5, d=2, e=2: compare the
  // computed dimension, the twist-based closed form, and the variant that
  // puts the foliation degree in the binom(., k) factor. The last one is
  // reported, never asserted: where it disagrees the computed value is the
  // ground truth.
  const int r = 5, d = 2, e = 2;
  for (int k : {1, 3, 5}) {
    const int stage = (k - 1) / 2;
    const int tw = e + stage * d;
    const std::size_t computed = pforms::basis(r, k, tw).dim();
    const Integer bott = tw > k ? pforms::bott_dimension(r, k, tw) : Integer(0);
    const Integer degree_based =
        binomial(Integer(r - k + tw), static_cast<unsigned long>(r - k)) *
        binomial(Integer(d - 1), static_cast<unsigned long>(k));
    std::ostringstream note;
    note << "stage k=" << k << " twist=" << tw << ": computed " << computed << ", twist-based "
         << bott.get_str() << ", degree-based " << degree_based.get_str();
    if (degree_based != Integer(static_cast<unsigned long>(computed)))
      note << "  << degree-based closed form disagrees; computed value is authoritative";
    res.notes.push_back(note.str());
  }
  return res;
}

SuiteResult run_theorem1(std::uint64_t seed, int trials) {
  SuiteResult res{"theorem1", seed, trials, 0, 0, {}, {}};
  const int r = 5, d = 2, e = 2;

  // integrable pencils p*F*dG - q*G*dF with F, G linear
  std::vector<std::pair<folan::Polynomial, folan::Polynomial>> pencils;
  {
    auto lin = [&](std::initializer_list<std::pair<int, int>> parts) {
      folan::Polynomial p;
      for (auto [var, coeff] : parts) {
        std::vector<int> exp(r + 1, 0);
        exp[var] = 1;
        p[exp] = coeff;
      }
      return p;
    };
    pencils.push_back({lin({{0, 1}}), lin({{1, 1}})});
    pencils.push_back({lin({{2, 1}}), lin({{3, 1}, {4, 1}})});
    pencils.push_back({lin({{0, 1}, {2, 1}}), lin({{1, 1}, {3, -1}})});
    pencils.push_back({lin({{4, 1}}), lin({{0, 1}, {1, 1}, {2, 1}})});
    pencils.push_back({lin({{1, 2}, {5, -3}}), lin({{2, 1}, {3, 1}})});
  }

  for (std::size_t i = 0; i < pencils.size(); ++i) {
    const auto w = folan::fixture_pencil(r, pencils[i].first, 1, pencils[i].second, 1);
    const auto check = folan::theorem1_check(w, e);
    ++res.checks;
    if (!(check.integrable && check.membership())) {
      ++res.failures;
      res.repros.push_back(json{{"pencil", i},
                                {"integrable", check.integrable},
                                {"minus_vanishes", check.minus_vanishes},
                                {"plus_vanishes", check.plus_vanishes},
                                {"form", json_io::form_to_json(w)}});
    }
  }

  for (int t = 0; t < trials; ++t) {
    pforms::TwistedForm w = pforms::TwistedForm::zero(r, 1, d);
    bool found = false;
    for (int attempt = 0; attempt < 32 && !found; ++attempt) {
      w = pforms::random_form(r, 1, d, mix(seed, t * 64 + attempt));
      found = !w.is_zero() && !pforms::integrable(w);
    }
    ++res.checks;
    if (!found) {
      ++res.failures;
      res.repros.push_back(json{{"trial", t}, {"error", "could not draw a non-integrable form"}});
      continue;
    }
    const auto check = folan::theorem1_check(w, e);
    if (check.integrable || check.membership()) {
      ++res.failures;
      res.repros.push_back(json{{"trial", t},
                                {"integrable", check.integrable},
                                {"minus_vanishes", check.minus_vanishes},
                                {"plus_vanishes", check.plus_vanishes},
                                {"form", json_io::form_to_json(w)}});
    }
  }
  return res;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials) {
  if (name == "hom") return run_hom(seed, trials);
  if (name == "tangent") return run_tangent(seed, trials);
  if (name == "star-assoc") return run_star_assoc(seed, trials);
  if (name == "bott-dims") return run_bott_dims();
  if (name == "theorem1") return run_theorem1(seed, trials);
  throw parse_error("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
  return {"hom", "tangent", "star-assoc", "bott-dims", "theorem1"};
}

} // namespace stratcx::verify
