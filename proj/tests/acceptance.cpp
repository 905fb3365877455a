// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Takes the directory holding the example session files as argv[1].
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frobkit/parse.hpp"
#include "frobkit/session.hpp"
#include "frobkit/tight.hpp"
#include "util.hpp"

using namespace frobkit;

namespace {

int g_failures = 0;

bool check_detail(bool cond, const std::string& what) {
  if (!cond) std::cout << "  VIOLATION: " << what << "\n";
  return cond;
}

// Bit-exact comparison of reduced Groebner bases via their canonical text.
bool same_gb(const Ideal& A, const Ideal& B) {
  return tutil::gb_strings(A) == tutil::gb_strings(B);
}

template <typename F>
void run_criterion(const std::string& name, double budget_seconds, F body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::cout << "  VIOLATION: unexpected exception: " << e.what() << "\n";
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && seconds >= budget_seconds) {
    std::cout << "  VIOLATION: exceeded the " << budget_seconds << "s time budget\n";
    ok = false;
  }
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << ": " << name << " [" << std::fixed
       << std::setprecision(1) << seconds << "s";
  if (budget_seconds > 0) line << " of " << std::setprecision(0) << budget_seconds << "s";
  line << "]";
  std::cout << line.str() << std::endl;
  if (!ok) ++g_failures;
}

std::string joined(const Ideal& J) {
  std::string out;
  for (const std::string& g : tutil::gb_strings(J)) {
    if (!out.empty()) out += ", ";
    out += g;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <sessions-dir>" << std::endl;
    return 2;
  }
  std::filesystem::path sessions_dir(argv[1]);

  SessionFile s2, s5;
  try {
    s2 = load_session((sessions_dir / "example-p2.session").string());
    s5 = load_session((sessions_dir / "example-p5.session").string());
  } catch (const std::exception& e) {
    std::cout << "FAIL: loading example sessions: " << e.what() << std::endl;
    return 1;
  }

  // ------------------------------------------------------------------
  // Criterion 1: the two-dimensional characteristic-2 example.
  // ------------------------------------------------------------------
  run_criterion("criterion 1: characteristic-2 worked example", 60.0, [&] {
    const RingPtr& R = s2.ring;
    const Ideal& I = s2.ideals.at("I");
    const Polynomial& u = s2.polys.at("u");
    const Ideal& J = s2.ideals.at("J");
    const Polynomial& c1 = s2.polys.at("c1");
    const Polynomial& c2 = s2.polys.at("c2");
    bool ok = true;

    Ideal inter = ideal_intersect(
        ideal_intersect(tutil::I(R, {"a", "b"}), tutil::I(R, {"a", "c"})),
        ideal_intersect(tutil::I(R, {"c", "d"}), tutil::I(R, {"c + d", "a^3 + b*d^2"})));
    ok &= check_detail(same_gb(inter, I), "prime intersection does not reproduce I exactly");
    ok &= check_detail(quotient_dimension(I) == 2, "dim R/I != 2");

    ok &= check_detail(ideal_contains(ideal_colon(bracket_power(I, 1), I), u),
                 "u is not in (I^[2] : I)");
    Ideal kernel = ideal_sum(frobenius_root(Ideal::principal(u), 1), I);
    ok &= check_detail(ideal_equal(kernel, s2.ideals.at("K1")),
                 "level-1 Frobenius kernel != (a^2, d) + I");
    ok &= check_detail(!kernel.is_unit_ideal(), "level-1 Frobenius kernel is the unit ideal");

    FrobeniusMultiplier mult(u, 1, I);
    QuotientPresentation pres(I);
    Ideal expected0 =
        ideal_sum(tutil::I(R, {"a*d", "a*c", "b*d^2", "a^3", "c*(c+d)", "b*(c+d)"}), I);
    Ideal tau0 = wpti(pres, mult, J, c1, 0);
    ok &= check_detail(ideal_equal(tau0, expected0),
                 "tau_0 != (a*d, a*c, b*d^2, a^3, c*(c+d), b*(c+d)) + I");
    ok &= check_detail(ideal_equal(wpti(pres, mult, J, c2, 0), tau0),
                 "tau_0 depends on the choice of test element");

    Ideal tau1 = wpti(pres, mult, J, c1, 1);
    Ideal tau2 = wpti(pres, mult, J, c1, 2);
    ok &= check_detail(ideal_equal(tau1, tau2), "tau_1 != tau_2");
    ok &= check_detail(ideal_equal(wpti(pres, mult, J, c2, 1), tau1),
                 "tau_1 depends on the choice of test element");
    Ideal expected1 =
        ideal_sum(tutil::I(R, {"a*d", "a*c", "b*d", "a^3", "c*(c+d)", "b*c"}), I);
    ok &= check_detail(ideal_equal(tau1, expected1),
                 "tau_1 != (a*d, a*c, b*d, a^3, c*(c+d), b*c) + I");
    std::cout << "  INFO: stable tau value has reduced basis { " << joined(tau1) << " }\n";

    TestIdealResult limit = wpti_limit(pres, mult, J, c1, 4);
    ok &= check_detail(limit.stable_index.has_value() && *limit.stable_index <= 1,
                 "tau chain does not stabilize by level 1");

    HslResult hsl = hsl_chain(mult);
    ok &= check_detail(!hsl.f_injective, "quotient unexpectedly F-injective");
    std::cout << "  INFO: nilpotency index eta = " << hsl.eta
              << ", F-injective = " << (hsl.f_injective ? "true" : "false") << "\n";
    return ok;
  });

  // ------------------------------------------------------------------
  // Criterion 2: the one-dimensional characteristic-5 example (and its
  // characteristic-7 variant).
  // ------------------------------------------------------------------
  run_criterion("criterion 2: characteristic-5 worked example", 120.0, [&] {
    const RingPtr& R = s5.ring;
    const Ideal& I = s5.ideals.at("I");
    const Polynomial& u = s5.polys.at("u");
    const Polynomial& c0 = s5.polys.at("c0");
    const Ideal& m = s5.ideals.at("m");
    bool ok = true;

    Ideal inter = ideal_intersect(
        ideal_intersect(tutil::I(R, {"a", "b"}), tutil::I(R, {"c", "b"})),
        tutil::I(R, {"a - c", "b - c"}));
    ok &= check_detail(same_gb(inter, I), "prime intersection does not reproduce I exactly");
    ok &= check_detail(quotient_dimension(I) == 1, "dim R/I != 1");

    ok &= check_detail(ideal_equal(ideal_colon(bracket_power(I, 1), I),
                             ideal_sum(Ideal::principal(u), bracket_power(I, 1))),
                 "(I^[5] : I) != u*R + I^[5]");

    RingPtr R7 = make_ring(7, {"a", "b", "c"}, MonomialOrder::grevlex());
    Ideal I7 = tutil::I(R7, {"a*b - b*c", "b*c - b^2", "a*c - b*c"});
    Polynomial u7 = tutil::P(R7, "b^6*(b - c)^6*(a - b)^6");
    ok &= check_detail(ideal_equal(ideal_colon(bracket_power(I7, 1), I7),
                             ideal_sum(Ideal::principal(u7), bracket_power(I7, 1))),
                 "characteristic-7 variant: (I^[7] : I) != u*R + I^[7]");

    Ideal kernel = ideal_sum(frobenius_root(Ideal::principal(u), 1), I);
    ok &= check_detail(kernel.is_unit_ideal(), "level-1 Frobenius kernel is not the unit ideal");
    FrobeniusMultiplier mult(u, 1, I);
    HslResult hsl = hsl_chain(mult);
    ok &= check_detail(hsl.f_injective, "hsl chain does not report F-injectivity");
    std::cout << "  INFO: nilpotency index eta = " << hsl.eta
              << ", F-injective = " << (hsl.f_injective ? "true" : "false") << "\n";

    Ideal L = star_closure(ideal_sum(Ideal::principal(c0), I), u, 1);
    ok &= check_detail(ideal_equal(L, m), "star closure of c0*R + I != (a, b, c)");

    SharpResult sharp = sharp_closure(m, mult);
    ok &= check_detail(ideal_equal(sharp.closure, m), "sharp closure of (a, b, c) != (a, b, c)");

    QuotientPresentation pres(I);
    TcResult tc = tc_annihilator(pres, mult, Ideal::unit(R), c0, 1);
    ok &= check_detail(ideal_equal(tc.annihilator_ideal, m),
                 "tight-closure annihilator != (a, b, c)");
    ok &= check_detail(tc.variants_agree, "tight-closure annihilator variants disagree");

    Ideal lvl1 = ideal_sum(frobenius_root(multiply(u, L), 1), I);
    Ideal nu2 = ideal_sum(frobenius_root(multiply(poly_pow(u, 6), L), 2), I);
    Ideal cube = ideal_sum(frobenius_root(multiply(poly_pow(u, 3), L), 2), I);
    ok &= check_detail(ideal_equal(nu2, lvl1),
                 "level-2 twisted root with exponent 1+p does not match level 1");
    std::cout << "  INFO: level-2 twisted root needs exponent 1 + p = 6; exponent 3 gives { "
              << joined(cube) << " }\n";
    return ok;
  });

  // ------------------------------------------------------------------
  // Criterion 3: randomized property suites, >= 200 cases per suite, over
  // F_2[x, y] and F_3[x, y] with generator degrees <= 4.
  // ------------------------------------------------------------------
  run_criterion("criterion 3: randomized Frobenius calculus properties", 300.0, [&] {
    std::vector<RingPtr> rings = {make_ring(2, {"x", "y"}, MonomialOrder::grevlex()),
                                  make_ring(3, {"x", "y"}, MonomialOrder::grevlex())};
    bool all_ok = true;
    auto suite = [&](const std::string& name, int cases, bool ok) {
      std::cout << "  suite " << name << ": " << (ok ? "ok" : "VIOLATION") << " (" << cases
                << " cases)\n";
      all_ok = all_ok && ok;
    };

    {  // Galois adjunction: J in L^[p^e]  <=>  I_e(J) in L.
      bool ok = true;
      int cases = 0, seed = 241;
      for (const RingPtr& r : rings) {
        std::mt19937 rng(seed++);
        for (int t = 0; t < 120; ++t, ++cases) {
          Ideal J = tutil::random_ideal(rng, r, 3, 4, 4);
          Ideal L = tutil::random_ideal(rng, r, 3, 4, 4);
          std::int64_t e = 1 + (t % 2);
          ok &= ideal_subset(J, bracket_power(L, e)) ==
                ideal_subset(frobenius_root(J, e), L);
        }
      }
      suite("galois-adjunction", cases, ok);
    }

    {  // Roots invert bracket powers.
      bool ok = true;
      int cases = 0, seed = 251;
      for (const RingPtr& r : rings) {
        std::mt19937 rng(seed++);
        for (int t = 0; t < 120; ++t, ++cases) {
          Ideal J = tutil::random_ideal(rng, r, 3, 4, 4);
          std::int64_t e = 1 + (t % 2);
          ok &= ideal_equal(frobenius_root(bracket_power(J, e), e), J);
        }
      }
      suite("root-inverts-bracket", cases, ok);
    }

    {  // Additivity of roots.
      bool ok = true;
      int cases = 0, seed = 257;
      for (const RingPtr& r : rings) {
        std::mt19937 rng(seed++);
        for (int t = 0; t < 120; ++t, ++cases) {
          Ideal A = tutil::random_ideal(rng, r, 3, 4, 4);
          Ideal B = tutil::random_ideal(rng, r, 3, 4, 4);
          std::int64_t e = 1 + (t % 2);
          ok &= ideal_equal(frobenius_root(ideal_sum(A, B), e),
                            ideal_sum(frobenius_root(A, e), frobenius_root(B, e)));
        }
      }
      suite("root-additivity", cases, ok);
    }

    {  // Composition of roots.
      bool ok = true;
      int cases = 0, seed = 263;
      for (const RingPtr& r : rings) {
        std::mt19937 rng(seed++);
        for (int t = 0; t < 120; ++t, ++cases) {
          Ideal J = tutil::random_ideal(rng, r, 3, 4, 4);
          std::int64_t e = 1, f = 1 + (t % 2);
          ok &= ideal_equal(frobenius_root(frobenius_root(J, f), e),
                            frobenius_root(J, e + f));
        }
      }
      suite("root-composition", cases, ok);
    }

    {  // Skew identity: I_e(a^{p^e} * B) = a * I_e(B).
      bool ok = true;
      int cases = 0, seed = 269;
      for (const RingPtr& r : rings) {
        std::mt19937 rng(seed++);
        for (int t = 0; t < 120; ++t, ++cases) {
          Polynomial a = tutil::random_nonzero_poly(rng, r, 2, 3);
          Ideal B = tutil::random_ideal(rng, r, 3, 4, 4);
          std::int64_t e = 1 + (t % 2);
          std::int64_t q = prime_power(r->characteristic(), e);
          ok &= ideal_equal(frobenius_root(multiply(frobenius_power(a, q), B), e),
                            multiply(a, frobenius_root(B, e)));
        }
      }
      suite("root-skew-identity", cases, ok);
    }

    {  // Star closure: contains the input, is stable, is idempotent; and on
       // monomial data it is the smallest stable monomial ideal over the
       // degree <= 3 monomial lattice.
      bool ok = true;
      int cases = 0, seed = 271;
      for (const RingPtr& r : rings) {
        std::mt19937 rng(seed++);
        for (int t = 0; t < 100; ++t, ++cases) {
          Ideal J = tutil::random_ideal(rng, r, 3, 4, 4);
          Polynomial v = tutil::random_nonzero_poly(rng, r, 3, 3);
          Ideal L = star_closure(J, v, 1);
          ok &= ideal_subset(J, L);
          ok &= ideal_subset(multiply(v, L), bracket_power(L, 1));
          ok &= ideal_equal(star_closure(L, v, 1), L);
        }

        std::vector<Monomial> mons;
        for (const Monomial& m : tutil::monomials_up_to(r, 3)) {
          if (!m.is_one()) mons.push_back(m);
        }
        // Multipliers of degree <= p - 1 keep every closure iterate inside
        // the degree <= 3 monomial lattice the brute force ranges over.
        std::vector<Monomial> small;
        for (const Monomial& m : mons) {
          if (m.degree() <= std::int64_t(r->characteristic()) - 1) small.push_back(m);
        }
        auto mono_ideal = [&](std::size_t mask) {
          std::vector<Polynomial> gens;
          for (std::size_t i = 0; i < mons.size(); ++i) {
            if (mask & (std::size_t(1) << i)) {
              gens.push_back(Polynomial::from_terms(r, {{mons[i], 1}}));
            }
          }
          return Ideal(r, std::move(gens));
        };
        std::uniform_int_distribution<std::size_t> pick_mask(
            1, (std::size_t(1) << mons.size()) - 1);
        std::uniform_int_distribution<std::size_t> pick_mon(0, small.size() - 1);
        // The stable candidates are intersection-closed and include the whole
        // ring, so the closure must equal the meet of every candidate that
        // contains J.
        for (int t = 0; t < 15; ++t, ++cases) {
          Ideal J = mono_ideal(pick_mask(rng));
          Polynomial v = Polynomial::from_terms(r, {{small[pick_mon(rng)], 1}});
          Ideal star = star_closure(J, v, 1);
          Ideal meet = Ideal::unit(r);
          for (std::size_t mask = 0; mask < (std::size_t(1) << mons.size()); ++mask) {
            Ideal L = mono_ideal(mask);
            if (!ideal_subset(J, L)) continue;
            if (!ideal_subset(multiply(v, L), bracket_power(L, 1))) continue;
            ok &= ideal_subset(star, L);
            meet = ideal_intersect(meet, L);
          }
          ok &= ideal_equal(star, meet);
        }
      }
      suite("star-closure-minimality", cases, ok);
    }

    {  // Sharp closure is idempotent on its own outputs.
      bool ok = true;
      int cases = 0, seed = 277;
      for (const RingPtr& r : rings) {
        std::mt19937 rng(seed++);
        for (int t = 0; t < 120; ++t, ++cases) {
          Polynomial v = tutil::random_nonzero_poly(rng, r, 3, 3);
          FrobeniusMultiplier mult(v, 1, Ideal::zero(r));
          Ideal L = star_closure(tutil::random_ideal(rng, r, 3, 4, 4), v, 1);
          SharpResult first = sharp_closure(L, mult);
          ok &= ideal_equal(sharp_closure(first.closure, mult).closure, first.closure);
        }
      }
      suite("sharp-idempotence", cases, ok);
    }

    {  // Stable ideals are closed under intersection and colon.
      bool ok = true;
      int cases = 0, seed = 281;
      for (const RingPtr& r : rings) {
        std::mt19937 rng(seed++);
        for (int t = 0; t < 120; ++t, ++cases) {
          Polynomial v = tutil::random_nonzero_poly(rng, r, 3, 3);
          FrobeniusMultiplier mult(v, 1, Ideal::zero(r));
          Ideal A = star_closure(tutil::random_ideal(rng, r, 3, 4, 4), v, 1);
          Ideal B = star_closure(tutil::random_ideal(rng, r, 3, 4, 4), v, 1);
          ok &= es_ideal_status(ideal_intersect(A, B), mult) == EsStatus::es_ideal;
          Ideal C = tutil::random_ideal(rng, r, 2, 3, 3);
          if (!C.is_zero_ideal()) {
            ok &= es_ideal_status(ideal_colon(A, C), mult) == EsStatus::es_ideal;
          }
        }
      }
      suite("stable-ideal-closure", cases, ok);
    }

    return all_ok;
  });

  // ------------------------------------------------------------------
  // Criterion 4: graded-annihilator chain descent and stabilization
  // persistence on both worked examples.
  // ------------------------------------------------------------------
  run_criterion("criterion 4: graded annihilator chain descent", 120.0, [&] {
    bool ok = true;
    struct Dataset {
      std::string name;
      RingPtr ring;
      Ideal defining;
      Polynomial u;
      Ideal closed;  // a star-closed stable ideal containing the defining ideal
    };
    Ideal L2 = star_closure(
        ideal_sum(multiply(s2.polys.at("c1"), s2.ideals.at("J")), s2.ideals.at("I")),
        s2.polys.at("u"), 1);
    Ideal L5 = star_closure(
        ideal_sum(Ideal::principal(s5.polys.at("c0")), s5.ideals.at("I")),
        s5.polys.at("u"), 1);
    std::vector<Dataset> datasets = {
        {"characteristic-2", s2.ring, s2.ideals.at("I"), s2.polys.at("u"), L2},
        {"characteristic-5", s5.ring, s5.ideals.at("I"), s5.polys.at("u"), L5},
    };
    for (const Dataset& d : datasets) {
      FrobeniusMultiplier mult(d.u, 1, d.defining);
      ESModuleDescriptor desc(QuotientPresentation(d.defining), d.closed);
      Ideal prev = graded_ann_component(desc, mult, 0);
      for (std::int64_t e = 1; e <= 3; ++e) {
        Ideal cur = graded_ann_component(desc, mult, e);
        ok &= check_detail(ideal_subset(multiply(d.u, cur), bracket_power(prev, 1)),
                     d.name + ": u*M^(" + std::to_string(e) + ") not inside M^(" +
                         std::to_string(e - 1) + ")^[p]");
        prev = cur;
      }
      IdealChain chain = graded_ann_chain(desc, mult, 8);
      bool stabilized = chain.stabilized_at().has_value();
      ok &= check_detail(stabilized, d.name + ": chain did not stabilize within 8 levels");
      if (stabilized) {
        std::size_t s = *chain.stabilized_at();
        std::cout << "  INFO: " << d.name << " chain stabilizes at level " << s << "\n";
        for (std::size_t k = 1; k <= 3; ++k) {
          ok &= check_detail(
              ideal_equal(graded_ann_component(desc, mult, s + k), chain.entries()[s]),
              d.name + ": stabilized value drifts at level " + std::to_string(s + k));
        }
      }
    }
    return ok;
  });

  // ------------------------------------------------------------------
  // Criterion 5: the surface that is declared rather than tested must be
  // documented in the README.
  // ------------------------------------------------------------------
  run_criterion("criterion 5: untested surface documented", 0.0, [&] {
    std::filesystem::path readme = sessions_dir.parent_path() / "README.md";
    std::ifstream in(readme);
    if (!check_detail(in.good(), "README.md not found next to the session directory")) {
      return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return check_detail(buf.str().find("## Not tested") != std::string::npos,
                  "README.md lacks the 'Not tested' section");
  });

  std::cout << (g_failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS"
                                : "ACCEPTANCE FAILURES: " + std::to_string(g_failures))
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
