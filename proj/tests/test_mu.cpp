#include <doctest.h>

#include <cmath>

#include "catalog.h"
#include "error.h"
#include "mu.h"
#include "oracles.h"
#include "search.h"

using namespace rupert;

namespace {

constexpr double kTau = 6.283185307179586;

}  // namespace

TEST_CASE("the identity passage scores exactly one") {
  for (const char* name : {"tetrahedron", "cube", "icosahedron"}) {
    const Polyhedron p = builtin(name);
    const TermTable tt = evaluate(p, Passage{});
    CHECK(tt.mu == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tt.argmin >= 0);
    CHECK(!tt.active.empty());
  }
}

TEST_CASE("term table bookkeeping is consistent") {
  const Polyhedron p = builtin("octahedron");
  TrialRng rng(21, 0);
  for (int k = 0; k < 20; ++k) {
    const Passage x = sample_init(rng);
    const TermTable tt = evaluate(p, x);
    REQUIRE(tt.argmin >= 0);
    REQUIRE(tt.argmin < static_cast<int>(tt.terms.size()));
    CHECK(tt.mu == tt.terms[tt.argmin].value);
    CHECK(tt.mu > 0.0);
    for (const MuTerm& t : tt.terms) {
      CHECK(t.value >= tt.mu);
      CHECK(t.value == doctest::Approx(1.0 / dot(tt.outer.faces[t.j].w, tt.inner[t.i]))
                           .epsilon(1e-15));
    }
    bool argmin_active = false;
    for (int id : tt.active) {
      CHECK(tt.terms[id].value <= tt.mu * (1.0 + 1e-9));
      if (id == tt.argmin) argmin_active = true;
    }
    CHECK(argmin_active);
  }
}

TEST_CASE("mu agrees with the containment-bisection oracle") {
  TrialRng rng(22, 0);
  for (const char* name : {"tetrahedron", "cube", "octahedron", "icosahedron"}) {
    const Polyhedron p = builtin(name);
    for (int k = 0; k < 30; ++k) {
      const Passage x = sample_init(rng);
      const TermTable tt = evaluate(p, x);
      const double ref = oracle::mu_by_containment(p.vertices, x);
      CHECK(std::abs(tt.mu - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("mu is periodic in every angle") {
  const Polyhedron p = builtin("dodecahedron");
  TrialRng rng(23, 0);
  for (int k = 0; k < 10; ++k) {
    const Passage x = sample_init(rng);
    const double base = evaluate(p, x).mu;
    for (int angle : {2, 3, 4, 5, 6}) {
      Vec7 shifted = to_vec7(x);
      shifted[angle] += kTau;
      CHECK(evaluate(p, to_passage(shifted)).mu == doctest::Approx(base).epsilon(1e-12));
    }
  }
}

TEST_CASE("term gradients match central finite differences") {
  TrialRng rng(24, 0);
  int checked = 0;
  for (const char* name : {"tetrahedron", "cube", "octahedron", "icosahedron"}) {
    const Polyhedron p = builtin(name);
    for (int k = 0; k < 25; ++k) {
      const Passage x = sample_init(rng);
      const TermTable tt = evaluate(p, x);
      // sample a moderately scaled term: the FD stencil is only trustworthy
      // away from vanishing inner products
      const int pick = static_cast<int>(rng.next() % tt.terms.size());
      const MuTerm& term = tt.terms[pick];
      if (term.value > 10.0 * tt.mu) continue;
      const Vec7 grad = term_gradient(p, x, tt, pick);
      const auto fd = oracle::term_gradient_fd(p, x, term.i, tt.outer.faces[term.j].a,
                                               tt.outer.faces[term.j].b);
      if (!fd) continue;
      CHECK(norm(grad - *fd) <= 1e-6 * std::max(1.0, norm(grad)));
      ++checked;
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("the two term_gradient overloads agree") {
  const Polyhedron p = builtin("cube");
  TrialRng rng(25, 0);
  const Passage x = sample_init(rng);
  const TermTable tt = evaluate(p, x);
  for (int pick : {0, static_cast<int>(tt.terms.size()) / 2}) {
    const Vec7 a = term_gradient(p, x, tt, pick);
    const Vec7 b = term_gradient(p, x, tt.terms[pick].i, tt.terms[pick].j);
    CHECK(norm(a - b) == 0.0);
  }
}

TEST_CASE("batched gradients equal one-at-a-time gradients") {
  const Polyhedron p = builtin("icosahedron");
  TrialRng rng(26, 0);
  const Passage x = sample_init(rng);
  const TermTable tt = evaluate(p, x);
  std::vector<int> ids;
  for (int t = 0; t < static_cast<int>(tt.terms.size()); t += 3) ids.push_back(t);
  const std::vector<Vec7> batch = term_gradients(p, x, tt, ids);
  REQUIRE(batch.size() == ids.size());
  for (size_t k = 0; k < ids.size(); ++k)
    CHECK(norm(batch[k] - term_gradient(p, x, tt, ids[k])) == 0.0);
}

TEST_CASE("directional derivatives match one-sided difference extrapolation") {
  TrialRng rng(27, 0);
  int checked = 0;
  for (const char* name : {"tetrahedron", "octahedron", "icosahedron"}) {
    const Polyhedron p = builtin(name);
    for (int k = 0; k < 25; ++k) {
      const Passage x = sample_init(rng);
      Vec7 d{};
      for (int i = 0; i < 7; ++i) d[i] = rng.uniform(-1.0, 1.0);
      const double dn = norm(d);
      if (dn == 0.0) continue;
      d = (1.0 / dn) * d;
      const auto fd = oracle::directional_derivative_fd(p, x, d);
      if (!fd) continue;  // kink inside the stencil: no clean limit to compare
      const double dd = directional_derivative(p, x, d);
      CHECK(std::abs(dd - *fd) <= 1e-4 * std::max(1.0, std::abs(dd)));
      ++checked;
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("gradient of the minimum term tracks mu along its own direction") {
  const Polyhedron p = builtin("tetrahedron");
  TrialRng rng(28, 0);
  const Passage x = sample_init(rng);
  const TermTable tt = evaluate(p, x);
  REQUIRE(tt.active.size() == 1);  // ties have measure zero at a random draw
  const Vec7 g = term_gradient(p, x, tt, tt.argmin);
  // with one active term, mu is smooth here and g is its ascent direction
  const double dd = directional_derivative(p, x, g);
  CHECK(dd == doctest::Approx(dot(g, g)).epsilon(1e-12));
}
