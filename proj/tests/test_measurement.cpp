#include <doctest.h>

#include "support/oracles.hpp"
#include "twofold/measurement.hpp"
#include "twofold/random.hpp"

using namespace twofold;

TEST_CASE("projector matrices") {
  for (Sector s : {Sector::Plus, Sector::Minus}) {
    const double sg = sign(s);
    CHECK(oracle::max_diff(oracle::Dense::diag({sg, 0}), make_projector(s, 0).matrix) == 0.0);
    CHECK(oracle::max_diff(oracle::Dense::diag({0, sg}), make_projector(s, 1).matrix) == 0.0);
    CHECK(make_projector(s, 0).intrinsic().trace() == cplx(1));
  }
  try {
    make_projector(Sector::Plus, 2);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("projector orthogonality") {
  for (Sector s : {Sector::Plus, Sector::Minus})
    for (int mu = 0; mu < 2; ++mu)
      for (int nu = 0; nu < 2; ++nu) {
        const auto pm = oracle::from(make_projector(s, mu).intrinsic());
        const auto pn = oracle::from(make_projector(s, nu).intrinsic());
        const auto expect = mu == nu ? pn : oracle::Dense(2, 2);
        CHECK(oracle::max_diff(oracle::mul(pm, pn), expect) == 0.0);
      }
}

TEST_CASE("Born weights and signed values") {
  const SectorVector v{Sector::Minus, CVec2(0.6, cplx(0, 0.8))};
  CHECK(signed_outcome_value(v, 0) == doctest::Approx(-0.36));
  CHECK(signed_outcome_value(v, 1) == doctest::Approx(-0.64));
  const auto w = measure_probabilities(v);
  CHECK(w[0] == doctest::Approx(0.36));
  CHECK(w[1] == doctest::Approx(0.64));
  CHECK_THROWS_AS(measure_probabilities(SectorVector{Sector::Plus, CVec2(1, 1)}), Error);
}

TEST_CASE("reduction and repeat measurement") {
  Sampler rng(50);
  for (int k = 0; k < 100; ++k)
    for (Sector s : {Sector::Plus, Sector::Minus}) {
      const SectorVector v{s, rng.unit_vector2()};
      for (int mu = 0; mu < 2; ++mu) {
        const SectorVector r = reduce_state(v, mu);
        const auto w = measure_probabilities(r);
        CHECK(w[mu] == 1.0);
        CHECK(w[1 - mu] == 0.0);
        // Phase of the surviving component is kept.
        CHECK(std::abs(std::arg(r.components(mu)) - std::arg(v.components(mu))) < 1e-14);
      }
    }
  try {
    reduce_state(SectorVector{Sector::Plus, CVec2(1, 0)}, 1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroProbabilityOutcome);
  }
}

TEST_CASE("completeness equals total weight") {
  Sampler rng(51);
  for (int k = 0; k < 100; ++k)
    for (Sector s : {Sector::Plus, Sector::Minus}) {
      const SectorVector v{s, rng.unit_vector2()};
      CHECK(std::abs(completeness_check(density_from_state(v)) - 1.0) < 1e-12);
    }
  CHECK(completeness_check(maximally_mixed(Sector::Minus)) == doctest::Approx(1.0));
}

TEST_CASE("composite measurement replaces one factor") {
  const SectorVector p{Sector::Plus, CVec2(0.6, 0.8)};
  const SectorVector m{Sector::Minus, CVec2(cplx(0, 1), 0)};
  const CompositeState cs = compose({p, m});
  const CompositeState after = composite_measure(cs, 0, 1);
  CHECK(after.component({1, 0}) == cplx(0, 1));
  CHECK(std::abs(after.amplitude.norm() - 1.0) < 1e-15);
  CHECK_THROWS_AS(composite_measure(cs, 2, 0), Error);
  CHECK_THROWS_AS(composite_measure(cs, 1, 1), Error);
}

TEST_CASE("degenerate spectra do not reduce") {
  const Observable charge = make_charge(1.0);
  for (Sector s : {Sector::Plus, Sector::Minus}) {
    const auto ps = observable_projectors(charge.restriction(s));
    REQUIRE(ps.size() == 1);
    CHECK(max_abs_diff(ps[0].intrinsic, CMat2::Identity()) < 1e-14);
    const SectorVector v{s, CVec2(0.6, cplx(0, 0.8))};
    CHECK(max_abs_diff(reduce_by_projector(v, ps[0]).components, v.components) < 1e-14);
  }
  const auto spin = observable_projectors(make_spin().plus);
  REQUIRE(spin.size() == 2);
  CHECK(spin[0].eigenvalue == doctest::Approx(0.5));
  const SectorVector e1{Sector::Plus, CVec2(0, 1)};
  CHECK_THROWS_AS(reduce_by_projector(e1, spin[0]), Error);
}
