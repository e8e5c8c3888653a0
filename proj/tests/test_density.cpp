#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "twofold/density.hpp"
#include "twofold/random.hpp"

using namespace twofold;

namespace {

SectorVector random_factor(Sampler& rng, Sector s) { return SectorVector{s, rng.unit_vector2()}; }

std::vector<SectorVector> random_factors(Sampler& rng, int nPlus, int nMinus) {
  std::vector<SectorVector> f;
  for (int k = 0; k < nPlus; ++k) f.push_back(random_factor(rng, Sector::Plus));
  for (int k = 0; k < nMinus; ++k) f.push_back(random_factor(rng, Sector::Minus));
  return f;
}

}  // namespace

TEST_CASE("maximally mixed density entries") {
  for (Sector s : {Sector::Plus, Sector::Minus}) {
    const DensityOperator d = maximally_mixed(s);
    const double h = 0.5 * sign(s);
    CHECK(oracle::max_diff(oracle::Dense::diag({h, h}), d.covariant()) == 0.0);
    CHECK(d.intrinsic.trace() == cplx(1.0));
    CHECK(entropy(d) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_FALSE(d.pure);
  }
}

TEST_CASE("pure densities") {
  Sampler rng(40);
  for (int k = 0; k < 100; ++k) {
    for (Sector s : {Sector::Plus, Sector::Minus}) {
      const SectorVector v = random_factor(rng, s);
      const DensityOperator d = density_from_state(v);
      CHECK(d.pure);
      CHECK(std::abs(d.intrinsic.trace() - 1.0) < 1e-14);
      CHECK(std::abs(entropy(d)) < 1e-12);
      // Covariant entries carry the sector sign: ρ_μν = ±conj(Φ_μ) Φ_ν.
      const auto ref = oracle::scale(oracle::mul(oracle::adjoint(oracle::from(v.components)), oracle::from(v.components)),
                                     double(sign(s)));
      CHECK(oracle::max_diff(ref, d.covariant()) < 1e-15);
    }
  }
  CHECK_THROWS_AS(density_from_state(SectorVector{Sector::Plus, CVec2(1, 1)}), Error);
}

TEST_CASE("make_density validates") {
  CMat2 m;
  m << 0.7, 0.1, 0.1, 0.3;
  CHECK_FALSE(make_density(Sector::Minus, m).pure);
  CMat2 neg;
  neg << 1.5, 0, 0, -0.5;
  CMat2 nonh;
  nonh << 0.5, 0.2, 0, 0.5;
  CMat2 trace2 = CMat2::Identity();
  for (const CMat2& bad : {neg, nonh, trace2}) {
    try {
      make_density(Sector::Plus, bad);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidDensity);
    }
  }
}

TEST_CASE("expectation through the density matches the state route") {
  Sampler rng(41);
  for (int k = 0; k < 200; ++k) {
    for (Sector s : {Sector::Plus, Sector::Minus}) {
      const SectorVector v = random_factor(rng, s);
      const Restriction a{s, rng.hermitian2(), {}};
      const auto row = oracle::from(v.components);
      const double ref = oracle::form(row, oracle::from(a.covariant()), row).real();
      CHECK(std::abs(density_expectation(density_from_state(v), a) - ref) < 1e-12);
    }
  }
}

TEST_CASE("density evolution") {
  Sampler rng(42);
  const auto u = make_evolution(rng.unitary2(), rng.unitary2());
  for (Sector s : {Sector::Plus, Sector::Minus}) {
    const SectorVector v = random_factor(rng, s);
    const DensityOperator d = evolve_density(density_from_state(v), u);
    const SectorVector w{s, v.components * u.block(s)};
    CHECK(max_abs_diff(d.intrinsic, density_from_state(w).intrinsic) < 1e-14);
    CHECK(std::abs(d.intrinsic.trace() - 1.0) < 1e-14);
    CHECK(std::abs(entropy(d)) < 1e-12);
  }
}

TEST_CASE("compose orders and normalizes") {
  const SectorVector p{Sector::Plus, CVec2(1, 0)};
  const SectorVector m{Sector::Minus, CVec2(0, 1)};
  const CompositeState cs = compose({p, m});
  CHECK(cs.nPlus == 1);
  CHECK(cs.nMinus == 1);
  CHECK(cs.component({0, 1}) == cplx(1));
  CHECK(cs.component({1, 0}) == cplx(0));
  try {
    compose({m, p});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderingViolation);
  }
  CHECK_THROWS_AS(compose({SectorVector{Sector::Plus, CVec2(1, 1)}}), Error);
  CHECK_THROWS_AS(cs.component({0}), Error);
  CHECK_THROWS_AS(cs.component({0, 2}), Error);
}

TEST_CASE("composite amplitudes match the Kronecker oracle") {
  Sampler rng(43);
  const CompositeState cs = compose(random_factors(rng, 2, 2));
  oracle::Dense amp = oracle::Dense::identity(1);
  for (const auto& f : cs.factors) amp = oracle::kron(amp, oracle::from(f.components));
  CHECK(oracle::max_diff(amp, cs.amplitude) < 1e-15);
  CHECK(std::abs(cs.component({1, 0, 1, 1}) - amp(0, 11)) < 1e-15);
}

TEST_CASE("sign law for single-slot embeddings") {
  Sampler rng(44);
  const Observable spin = make_spin();
  for (int np = 0; np <= 2; ++np)
    for (int nm = 0; nm <= 2; ++nm) {
      if (np + nm == 0) continue;
      const CompositeState cs = compose(random_factors(rng, np, nm));
      const CMatX gN = composite_metric(cs);
      for (int j = 0; j < cs.size(); ++j) {
        const SectorVector& f = cs.factors[j];
        oracle::Dense op = oracle::Dense::identity(1);
        for (int k = 0; k < cs.size(); ++k) {
          const Sector s = cs.factors[k].sector;
          op = oracle::kron(op, oracle::from(k == j ? spin.restriction(s).covariant() : CMat2(sector_metric(s))));
        }
        const auto row = oracle::from(cs.amplitude);
        const cplx dense = oracle::form(row, op, row);
        const double single = expectation(spin.restriction(f.sector), f);
        CHECK(std::abs(embed_single(cs, j, spin) - dense) < 1e-13);
        CHECK(std::abs(dense - double(embed_sign(cs, j)) * single) < 1e-13);
      }
      // The composite metric is the Kronecker product of the sector metrics.
      CHECK(std::abs(oracle::form(oracle::from(cs.amplitude), oracle::from(gN), oracle::from(cs.amplitude)) -
                     std::pow(-1.0, nm)) < 1e-13);
    }
  const CompositeState one = compose({SectorVector{Sector::Minus, CVec2(1, 0)}});
  CHECK(embed_sign(one, 0) == 1);
  CHECK_THROWS_AS(embed_single(one, 1, spin), Error);
  CHECK_THROWS_AS(composite_expectation(one, {spin, spin}), Error);
}

TEST_CASE("composite density traces") {
  Sampler rng(45);
  for (int np = 0; np <= 3; ++np)
    for (int nm = 0; nm <= 3; ++nm) {
      if (np + nm == 0) continue;
      const CompositeState cs = compose(random_factors(rng, np, nm));
      const CompositeDensity cd = composite_density(cs);
      CHECK(composite_trace(cd) == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(std::abs(cd.intrinsic_matrix().trace() - 1.0) < 1e-13);
      CHECK(composite_signed_value(cs) == doctest::Approx(std::pow(-1.0, nm)));
    }
}

TEST_CASE("partial trace keeps both traces") {
  Sampler rng(46);
  const CompositeDensity cd = composite_density(compose(random_factors(rng, 1, 2)));
  const PartialTrace pt = partial_trace(cd, 2);
  CHECK(pt.reduced.size() == 2);
  CHECK(pt.factor == doctest::Approx(1.0));
  CHECK(pt.raw_trace == doctest::Approx(1.0));
  CHECK(pt.normalized_trace == doctest::Approx(1.0));
  // Dense partial trace agrees with dropping the factor.
  const CMatX dense = partial_trace_dense(cd.intrinsic_matrix(), 4, 2, true);
  CHECK(max_abs_diff(dense, pt.reduced.intrinsic_matrix()) < 1e-14);

  try {
    partial_trace(partial_trace(pt.reduced, 0).reduced, 0);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LastFactor);
  }
  CHECK_THROWS_AS(partial_trace(cd, 3), Error);
  CHECK_THROWS_AS(partial_trace_dense(CMatX::Identity(3, 3), 2, 2, true), Error);
}

TEST_CASE("relative and mutual entropies") {
  Sampler rng(47);
  CompositeDensity pure = composite_density(compose(random_factors(rng, 1, 1)));
  CompositeDensity mixed{{maximally_mixed(Sector::Plus), maximally_mixed(Sector::Minus)}, 1.0};
  const EntropyReport r = relative_mutual_entropies(pure, mixed);
  CHECK(std::abs(r.entropy_a) < 1e-12);
  CHECK(r.entropy_b == doctest::Approx(2.0));
  // S(pure || I/4) = log2 4.
  CHECK(r.relative_ab == doctest::Approx(2.0));
  CHECK(std::abs(r.mutual_a) < 1e-12);
  CHECK(r.subadditive);
  CHECK(r.concave);
  CHECK(std::isinf(relative_mutual_entropies(mixed, pure).relative_ab));
  CompositeDensity wrong{{maximally_mixed(Sector::Plus), maximally_mixed(Sector::Plus)}, 1.0};
  CHECK_THROWS_AS(relative_mutual_entropies(pure, wrong), Error);
}
