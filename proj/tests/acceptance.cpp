// Acceptance criteria runner. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "support/oracles.hpp"
#include "support/rational.hpp"
#include "twofold/correlations.hpp"
#include "twofold/density.hpp"
#include "twofold/group.hpp"
#include "twofold/measurement.hpp"
#include "twofold/observables.hpp"
#include "twofold/random.hpp"

using namespace twofold;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects named sub-results; a criterion passes when every one does.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failures_.push_back(what);
    }
  }
  void below(double residual, double tol, const std::string& what) {
    worst_ = std::max(worst_, residual);
    std::ostringstream os;
    os << what << " residual " << residual;
    expect(residual < tol, os.str());
  }
  void exact(double residual, const std::string& what) {
    std::ostringstream os;
    os << what << " residual " << residual;
    expect(residual == 0.0, os.str());
  }
  void note(const std::string& s) { notes_.push_back(s); }

  Outcome outcome() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) os << (i ? "; " : "") << failures_[i];
    if (failures_.empty()) {
      os << "worst residual " << worst_;
      for (const auto& n : notes_) os << "; " << n;
    }
    return {pass_, os.str()};
  }

 private:
  bool pass_ = true;
  double worst_ = 0.0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

oracle::Dense lit(int n, std::initializer_list<double> v) {
  oracle::Dense d(n, n);
  int i = 0;
  for (double x : v) d.data[i++] = x;
  return d;
}

double identity_diff(const oracle::Dense& a) { return oracle::max_diff(a, oracle::Dense::identity(a.rows)); }

CMat2 metric2(Sector s) { return sector_metric(s); }

constexpr std::array<Sector, 2> kSectors{Sector::Plus, Sector::Minus};

// 1. Exact matrix reproduction.
Outcome exact_matrices() {
  Tally t;
  t.exact(oracle::max_diff(lit(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1}), metric_g()), "g");
  t.exact(oracle::max_diff(lit(2, {1, 0, 0, 1}), metric2(Sector::Plus)), "g+");
  t.exact(oracle::max_diff(lit(2, {-1, 0, 0, -1}), metric2(Sector::Minus)), "g-");
  for (Sector s : kSectors) t.exact(oracle::max_diff(lit(2, {1, 0, 0, 1}), sector_delta(s)), "Delta");

  for (double q : {1.0 / 3.0, 2.0 / 3.0, 1.0}) {
    const Observable c = make_charge(q);
    for (Sector s : kSectors) t.exact(oracle::max_diff(lit(2, {q, 0, 0, q}), c.restriction(s).covariant()), "charge");
  }
  const ChargeConjugation cc = make_charge_conjugation();
  t.exact(oracle::max_diff(lit(4, {0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0}), cc.covariant4()), "conjugation");
  t.exact(oracle::max_diff(lit(2, {0, -1, -1, 0}), cc.covariant(Sector::Plus)), "conjugation block +");
  t.exact(oracle::max_diff(lit(2, {0, 1, 1, 0}), cc.covariant(Sector::Minus)), "conjugation block -");

  const Observable spin = make_spin();
  t.exact(oracle::max_diff(lit(4, {0.5, 0, 0, 0, 0, -0.5, 0, 0, 0, 0, -0.5, 0, 0, 0, 0, 0.5}), spin.covariant4()), "spin");
  t.exact(oracle::max_diff(lit(2, {0.5, 0, 0, -0.5}), spin.plus.covariant()), "spin block +");
  t.exact(oracle::max_diff(lit(2, {-0.5, 0, 0, 0.5}), spin.minus.covariant()), "spin block -");
  const Observable pol = make_polarization();
  t.exact(oracle::max_diff(lit(2, {1, 0, 0, -1}), pol.plus.covariant()), "polarization +");
  t.exact(oracle::max_diff(lit(2, {-1, 0, 0, 1}), pol.minus.covariant()), "polarization -");

  const double E = 2.5;
  for (Sector s : kSectors) {
    t.exact(oracle::max_diff(lit(2, {E, 0, 0, -E}), make_energy(E, EnergyBranch::I).restriction(s).covariant()), "H_I");
    t.exact(oracle::max_diff(lit(2, {-E, 0, 0, E}), make_energy(E, EnergyBranch::II).restriction(s).covariant()), "H_II");
  }
  t.exact(oracle::max_diff(lit(4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                           make_virtual(Sector::Plus).covariant4()), "virtual +");
  t.exact(oracle::max_diff(lit(4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0}),
                           make_virtual(Sector::Minus).covariant4()), "virtual -");
  t.exact(oracle::max_diff(lit(2, {0.5, 0, 0, 0.5}), maximally_mixed(Sector::Plus).covariant()), "mixed +");
  t.exact(oracle::max_diff(lit(2, {-0.5, 0, 0, -0.5}), maximally_mixed(Sector::Minus).covariant()), "mixed -");
  for (Sector s : kSectors) {
    const double sg = sign(s);
    t.exact(oracle::max_diff(lit(2, {sg, 0, 0, 0}), make_projector(s, 0).matrix), "pi(0)");
    t.exact(oracle::max_diff(lit(2, {0, 0, 0, sg}), make_projector(s, 1).matrix), "pi(1)");
  }
  t.exact(oracle::max_diff(lit(4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0}), metric_G()), "G");
  const double h = 1.0 / std::sqrt(2.0);
  t.below(oracle::max_diff(lit(4, {h, 0, -h, 0, 0, h, 0, -h, h, 0, h, 0, 0, h, 0, h}), conversion_matrix()), 1e-12, "M");
  return t.outcome();
}

// 2. Metric identities.
Outcome metric_identities() {
  Tally t;
  Sampler rng(1001);
  const auto g = oracle::g4();
  t.exact(identity_diff(oracle::mul(g, g)), "g^2 = I");
  t.exact(identity_diff(oracle::from(CMat4(metric_g() * metric_g()))), "library g^2 = I");
  double rCorr = 0, rProj = 0, rSplit = 0, rEntries = 0;
  for (int k = 0; k < 1000; ++k) {
    const CVec4 a = rng.vector4(), b = rng.vector4();
    const auto oa = oracle::from(a), ob = oracle::from(b);
    // <<Φ|Ψ>> = <Φ|g||Ψ>_g.
    const cplx hil = oracle::form(oa, oracle::Dense::identity(4), ob);
    rCorr = std::max(rCorr, std::abs(indefinite_inner(CVec4(a * metric_g()), b) - hil));
    rCorr = std::max(rCorr, std::abs(hilbert_inner(a, b) - hil));
    // <Λ|P||Λ>_g = <Λ||P|Λ>_g for both projectors.
    for (Sector s : kSectors) {
      const auto P = oracle::from(projector(s));
      const cplx left = oracle::form(oracle::mul(oa, P), g, oa);
      const cplx right = oracle::form(oa, g, oracle::mul(oa, oracle::adjoint(P)));
      rProj = std::max(rProj, std::abs(left - right));
      rProj = std::max(rProj, max_abs_diff(star4(projector(s)), projector(s)));
    }
    // <Φ|Ψ>_g = <<Φ+|Ψ+>> - <<Φ-|Ψ->>.
    const cplx split = hilbert_inner(embed(project(a, Sector::Plus)), embed(project(b, Sector::Plus))) -
                       hilbert_inner(embed(project(a, Sector::Minus)), embed(project(b, Sector::Minus)));
    rSplit = std::max(rSplit, std::abs(split - oracle::form(oa, g, ob)));
    rSplit = std::max(rSplit, std::abs(split - indefinite_inner(a, b)));
    // g = Δ g* Δ and A_mn = g A*^ls g on random restrictions.
    for (Sector s : kSectors) {
      const auto gs = oracle::from(metric2(s));
      const auto D = oracle::from(CMat2(sector_delta(s)));
      rEntries = std::max(rEntries, oracle::max_diff(oracle::mul(D, gs, D), metric2(s)));
      const Restriction r{s, rng.matrix2(), {}};
      rEntries = std::max(rEntries, oracle::max_diff(oracle::mul(gs, oracle::from(r.contravariant()), gs), r.covariant()));
      rEntries = std::max(rEntries, oracle::max_diff(oracle::mul(gs, oracle::from(r.covariant()), gs), r.contravariant()));
    }
  }
  t.below(rCorr, 1e-12, "inner-product correlation");
  t.below(rProj, 1e-12, "projector pseudo-Hermiticity");
  t.below(rSplit, 1e-12, "sector split");
  t.below(rEntries, 1e-12, "metric-entry relations");
  t.note("1000 samples");
  return t.outcome();
}

// 3. Group membership and realization conversion.
Outcome group_membership() {
  Tally t;
  Sampler rng(1002);
  const auto start = std::chrono::steady_clock::now();
  double worstG = 0, worstg = 0, worstConv = 0;
  bool allPass = true;
  for (int k = 0; k < 500; ++k) {
    const LorentzParam a = make_lorentz_param(rng.sl2c());
    const Translation tr = make_translation(rng.translation());
    const GroupElement G = poincare(a, tr, Realization::GReal);
    const GroupElement g = poincare(a, tr, Realization::gReal);
    const MembershipReport rG = verify_membership(G, 1e-10);
    const MembershipReport rg = verify_membership(g, 1e-10);
    allPass = allPass && rG.pass() && rg.pass();
    worstG = std::max(worstG, rG.worst());
    worstg = std::max(worstg, rg.worst());
    worstConv = std::max(worstConv, max_abs_diff(convert(g).matrix, G.matrix));
    worstConv = std::max(worstConv, max_abs_diff(convert(G).matrix, g.matrix));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(allPass, "membership checks");
  t.below(worstG, 1e-10, "G-realization");
  t.below(worstg, 1e-10, "g-realization");
  t.below(worstConv, 1e-10, "conversion");
  std::ostringstream os;
  os << "runtime " << secs << " s";
  t.expect(secs < 2.0, os.str());
  t.note(os.str());
  return t.outcome();
}

// 4. Unitary intersection and translation block determinants.
Outcome unitary_intersection() {
  Tally t;
  Sampler rng(1003);
  double worstU = 0, worstP = 0;
  for (int k = 0; k < 500; ++k) {
    const GroupElement e = unitary_poincare(rng.special_unitary2(), rng.admissible_w());
    worstU = std::max(worstU, unitarity_residual(e.matrix));
    worstP = std::max(worstP, verify_membership(e, 1e-10).worst());
  }
  t.below(worstU, 1e-10, "unitarity");
  t.below(worstP, 1e-10, "pseudo-unitarity and det");

  const auto id = translation_block_determinants(CMat2::Identity());
  t.below(std::abs(id.plus - cplx(0, 1)), 1e-12, "W = I det block");
  t.below(std::abs(id.T0 - std::sqrt(2.0)), 1e-12, "W = I T0");
  for (int k = 0; k < 20; ++k) {
    CMat2 w = rng.admissible_w();
    if (std::abs(w.determinant() + 1.0) > 1e-12) continue;
    const auto d = translation_block_determinants(w);
    t.below(std::abs(d.plus - 1.0), 1e-12, "det W = -1 det block");
    t.below(std::abs(d.T0), 1e-12, "det W = -1 T0");
  }
  CMat2 s3;
  s3 << 1, 0, 0, -1;
  const auto d3 = translation_block_determinants(s3);
  t.below(std::abs(d3.plus - 1.0), 1e-12, "sigma3 det block");
  t.below(std::abs(d3.T0), 1e-12, "sigma3 T0");
  return t.outcome();
}

// 5. Exact charge-conjugation ledger.
Outcome conjugation_ledger_exact() {
  Tally t;
  using RV = RowVec<Rational, 2>;
  const auto c = make_charge_conjugation<Rational>();
  std::vector<RV> rows;
  for (auto [x, y] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(3, 5), Rational(4, 5)},
           {Rational(-5, 13), Rational(12, 13)}, {Rational(2, 7), Rational(-1, 3)}}) {
    RV r;
    r << x, y;
    rows.push_back(r);
  }
  int entries = 0;
  for (const Rational q : {Rational(1, 3), Rational(2, 3), Rational(1)}) {
    for (const auto& e : conjugation_ledger(c, q, rows, Rational(0))) {
      ++entries;
      t.expect(e.pass && e.residual == Rational(0), e.id + " q=" + std::to_string(boost::rational_cast<double>(q)));
    }
  }
  t.note(std::to_string(entries) + " exact entries");
  return t.outcome();
}

// 6. State and probability laws.
Outcome state_laws() {
  Tally t;
  Sampler rng(1006);
  double rBorn = 0, rIndef = 0, rHil = 0, rEvo = 0;
  for (int k = 0; k < 1000; ++k) {
    const PairState st = make_pair_state(rng.vector2(), rng.vector2());
    const auto full = oracle::from(st.full());
    rIndef = std::max(rIndef, std::abs(oracle::form(full, oracle::g4(), full)));
    rHil = std::max(rHil, std::abs(oracle::form(full, oracle::Dense::identity(4), full) - 2.0));
    const auto u = make_evolution(rng.unitary2(), rng.unitary2());
    const PairState out = evolve(st, u);
    for (Sector s : kSectors) {
      const auto w = born_probabilities(st, s);
      rBorn = std::max(rBorn, std::abs(w[0] + w[1] - 1.0));
      const auto w2 = born_probabilities(out, s);
      rEvo = std::max(rEvo, std::abs(w2[0] + w2[1] - 1.0));
      rEvo = std::max(rEvo, std::abs(hilbert_norm2(out.piece(s)) - 1.0));
    }
    const auto evolved = oracle::from(out.full());
    rEvo = std::max(rEvo, std::abs(oracle::form(evolved, oracle::g4(), evolved)));
  }
  t.below(rBorn, 1e-12, "Born sum");
  t.below(rIndef, 1e-12, "indefinite norm 0");
  t.below(rHil, 1e-12, "Hilbert norm 2");
  t.below(rEvo, 1e-12, "evolution normalization");
  return t.outcome();
}

// 7. Density and entropy.
Outcome density_entropy() {
  Tally t;
  Sampler rng(1007);
  double rPure = 0, rRoute = 0;
  for (int k = 0; k < 500; ++k)
    for (Sector s : kSectors) {
      const SectorVector v{s, rng.unit_vector2()};
      const DensityOperator d = density_from_state(v);
      rPure = std::max(rPure, std::abs(entropy(d)));
      const Restriction a{s, rng.hermitian2(), {}};
      rRoute = std::max(rRoute, std::abs(density_expectation(d, a) - expectation(a, v)));
    }
  t.below(rPure, 1e-12, "pure-state entropy");
  for (Sector s : kSectors) t.below(std::abs(entropy(maximally_mixed(s)) - 1.0), 1e-12, "maximally mixed entropy");
  t.below(rRoute, 1e-12, "expectation routes");

  double rTrace = 0;
  int configs = 0;
  for (int n = 1; n <= 6; ++n)
    for (int nm = 0; nm <= n; ++nm) {
      std::vector<SectorVector> f;
      for (int k = 0; k < n - nm; ++k) f.push_back({Sector::Plus, rng.unit_vector2()});
      for (int k = 0; k < nm; ++k) f.push_back({Sector::Minus, rng.unit_vector2()});
      const CompositeDensity cd = composite_density(compose(f));
      rTrace = std::max(rTrace, std::abs(composite_trace(cd) - 1.0));
      // Dense oracle: trace of the Kronecker product of Φ†Φ.
      oracle::Dense rho = oracle::Dense::identity(1);
      for (const auto& v : f) {
        const auto row = oracle::from(v.components);
        rho = oracle::kron(rho, oracle::mul(oracle::adjoint(row), row));
      }
      rTrace = std::max(rTrace, std::abs(oracle::trace(rho) - 1.0));
      ++configs;
    }
  t.below(rTrace, 1e-12, "composite trace");
  t.note(std::to_string(configs) + " composite shapes");
  return t.outcome();
}

// 8. Composite sign law against a dense Kronecker contraction.
Outcome sign_law() {
  Tally t;
  const Observable pol = make_polarization();
  const Observable spin = make_spin();
  const std::array<CVec2, 4> rows{CVec2(1, 0), CVec2(0, 1), CVec2(cplx(0, 1), 0), CVec2(0, -1)};
  long cases = 0;
  for (int np = 0; np <= 3; ++np)
    for (int nm = 0; nm <= 3; ++nm) {
      const int n = np + nm;
      if (n == 0) continue;
      int combos = 1;
      for (int k = 0; k < n; ++k) combos *= 4;
      for (int code = 0; code < combos; ++code) {
        std::vector<SectorVector> f;
        int c = code;
        for (int k = 0; k < n; ++k, c /= 4) f.push_back({k < np ? Sector::Plus : Sector::Minus, rows[c % 4]});
        const CompositeState cs = compose(f);
        const auto amp = oracle::from(cs.amplitude);
        for (int j = 0; j < n; ++j)
          for (const Observable* a : {&pol, &spin}) {
            oracle::Dense op = oracle::Dense::identity(1);
            for (int k = 0; k < n; ++k) {
              const Sector s = f[k].sector;
              op = oracle::kron(op, oracle::from(k == j ? a->restriction(s).covariant() : metric2(s)));
            }
            const cplx dense = oracle::form(amp, op, amp);
            const int predicted = f[j].sector == Sector::Plus ? (nm % 2 ? -1 : 1) : ((nm - 1) % 2 ? -1 : 1);
            const double single = expectation(a->restriction(f[j].sector), f[j]);
            t.exact(std::abs(embed_single(cs, j, *a) - dense), "embedded value");
            t.exact(std::abs(dense - double(predicted) * single), "predicted sign");
            t.expect(embed_sign(cs, j) == predicted, "embed_sign");
            ++cases;
          }
      }
    }
  t.note(std::to_string(cases) + " exact cases");
  return t.outcome();
}

// 9. Measurement.
Outcome measurement() {
  Tally t;
  for (Sector s : kSectors)
    for (int mu = 0; mu < 2; ++mu)
      for (int nu = 0; nu < 2; ++nu) {
        const auto pm = oracle::from(make_projector(s, mu).intrinsic());
        const auto pn = oracle::from(make_projector(s, nu).intrinsic());
        t.exact(oracle::max_diff(oracle::mul(pm, pn), mu == nu ? pn : oracle::Dense(2, 2)), "orthogonality");
      }
  Sampler rng(1009);
  double rComp = 0;
  bool repeat = true;
  for (int k = 0; k < 500; ++k)
    for (Sector s : kSectors) {
      const SectorVector v{s, rng.unit_vector2()};
      rComp = std::max(rComp, std::abs(completeness_check(density_from_state(v)) - 1.0));
      for (int mu = 0; mu < 2; ++mu) {
        const auto w = measure_probabilities(reduce_state(v, mu));
        repeat = repeat && w[mu] == 1.0 && w[1 - mu] == 0.0;
      }
    }
  t.below(rComp, 1e-12, "completeness");
  t.expect(repeat, "repeat probability exactly 1");

  const Observable charge = make_charge(1.0);
  for (Sector s : kSectors) {
    const auto ps = observable_projectors(charge.restriction(s));
    t.expect(ps.size() == 1, "degenerate spectrum has one eigenspace");
    const SectorVector v{s, rng.unit_vector2()};
    t.below(max_abs_diff(reduce_by_projector(v, ps.front()).components, v.components), 1e-14, "no reduction");
    const auto sp = observable_projectors(make_spin().restriction(s));
    t.expect(sp.size() == 2, "spin has two eigenspaces");
    t.expect(max_abs_diff(reduce_by_projector(v, sp.front()).components, v.components) > 1e-3,
             "non-degenerate spectrum reduces");
  }
  return t.outcome();
}

// 10. Frame correlations, with negative controls.
Outcome frame_correlations() {
  Tally t;
  Sampler rng(1010);
  const std::vector<std::string> ids{"frame.metric",           "frame.delta",     "frame.amplitude",
                                     "frame.trace",            "frame.commutator_entries",
                                     "frame.commutator_operator", "frame.degenerate", "frame.diag_det"};
  std::map<std::string, double> worst;
  for (int k = 0; k < 200; ++k) {
    const bool withW = k % 2 == 1;
    const DynElement e = withW ? dyn_element(rng.special_unitary2(), rng.admissible_w())
                               : dyn_element(rng.special_unitary2());
    for (const auto& c : invariance_report(FrameTransform{e, FrameMode::OperatorInvariant}, 1e-10))
      worst[c.id] = std::max(worst[c.id], c.residual);
  }
  for (const auto& id : ids) {
    t.expect(worst.count(id) == 1, id + " present");
    t.below(worst[id], 1e-10, id);
  }

  // Negative control: a non-unitary block must break each check.
  CMat2 bad;
  bad << 2, 1, 0, 1;
  const auto report = invariance_report(FrameTransform{DynElement::unchecked(bad, bad), FrameMode::OperatorInvariant}, 1e-10);
  int controls = 0;
  for (const auto& id : ids)
    for (const auto& c : report)
      if (c.id == id) {
        t.expect(!c.pass, "negative control " + id);
        ++controls;
      }
  t.expect(controls == int(ids.size()), "negative controls present");

  // A non-degenerate spectrum is not invariant under a non-diagonal element.
  const DynElement rot = dyn_element(rng.special_unitary2());
  double moved = 0;
  for (Sector s : kSectors) {
    const CMat2& u = rot.block(s);
    const CMat2 cov = make_spin().restriction(s).covariant();
    moved = std::max(moved, max_abs_diff(CMat2(u * cov * u.adjoint()), cov));
  }
  t.expect(moved > 1e-10, "spin entries move under a non-diagonal element");
  t.note(std::to_string(ids.size()) + " checks x 200 elements, negative controls failed as required");
  return t.outcome();
}

int run_command(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// 11. CLI determinism.
Outcome cli_determinism() {
  Tally t;
  const std::string bin = TWOFOLD_BIN;
  for (const char* name : {"composite_sampled.json", "frame_transform.json"}) {
    const std::string in = std::string(TWOFOLD_SCENARIOS) + "/" + name;
    const std::string a = std::string("acceptance_a_") + name;
    const std::string b = std::string("acceptance_b_") + name;
    t.expect(run_command("'" + bin + "' scenario run '" + in + "' --out " + a + " > /dev/null") == 0,
             std::string("scenario exit ") + name);
    t.expect(run_command("'" + bin + "' scenario run '" + in + "' --out " + b + " > /dev/null") == 0,
             std::string("scenario exit ") + name);
    const std::string ra = slurp(a);
    t.expect(!ra.empty() && ra == slurp(b), std::string("identical bytes ") + name);
    std::remove(a.c_str());
    std::remove(b.c_str());
  }
  t.expect(run_command("'" + bin + "' verify > /dev/null") == 0, "verify exit 0");
  return t.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exact matrix reproduction", exact_matrices},
      {"metric identities", metric_identities},
      {"group membership and conversion", group_membership},
      {"unitary intersection", unitary_intersection},
      {"exact charge-conjugation ledger", conjugation_ledger_exact},
      {"state and probability laws", state_laws},
      {"density and entropy", density_entropy},
      {"composite sign law", sign_law},
      {"measurement", measurement},
      {"frame correlations", frame_correlations},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << o.detail << ")\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
