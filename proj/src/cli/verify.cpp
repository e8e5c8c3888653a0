#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "twofold/cli.hpp"
#include "twofold/correlations.hpp"
#include "twofold/measurement.hpp"
#include "twofold/random.hpp"

namespace twofold::cli {

namespace {

/// Worst residual per check id, kept in first-seen order.
class Ledger {
 public:
  void add(const std::string& id, const std::string& eq, double r) {
    auto it = index_.find(id);
    if (it == index_.end()) {
      index_.emplace(id, entries_.size());
      entries_.push_back({id, eq, r});
      return;
    }
    auto& e = entries_[it->second];
    if (!(r <= e.residual)) e.residual = r;  // NaN sticks
  }
  void add(const CheckResult& c) { add(c.id, c.equation, c.residual); }

  std::vector<CheckResult> finish(double tol) const {
    std::vector<CheckResult> out;
    for (const auto& e : entries_) out.push_back(make_check(e.id, e.eq, e.residual, tol));
    return out;
  }

 private:
  struct Entry {
    std::string id, eq;
    double residual;
  };
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> index_;
};

constexpr std::array<Sector, 2> kSectors{Sector::Plus, Sector::Minus};

// Constructors validate at the library tolerance; --tol only sets the pass
// threshold applied in Ledger::finish.
constexpr double kBuildTol = default_tolerance;

void metric_checks(Ledger& L, Sampler& rng, int n) {
  const CMat4 g = metric_g();
  L.add("metric.g_squared", "g g = I", max_abs_diff(g * g, CMat4::Identity()));
  for (int k = 0; k < n; ++k) {
    const CVec4 a = rng.vector4();
    const CVec4 b = rng.vector4();
    // Hilbert product equals the g-product with g inserted.
    L.add("metric.inner_correlation", "<<Phi|Psi>> = <Phi|g||Psi>_g",
          std::abs(hilbert_inner(a, b) - indefinite_inner(a * g, b)));
    for (Sector s : kSectors) {
      const CMat4 P = projector(s);
      const cplx lhs = (a * P * g * a.adjoint())(0, 0);
      const cplx rhs = (a * g * (a * P).adjoint())(0, 0);
      L.add("metric.projector_pseudo_hermitian", "<L|P||L>_g = <L||P|L>_g", std::abs(lhs - rhs));
    }
    const SectorVector ap = project(a, Sector::Plus), am = project(a, Sector::Minus);
    const SectorVector bp = project(b, Sector::Plus), bm = project(b, Sector::Minus);
    const cplx split = (ap.components * bp.components.adjoint())(0, 0) - (am.components * bm.components.adjoint())(0, 0);
    L.add("metric.split", "<Phi|Psi>_g = <<Phi+|Psi+>> - <<Phi-|Psi->>", std::abs(indefinite_inner(a, b) - split));
    for (Sector s : kSectors) {
      const CMat2 gs = sector_metric(s), d = sector_delta(s);
      L.add("metric.entry_relations", "g = Delta g* Delta, g* = Delta* g Delta*",
            std::max(max_abs_diff(d * gs * d, gs), max_abs_diff(gs * d * gs, d)));
      const Restriction A{s, rng.hermitian2(), {}};
      L.add("metric.lowering", "A_mn = g A*^ls g", max_abs_diff(A.covariant(), gs * A.contravariant() * gs));
      L.add("metric.trace", "Tr A = A_mn g*^nm", std::abs((A.covariant() * gs).trace() - A.intrinsic.trace()));
      L.add("metric.completeness", "Res I = |e> g* <e|", max_abs_diff(completeness(s), CMat2::Identity()));
    }
  }
}

void state_checks(Ledger& L, Sampler& rng, int n) {
  for (int k = 0; k < n; ++k) {
    const PairState st = make_pair_state(rng.vector2(), rng.vector2());
    const CVec4 full = st.full();
    L.add("states.indefinite_norm", "<Phi|Phi>_g = 0 for a pair", std::abs(indefinite_inner(full, full)));
    L.add("states.hilbert_norm", "<<Phi|Phi>> = 2 for a pair", std::abs(hilbert_inner(full, full) - 2.0));
    for (Sector s : kSectors) {
      const auto w = born_probabilities(st, s);
      const auto wg = born_probabilities(st, s, Kernel::Metric);
      L.add("states.born_sum", "w0 + w1 = 1", std::abs(w[0] + w[1] - 1.0));
      L.add("states.kernel_agreement", "Delta and g kernels give the same weights",
            std::max(std::abs(w[0] - wg[0]), std::abs(w[1] - wg[1])));
    }
    const EvolutionOperator u = make_evolution(rng.unitary2(), rng.unitary2(), 0.0, 1.0);
    const PairState ev = evolve(st, u);
    double r = 0.0;
    for (Sector s : kSectors) r = std::max(r, std::abs(hilbert_norm2(ev.piece(s)) - 1.0));
    L.add("states.evolution_norm", "evolution preserves normalization", r);
  }
}

void observable_checks(Ledger& L, Sampler& rng, int n, double tol) {
  const Observable obs[] = {make_charge(1.0 / 3.0), make_spin(), make_polarization(),
                            make_energy(1.25, EnergyBranch::I), make_energy(1.25, EnergyBranch::II),
                            make_energy_total(1.25)};
  for (const auto& a : obs)
    for (Sector s : kSectors) {
      const SpectralDecomposition sd = spectral_decomposition(a, s, tol);
      L.add("observables.spectral_reconstruction", "A = sum a |e><e|",
            max_abs_diff(sd.reconstruct(), a.restriction(s).intrinsic));
      L.add("observables.pseudo_hermitian", "A* = A", pseudo_hermiticity_residual(a.restriction(s)));
    }
  for (int k = 0; k < n; ++k) {
    const Observable a = make_observable(rng.hermitian2(), rng.hermitian2());
    const PairState st = make_pair_state(rng.vector2(), rng.vector2());
    for (Sector s : kSectors) {
      const CVec2& phi = st.piece(s).components;
      const cplx z = (phi * a.restriction(s).covariant() * phi.adjoint())(0, 0);
      L.add("observables.real_expectation", "<A> is real", std::abs(z.imag()));
      const SpectralDecomposition sd = spectral_decomposition(a, s, 1e-8);
      L.add("observables.spectral_reconstruction", "A = sum a |e><e|",
            max_abs_diff(sd.reconstruct(), a.restriction(s).intrinsic));
    }
  }
  const ChargeConjugation c = make_charge_conjugation();
  for (double q : {1.0 / 3.0, 2.0 / 3.0, 1.0})
    for (const auto& chk : conjugation_identities(c, q, tol)) L.add(chk);
  for (const auto& chk : energy_sign_schemes(1.25, tol)) L.add(chk);
  for (Sector s : kSectors) {
    const VirtualParticleOp v = make_virtual(s);
    L.add("observables.virtual_swap", "<e0|v W v||e0> = <e1|W||e1>",
          virtual_swap_residual(v, make_energy(1.25, EnergyBranch::I).restriction(s)));
  }
}

void density_checks(Ledger& L, Sampler& rng, int n) {
  for (Sector s : kSectors) {
    L.add("density.mixed_entropy", "S(I/2) = 1 bit", std::abs(entropy(maximally_mixed(s)) - 1.0));
    L.add("density.mixed_trace", "Tr rho = 1 for I/2", std::abs(maximally_mixed(s).intrinsic.trace() - 1.0));
  }
  for (int k = 0; k < n; ++k) {
    const PairState st = make_pair_state(rng.vector2(), rng.vector2());
    const Observable a = make_observable(rng.hermitian2(), rng.hermitian2());
    for (Sector s : kSectors) {
      const DensityOperator d = density_from_state(st, s);
      L.add("density.pure_entropy", "S(pure) = 0", std::abs(entropy(d)));
      L.add("density.expectation_routes", "Tr(g rho A) = <Phi|A||Phi>_g",
            std::abs(density_expectation(d, a.restriction(s)) - expectation(a, st, s, 1e-8)));
      const EvolutionOperator u = make_evolution(rng.unitary2(), rng.unitary2());
      const DensityOperator e = evolve_density(d, u);
      const SectorVector moved{s, st.piece(s).components * u.block(s)};
      L.add("density.evolution", "rho(tau) = u* rho u", max_abs_diff(e.intrinsic, density_from_state(moved).intrinsic));
    }
  }
  // Composite traces for every particle/antiparticle split up to six factors.
  for (int total = 1; total <= 6; ++total)
    for (int np = 0; np <= total; ++np) {
      std::vector<SectorVector> f;
      for (int i = 0; i < total; ++i) {
        const Sector s = i < np ? Sector::Plus : Sector::Minus;
        f.push_back(SectorVector{s, rng.unit_vector2()});
      }
      const CompositeState cs = compose(f);
      const CompositeDensity cd = composite_density(cs);
      L.add("density.composite_trace", "Tr rho = 1 for composites", std::abs(composite_trace(cd) - 1.0));
      const double signedExpect = (cs.nMinus % 2 == 0) ? 1.0 : -1.0;
      L.add("density.composite_signed", "<Psi|rho||Psi>_g = (-1)^N-",
            std::abs(composite_signed_value(cs) - signedExpect));
      if (total >= 2) {
        const PartialTrace pt = partial_trace(cd, total - 1);
        L.add("density.partial_trace", "Tr of the reduced density = 1", std::abs(pt.normalized_trace - 1.0));
      }
    }
}

void composite_checks(Ledger& L, Sampler& rng) {
  const Observable spin = make_spin();
  for (int np = 0; np <= 3; ++np)
    for (int nm = 0; nm <= 3; ++nm) {
      if (np + nm == 0) continue;
      std::vector<SectorVector> f;
      for (int i = 0; i < np + nm; ++i) f.push_back(SectorVector{i < np ? Sector::Plus : Sector::Minus, rng.unit_vector2()});
      const CompositeState cs = compose(f);
      for (int j = 0; j < cs.size(); ++j) {
        const cplx embedded = embed_single(cs, j, spin);
        const double single = expectation(spin.restriction(f[j].sector), f[j]);
        L.add("composite.sign_law", "single-slot embedding carries (-1)^N- or (-1)^(N- - 1)",
              std::abs(embedded - double(embed_sign(cs, j)) * single));
        // Dense contraction with g blocks everywhere except the slot.
        CMatX op = CMatX::Ones(1, 1);
        for (int k = 0; k < cs.size(); ++k)
          op = kron(op, CMatX(k == j ? spin.restriction(f[k].sector).covariant() : sector_metric(f[k].sector)));
        const cplx dense = (cs.amplitude * op * cs.amplitude.adjoint())(0, 0);
        L.add("composite.dense_contraction", "Kronecker contraction equals the factorized value",
              std::abs(dense - embedded));
      }
    }
}

void measurement_checks(Ledger& L, Sampler& rng, int n) {
  for (Sector s : kSectors)
    for (int mu = 0; mu < 2; ++mu)
      for (int nu = 0; nu < 2; ++nu) {
        const CMat2 a = make_projector(s, mu).intrinsic();
        const CMat2 b = make_projector(s, nu).intrinsic();
        const CMat2 expect = mu == nu ? a : CMat2::Zero();
        L.add("measurement.orthogonality", "pi_m pi_n = delta_mn pi_m", max_abs_diff(a * b, expect));
      }
  for (int k = 0; k < n; ++k) {
    const PairState st = make_pair_state(rng.vector2(), rng.vector2());
    for (Sector s : kSectors) {
      const auto p = measure_probabilities(st, s);
      L.add("measurement.completeness", "sum of outcome weights = 1", std::abs(p[0] + p[1] - 1.0));
      L.add("measurement.density_completeness", "Tr(rho completeness) = 1",
            std::abs(completeness_check(density_from_state(st, s)) - 1.0));
      const int mu = p[0] >= p[1] ? 0 : 1;
      const SectorVector red = reduce_state(st, s, mu);
      L.add("measurement.repeat", "repeated outcome has probability 1", std::abs(measure_probabilities(red)[mu] - 1.0));
      const auto projs = observable_projectors(make_charge(0.5).restriction(s));
      const SectorVector same = reduce_by_projector(st.piece(s), projs.front());
      L.add("measurement.degenerate", "degenerate spectrum leaves the state unreduced",
            std::max(double(projs.size() - 1), max_abs_diff(same.components, st.piece(s).components)));
    }
  }
}

void group_checks(Ledger& L, Sampler& rng, int n, double tol) {
  L.add("group.M_exact", "M = (1/sqrt2)[[I,-I],[I,I]], M^-1 G M = g",
        max_abs_diff(conversion_matrix().transpose() * metric_G() * conversion_matrix(), metric_g()));
  for (int k = 0; k < n; ++k) {
    const LorentzParam a = make_lorentz_param(rng.sl2c());
    const Translation t = make_translation(rng.translation());
    const GroupElement G = poincare(a, t, Realization::GReal);
    const GroupElement g = poincare(a, t, Realization::gReal);
    for (const auto& c : verify_membership(G, tol).checks) L.add("group.G." + c.id.substr(11), c.equation, c.residual);
    for (const auto& c : verify_membership(g, tol).checks) L.add("group.g." + c.id.substr(11), c.equation, c.residual);
    const GroupElement conv = convert(G, tol);
    L.add("group.conversion", "M^-1 U M equals the g-realization formula", max_abs_diff(conv.matrix, g.matrix));
    L.add("group.conversion_det", "det preserved under conversion",
          std::abs(conv.matrix.determinant() - G.matrix.determinant()));
    L.add("group.round_trip", "conversion is an involution", max_abs_diff(convert(conv, tol).matrix, G.matrix));
    const GroupElement lor = lorentz(a, Realization::gReal);
    for (const auto& c : verify_membership(lor, tol).checks) L.add("group.lorentz." + c.id.substr(11), c.equation, c.residual);

    const std::array<double, 4> T = rng.translation();
    const CMat2 w = translation_to_w(T);
    const double quad = T[0] * T[0] - T[1] * T[1] - T[2] * T[2] - T[3] * T[3];
    L.add("group.translation_form", "T^b T_b = 2 det W", std::abs(quad - 2.0 * w.determinant().real()));
    const auto back = w_to_translation(w);
    double rt = 0.0;
    for (int i = 0; i < 4; ++i) rt = std::max(rt, std::abs(back[i] - T[i]));
    L.add("group.translation_round_trip", "W -> T -> W", rt);

    const CMat2 beta = rng.special_unitary2();
    const CMat2 W = rng.admissible_w();
    const GroupElement up = unitary_poincare(beta, W, tol);
    L.add("group.unitary", "u u^dagger = I", unitarity_residual(up.matrix));
    L.add("group.pseudo_unitary", "u g u^dagger = g", max_abs_diff(up.matrix * metric_g() * up.matrix.adjoint(), metric_g()));
    const Blocks b = block_decompose(up.matrix);
    L.add("group.block_dets", "det(u++) det(u--) = 1", std::abs(b.pp.determinant() * b.mm.determinant() - 1.0));
    const DynElement d = dyn_element(beta, W, tol);
    L.add("group.dyn_star", "g u^dagger g = u^dagger in each sector", dyn_star_residual(d));
  }
  const double s2 = std::numbers::sqrt2;
  const auto bdPlus = translation_block_determinants(translation_to_w({s2, 0, 0, 0}));
  L.add("group.det_w_plus", "W = I: det((I+iW)/sqrt2) = i, T0 = sqrt2",
        std::max(std::abs(bdPlus.plus - cplx(0, 1)), std::abs(bdPlus.T0 - s2)));
  const auto bdMinus = translation_block_determinants(translation_to_w({0, 0, 0, s2}));
  L.add("group.det_w_minus", "det W = -1: det((I+-iW)/sqrt2) = 1, T0 = 0",
        std::max({std::abs(bdMinus.plus - 1.0), std::abs(bdMinus.minus - 1.0), std::abs(bdMinus.T0)}));
}

void correlation_checks(Ledger& L, Sampler& rng, int n, double tol) {
  for (int k = 0; k < n; ++k) {
    const bool withW = k % 2 == 1;
    const DynElement e = withW ? dyn_element(rng.special_unitary2(), rng.admissible_w(), tol)
                               : dyn_element(rng.special_unitary2(), std::nullopt, tol);
    const FrameTransform ft{e, FrameMode::OperatorInvariant};
    for (const auto& c : invariance_report(ft, tol)) L.add(c);
    // Tensor law against per-factor transport.
    std::vector<SectorVector> f{{Sector::Plus, rng.unit_vector2()}, {Sector::Minus, rng.unit_vector2()}};
    const CompositeState cs = compose(f);
    const CVecX moved = transform_amplitude_tensor(cs, ft);
    const CVecX expect = kron(CVecX(f[0].components * e.uPlus.adjoint()), CVecX(f[1].components * e.uMinus.adjoint()));
    L.add("frame.tensor_law", "C' = C u*...u*", max_abs_diff(moved, expect));
    try {
      transform_observable(make_charge(1.0), FrameTransform{e, FrameMode::Both}, tol);
      L.add("frame.both_modes_charge", "both correlations hold for a degenerate spectrum", 0.0);
    } catch (const Error&) {
      L.add("frame.both_modes_charge", "both correlations hold for a degenerate spectrum", INFINITY);
    }
  }
}

struct Group {
  std::string name;
  std::function<void(Ledger&, Sampler&, const VerifyOptions&)> run;
};

const std::vector<Group>& groups() {
  static const std::vector<Group> g = {
      {"metric", [](Ledger& L, Sampler& r, const VerifyOptions& o) { metric_checks(L, r, o.samples); }},
      {"states", [](Ledger& L, Sampler& r, const VerifyOptions& o) { state_checks(L, r, o.samples); }},
      {"observables", [](Ledger& L, Sampler& r, const VerifyOptions& o) { observable_checks(L, r, o.samples, kBuildTol); }},
      {"density", [](Ledger& L, Sampler& r, const VerifyOptions& o) { density_checks(L, r, o.samples); }},
      {"composite", [](Ledger& L, Sampler& r, const VerifyOptions&) { composite_checks(L, r); }},
      {"measurement", [](Ledger& L, Sampler& r, const VerifyOptions& o) { measurement_checks(L, r, o.samples); }},
      {"group", [](Ledger& L, Sampler& r, const VerifyOptions& o) { group_checks(L, r, o.samples, kBuildTol); }},
      {"correlations", [](Ledger& L, Sampler& r, const VerifyOptions& o) { correlation_checks(L, r, o.samples, kBuildTol); }},
  };
  return g;
}

}  // namespace

const std::vector<std::string>& verify_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& g : groups()) v.push_back(g.name);
    return v;
  }();
  return names;
}

Report run_verify(const VerifyOptions& opt) {
  if (opt.samples < 1) throw Error(ErrorKind::ParseError, "--samples must be positive");
  Report rep;
  bool any = false;
  for (std::size_t i = 0; i < groups().size(); ++i) {
    const Group& g = groups()[i];
    if (opt.filter && *opt.filter != g.name) continue;
    any = true;
    // Each group draws from its own stream so filtering does not change results.
    Sampler rng(opt.seed + 7919 * i);
    Ledger L;
    g.run(L, rng, opt);
    for (auto& c : L.finish(opt.tol)) rep.checks.push_back(std::move(c));
  }
  if (!any) throw Error(ErrorKind::ParseError, "unknown verify group: " + *opt.filter);
  return rep;
}

}  // namespace twofold::cli
