#include "twofold/correlations.hpp"

#include "twofold/measurement.hpp"

namespace twofold {

namespace {

constexpr std::array<Sector, 2> kSectors{Sector::Plus, Sector::Minus};

CMat2 star2(const CMat2& u, Sector s) {
  const CMat2 g = sector_metric(s);
  return g * u.adjoint() * g;
}

PairState fixed_state() {
  CVec2 p, m;
  p << 0.6, cplx(0.0, 0.8);
  m << 1.0, std::polar(1.0, 1.0471975511965976);
  return make_pair_state(p, m);
}

}  // namespace

const char* to_string(FrameMode m) noexcept {
  switch (m) {
    case FrameMode::OperatorInvariant:
      return "operator_invariant";
    case FrameMode::MatrixInvariant:
      return "matrix_invariant";
    case FrameMode::Both:
      return "both";
  }
  return "?";
}

PrimedBasis transform_basis(const FrameTransform& ft) {
  PrimedBasis b;
  for (Sector s : kSectors) {
    const CMat2& u = ft.u(s);
    const CMat2 g = sector_metric(s);
    // Row μ of u is <e'_μ| written against the unprimed rows.
    const CMat2 gram = u * g * u.adjoint();
    const CMat2 delta = u * u.adjoint();
    if (s == Sector::Plus) {
      b.rowsPlus = u;
      b.gramPlus = gram;
      b.deltaPlus = delta;
    } else {
      b.rowsMinus = u;
      b.gramMinus = gram;
      b.deltaMinus = delta;
    }
  }
  return b;
}

TransformedState transform_state(const PairState& st, const FrameTransform& ft) {
  TransformedState out;
  out.state = st;
  out.primedComponents.plus = SectorVector{Sector::Plus, st.plus.components * star2(ft.u(Sector::Plus), Sector::Plus)};
  out.primedComponents.minus =
      SectorVector{Sector::Minus, st.minus.components * star2(ft.u(Sector::Minus), Sector::Minus)};
  out.weightsPlus = born_probabilities(out.primedComponents.plus);
  out.weightsMinus = born_probabilities(out.primedComponents.minus);
  return out;
}

CVecX transform_amplitude_tensor(const CompositeState& cs, const FrameTransform& ft) {
  CMatX k = CMatX::Ones(1, 1);
  for (const auto& f : cs.factors) k = kron(k, CMatX(star2(ft.u(f.sector), f.sector)));
  return cs.amplitude * k;
}

TransformedObservable transform_observable(const Observable& a, const FrameTransform& ft, double tol) {
  if (ft.mode == FrameMode::Both) {
    double r = 0.0;
    for (Sector s : kSectors) {
      const CMat2& u = ft.u(s);
      const CMat2& A = a.restriction(s).intrinsic;
      r = std::max(r, max_abs_diff(u * A, A * u));
    }
    if (r > tol) throw Error(ErrorKind::ModeConflict, "u A != A u, residual " + std::to_string(r));
  }
  TransformedObservable out;
  out.op = a;
  if (ft.mode == FrameMode::MatrixInvariant) {
    const CMat2& up = ft.u(Sector::Plus);
    const CMat2& um = ft.u(Sector::Minus);
    out.op.plus.intrinsic = star2(up, Sector::Plus) * a.plus.intrinsic * up;
    out.op.minus.intrinsic = star2(um, Sector::Minus) * a.minus.intrinsic * um;
  }
  // Entries of the (possibly conjugated) operator against the primed rows.
  const CMat2& up = ft.u(Sector::Plus);
  const CMat2& um = ft.u(Sector::Minus);
  out.entries.plus = up * out.op.plus.covariant() * up.adjoint();
  out.entries.minus = um * out.op.minus.covariant() * um.adjoint();
  return out;
}

Diagonalization diagonalize_primed(const CMat2& primedCovariant, Sector s, double tol) {
  require_finite(primedCovariant, "primed entries");
  const CMat2 g = sector_metric(s);
  const CMat2 intrinsic = primedCovariant * g;
  if (!is_hermitian(intrinsic, tol))
    throw Error(ErrorKind::NotDiagonalizable,
                "entries are not pseudo-Hermitian, residual " + std::to_string(hermiticity_residual(intrinsic)));
  const auto eig = eig_hermitian(intrinsic, tol);
  Diagonalization d;
  d.sector = s;
  d.eigenvalues = {eig.values(0), eig.values(1)};
  d.s = eig.vectors.adjoint();
  d.diag = d.s * primedCovariant * d.s.adjoint();
  // Rounding leaves tiny off-diagonal entries; check and drop them.
  const double off = std::max(std::abs(d.diag(0, 1)), std::abs(d.diag(1, 0)));
  if (off > tol * std::max(1.0, max_abs(primedCovariant)))
    throw Error(ErrorKind::NotDiagonalizable, "off-diagonal residual " + std::to_string(off));
  CMat2 clean = CMat2::Zero();
  clean(0, 0) = d.eigenvalues[0] * g(0, 0);
  clean(1, 1) = d.eigenvalues[1] * g(1, 1);
  d.detResidual = std::abs(clean.determinant() - primedCovariant.determinant());
  d.diag = clean;
  return d;
}

ChargeConjugation transform_conjugation(const ChargeConjugation& c, const FrameTransform& ft) {
  ChargeConjugation out;
  out.qPlus = star2(ft.u(Sector::Plus), Sector::Plus) * c.qPlus * ft.u(Sector::Minus);
  out.qMinus = star2(ft.u(Sector::Minus), Sector::Minus) * c.qMinus * ft.u(Sector::Plus);
  return out;
}

CMat2 primed_conjugation_entries(const ChargeConjugation& primed, const FrameTransform& ft, Sector from) {
  const Sector to = other(from);
  return ft.u(from) * primed.map(from) * sector_metric(to) * ft.u(to).adjoint();
}

std::vector<CheckResult> invariance_report(const FrameTransform& ft, double tol) {
  std::vector<CheckResult> out;
  auto add = [&](const char* id, const char* eq, double r) { out.push_back(make_check(id, eq, r, tol)); };

  const PrimedBasis basis = transform_basis(ft);
  double rMetric = 0.0, rDelta = 0.0;
  for (Sector s : kSectors) {
    rMetric = std::max(rMetric, max_abs_diff(basis.gram(s), sector_metric(s)));
    rDelta = std::max(rDelta, max_abs_diff(basis.delta(s), sector_delta(s)));
  }
  add("frame.metric", "g'(s) = u g(s) u* = g(s)", rMetric);
  add("frame.delta", "Delta'(s) = u Delta(s) u^dagger = Delta(s)", rDelta);

  const CMat4 U = ft.element.matrix();
  const CMat4 g4 = metric_g();
  const CMat4 Ustar = g4 * U.adjoint() * g4;
  double rProj = 0.0;
  for (Sector s : kSectors) rProj = std::max(rProj, max_abs_diff(U * projector(s) * Ustar, projector(s)));
  add("frame.projector", "u P(s) u* = P(s)", rProj);

  // Amplitude invariance: the primed components transported back give the
  // original bra, and the g-norm survives.
  const PairState st = fixed_state();
  const TransformedState ts = transform_state(st, ft);
  double rAmp = 0.0, rNorm = 0.0;
  for (Sector s : kSectors) {
    const CVec2 back = ts.primedComponents.piece(s).components * ft.u(s);
    rAmp = std::max(rAmp, max_abs_diff(back, st.piece(s).components));
    const cplx n1 = (ts.primedComponents.piece(s).components * basis.gram(s) *
                     ts.primedComponents.piece(s).components.adjoint())(0, 0);
    const cplx n0 = sector_inner(st.piece(s), st.piece(s));
    rNorm = std::max(rNorm, std::abs(n1 - n0));
  }
  add("frame.amplitude", "Phi' u = Phi", rAmp);
  add("frame.norm", "<Phi'|Phi'>_g' = <Phi|Phi>_g", rNorm);

  const Observable spin = make_spin();
  const Observable pol = make_polarization();
  const Observable energy = make_energy(1.5, EnergyBranch::I);
  const Observable charge = make_charge(1.0);

  // Expectation transport and trace invariance in both single modes.
  FrameTransform opFt{ft.element, FrameMode::OperatorInvariant};
  FrameTransform mxFt{ft.element, FrameMode::MatrixInvariant};
  double rExp = 0.0, rTrA = 0.0, rTrB = 0.0, rTrDiag = 0.0, rDet = 0.0;
  for (const Observable* a : {&spin, &pol, &energy}) {
    const TransformedObservable ta = transform_observable(*a, opFt, tol);
    const TransformedObservable tb = transform_observable(*a, mxFt, tol);
    for (Sector s : kSectors) {
      const CMat2 g = sector_metric(s);
      const CVec2& phiP = ts.primedComponents.piece(s).components;
      const cplx primed = (phiP * ta.entries.at(s) * phiP.adjoint())(0, 0);
      const double direct = expectation(a->restriction(s), st.piece(s), 1.0);
      rExp = std::max(rExp, std::abs(primed - direct));

      const cplx tr0 = a->restriction(s).intrinsic.trace();
      // Intrinsic trace of primed entries, and of the conjugated operator.
      rTrA = std::max(rTrA, std::abs((ta.entries.at(s) * basis.gram(s)).trace() - tr0));
      rTrA = std::max(rTrA, std::abs(tb.op.restriction(s).intrinsic.trace() - tr0));
      // Adjoint (contravariant) trace g A g.
      const cplx trStar0 = (g * a->restriction(s).covariant() * g).trace();
      rTrB = std::max(rTrB, std::abs((basis.gram(s) * ta.entries.at(s) * basis.gram(s)).trace() - trStar0));
      try {
        const Diagonalization d = diagonalize_primed(ta.entries.at(s), s, 1e-8);
        rTrDiag = std::max(rTrDiag, std::abs((d.diag * g).trace() - tr0));
        rDet = std::max(rDet, std::abs(d.diag.determinant() - a->restriction(s).covariant().determinant()));
      } catch (const Error&) {
        rTrDiag = rDet = INFINITY;
      }
    }
  }
  add("frame.expectation", "Phi' A' Phi'^dagger = Phi A Phi^dagger", rExp);
  add("frame.trace", "Tr A' = Tr A = diag A'_mn g*^nm", std::max(rTrA, rTrDiag));
  add("frame.trace_adjoint", "Tr A*' = Tr A*", rTrB);
  add("frame.diag_det", "det(diag A') = det(A)", rDet);

  // Commutators: entry form keeps [A, B]; conjugated form sandwiches it.
  double rCa = 0.0, rCb = 0.0;
  for (Sector s : kSectors) {
    const CMat2& u = ft.u(s);
    const CMat2 us = star2(u, s);
    // Spin and polarization commute trivially, so pair spin with v.
    const CMat2& A = spin.restriction(s).intrinsic;
    const CMat2 B = make_virtual(s).intrinsic;
    const CMat2 C = A * B - B * A;
    const CMat2 Ap = u * A * u.adjoint();
    const CMat2 Bp = u * B * u.adjoint();
    rCa = std::max(rCa, max_abs_diff(Ap * Bp - Bp * Ap, u * C * u.adjoint()));
    const CMat2 Am = us * A * u;
    const CMat2 Bm = us * B * u;
    rCb = std::max(rCb, max_abs_diff(Am * Bm - Bm * Am, us * C * u));
  }
  add("frame.commutator_entries", "[A', B'] = [A, B]", rCa);
  add("frame.commutator_operator", "[A', B'] = u* [A, B] u", rCb);

  // π'_(μ) built on primed rows has the canonical entries.
  double rMeas = 0.0;
  for (Sector s : kSectors) {
    const CMat2& u = ft.u(s);
    for (int mu = 0; mu < 2; ++mu) {
      const CMat2 pi = make_projector(s, mu).intrinsic();
      const CMat2 primedOp = star2(u, s) * pi * u;
      rMeas = std::max(rMeas, max_abs_diff(u * primedOp * sector_metric(s) * u.adjoint(), make_projector(s, mu).matrix));
    }
  }
  add("frame.measurement", "<e'|pi'||e'>_g' = pi_mn", rMeas);

  // Degenerate spectrum: both correlations hold together.
  double rDeg = 0.0;
  for (Sector s : kSectors) {
    const CMat2& u = ft.u(s);
    const CMat2& Q = charge.restriction(s).intrinsic;
    rDeg = std::max(rDeg, max_abs_diff(u * Q, Q * u));
    rDeg = std::max(rDeg, max_abs_diff(u * charge.restriction(s).covariant() * u.adjoint(),
                                       charge.restriction(s).covariant()));
  }
  add("frame.degenerate", "u Q = Q u, Q'_mn = Q_mn", rDeg);

  // Energy restriction comes back as diag(E', -E') up to the sector sign.
  double rEnergy = 0.0;
  for (Sector s : kSectors) {
    const TransformedObservable te = transform_observable(energy, opFt, tol);
    try {
      const Diagonalization d = diagonalize_primed(te.entries.at(s), s, 1e-8);
      const CMat2 g = sector_metric(s);
      CMat2 expect = CMat2::Zero();
      expect(0, 0) = 1.5;
      expect(1, 1) = -1.5;
      rEnergy = std::max(rEnergy, max_abs_diff(d.diag * g, expect));
    } catch (const Error&) {
      rEnergy = INFINITY;
    }
  }
  add("frame.energy_primed", "diag H_I' = diag(E', -E')", rEnergy);

  const ChargeConjugation cp = transform_conjugation(make_charge_conjugation(), ft);
  const ChargeConjugation c0 = make_charge_conjugation();
  double rConj = 0.0;
  for (Sector s : kSectors) {
    rConj = std::max(rConj, max_abs_diff(primed_conjugation_entries(cp, ft, s), c0.covariant(s)));
    rConj = std::max(rConj, max_abs_diff(cp.star(s), -cp.map(other(s))));
  }
  add("frame.conjugation", "C'_mn = C_mn, C'* = -C'^-1", rConj);

  double rRho = 0.0;
  for (Sector s : kSectors) {
    const CMat2& u = ft.u(s);
    CMat2 mixed = CMat2::Zero();
    mixed(0, 0) = 0.7;
    mixed(1, 1) = 0.3;
    for (const CMat2& rho : {CMat2(density_from_state(st, s).intrinsic), mixed}) {
      const CMat2 moved = star2(u, s) * rho * u;
      if (!is_hermitian(moved, 1e-8)) {
        rRho = INFINITY;
        continue;
      }
      const auto e0 = eig_hermitian(rho, 1e-8);
      const auto e1 = eig_hermitian(moved, 1e-8);
      rRho = std::max(rRho, (e0.values - e1.values).cwiseAbs().maxCoeff());
    }
  }
  add("frame.density_spectrum", "spec(u* rho u) = spec(rho)", rRho);
  return out;
}

double reduction_difference(const SectorVector& v, const FrameTransform& ft, int outcome, double tol) {
  const CMat2& u = ft.u(v.sector);
  const SectorVector reduced = reduce_state(v, outcome, tol);
  const SectorVector primed{v.sector, v.components * star2(u, v.sector)};
  const SectorVector reducedPrimed = reduce_state(primed, outcome, tol);
  // Compare as frame-independent bras.
  return max_abs_diff(CVec2(reducedPrimed.components * u), reduced.components);
}

}  // namespace twofold
