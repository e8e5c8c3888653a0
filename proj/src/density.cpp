#include "twofold/density.hpp"

#include <limits>

namespace twofold {

namespace {

void require_normalized(const SectorVector& v, double tol, const char* where) {
  const double n = hilbert_norm2(v);
  if (std::abs(n - 1.0) > tol)
    throw Error(ErrorKind::NotNormalized, std::string(where) + ": |v|^2 = " + std::to_string(n));
}

void check_density(const CMatX& m, double tol) {
  if (!is_hermitian(m, tol)) throw Error(ErrorKind::InvalidDensity, "density is not Hermitian");
}

}  // namespace

DensityOperator make_density(Sector s, const CMat2& intrinsic, double tol) {
  require_finite(intrinsic, "density");
  if (!is_hermitian(intrinsic, tol)) throw Error(ErrorKind::InvalidDensity, "density is not Hermitian");
  if (std::abs(intrinsic.trace() - 1.0) > tol) throw Error(ErrorKind::InvalidDensity, "density trace is not 1");
  const auto eig = eig_hermitian(intrinsic, tol);
  if (eig.values(1) < -tol) throw Error(ErrorKind::InvalidDensity, "negative density eigenvalue");
  const bool pure = max_abs_diff(intrinsic * intrinsic, intrinsic) <= tol;
  return DensityOperator{s, intrinsic, pure};
}

DensityOperator density_from_state(const SectorVector& v, double tol) {
  require_normalized(v, tol, "density_from_state");
  // Intrinsic Φ†Φ; the covariant form ±Φ†Φ follows from the sector metric.
  return DensityOperator{v.sector, v.components.adjoint() * v.components, true};
}

DensityOperator density_from_state(const PairState& st, Sector s, double tol) {
  return density_from_state(st.piece(s), tol);
}

DensityOperator maximally_mixed(Sector s) {
  return DensityOperator{s, completeness(s) / 2.0, false};
}

double entropy(const CMatX& intrinsic, double tol) {
  check_density(intrinsic, tol);
  const auto eig = eig_hermitian(intrinsic, tol);
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    if (eig.values(i) < -tol) throw Error(ErrorKind::InvalidDensity, "negative density eigenvalue");
  return entropy_bits(eig.values);
}

double entropy(const DensityOperator& d, double tol) { return entropy(CMatX(d.intrinsic), tol); }

DensityOperator evolve_density(const DensityOperator& d, const EvolutionOperator& u) {
  const CMat2& U = u.block(d.sector);
  const double r = unitarity_residual(U);
  if (r > default_tolerance) throw Error(ErrorKind::NotUnitary, "evolve_density residual " + std::to_string(r));
  // g ρ(τ) = U★ g ρ U with U★ = g U† g = U† inside a sector.
  return DensityOperator{d.sector, U.adjoint() * d.intrinsic * U, d.pure};
}

double density_expectation(const DensityOperator& d, const Restriction& a) {
  if (a.sector != d.sector) throw Error(ErrorKind::SectorMismatch, "density_expectation");
  return (sector_metric(d.sector) * d.intrinsic * a.intrinsic).trace().real();
}

cplx CompositeState::component(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != size()) throw Error(ErrorKind::ArityMismatch, "component");
  Eigen::Index flat = 0;
  for (int i : indices) {
    if (i < 0 || i > 1) throw Error(ErrorKind::IndexOutOfRange, "component index");
    flat = 2 * flat + i;
  }
  return amplitude(flat);
}

CompositeState compose(const std::vector<SectorVector>& factors, double tol) {
  CompositeState cs;
  bool seenMinus = false;
  CVecX amp = CVecX::Ones(1);
  for (const auto& f : factors) {
    if (f.sector == Sector::Minus) {
      seenMinus = true;
      ++cs.nMinus;
    } else {
      if (seenMinus) throw Error(ErrorKind::OrderingViolation, "particle factor after antiparticle factor");
      ++cs.nPlus;
    }
    require_normalized(f, tol, "compose");
    amp = kron(amp, CVecX(f.components));
  }
  cs.factors = factors;
  cs.amplitude = amp;
  return cs;
}

cplx composite_expectation(const CompositeState& cs, const std::vector<Observable>& obs) {
  if (static_cast<int>(obs.size()) != cs.size())
    throw Error(ErrorKind::ArityMismatch, "composite_expectation: " + std::to_string(obs.size()) +
                                              " observables for " + std::to_string(cs.size()) + " factors");
  cplx value = 1.0;
  for (int k = 0; k < cs.size(); ++k) {
    const SectorVector& f = cs.factors[k];
    value *= expectation(obs[k].restriction(f.sector), f);
  }
  return value;
}

cplx embed_single(const CompositeState& cs, int j, const Observable& a) {
  if (j < 0 || j >= cs.size()) throw Error(ErrorKind::IndexOutOfRange, "embed_single slot " + std::to_string(j));
  std::vector<Observable> obs;
  obs.reserve(cs.size());
  const Observable identity = make_observable(CMat2::Identity(), CMat2::Identity());
  for (int k = 0; k < cs.size(); ++k) obs.push_back(k == j ? a : identity);
  return composite_expectation(cs, obs);
}

int embed_sign(const CompositeState& cs, int j) {
  if (j < 0 || j >= cs.size()) throw Error(ErrorKind::IndexOutOfRange, "embed_sign slot " + std::to_string(j));
  const int n = cs.factors[j].sector == Sector::Plus ? cs.nMinus : cs.nMinus - 1;
  return n % 2 == 0 ? 1 : -1;
}

CMatX composite_metric(const CompositeState& cs) {
  CMatX g = CMatX::Ones(1, 1);
  for (const auto& f : cs.factors) g = kron(g, CMatX(sector_metric(f.sector)));
  return g;
}

CMatX CompositeDensity::intrinsic_matrix() const {
  CMatX m = CMatX::Ones(1, 1) * scale;
  for (const auto& d : factors) m = kron(m, CMatX(d.intrinsic));
  return m;
}

CMatX CompositeDensity::covariant_matrix() const {
  CMatX m = CMatX::Ones(1, 1) * scale;
  for (const auto& d : factors) m = kron(m, CMatX(d.covariant()));
  return m;
}

CompositeDensity composite_density(const CompositeState& cs) {
  CompositeDensity cd;
  for (const auto& f : cs.factors) cd.factors.push_back(density_from_state(f));
  return cd;
}

double composite_trace(const CompositeDensity& cd) {
  cplx t = cd.scale;
  for (const auto& d : cd.factors) t *= d.intrinsic.trace();
  return t.real();
}

double composite_signed_value(const CompositeState& cs) {
  cplx v = 1.0;
  for (const auto& f : cs.factors) {
    const DensityOperator d = density_from_state(f);
    v *= (f.components * d.covariant() * f.components.adjoint())(0, 0);
  }
  return v.real();
}

PartialTrace partial_trace(const CompositeDensity& cd, int slot) {
  if (cd.size() <= 1) throw Error(ErrorKind::LastFactor, "partial_trace: cannot trace out the only factor");
  if (slot < 0 || slot >= cd.size())
    throw Error(ErrorKind::IndexOutOfRange, "partial_trace slot " + std::to_string(slot));
  PartialTrace out;
  // <Ψ|g||Ψ>_g equals the intrinsic trace of the removed density.
  out.factor = cd.factors[slot].intrinsic.trace().real();
  out.reduced = cd;
  out.reduced.factors.erase(out.reduced.factors.begin() + slot);
  out.reduced.scale = cd.scale * out.factor;
  out.raw_trace = composite_trace(out.reduced);
  out.normalized_trace = out.raw_trace / out.reduced.scale;
  return out;
}

CMatX partial_trace_dense(const CMatX& rho, int dA, int dB, bool keepFirst) {
  if (rho.rows() != dA * dB || rho.cols() != dA * dB) throw Error(ErrorKind::ShapeMismatch, "partial_trace_dense");
  if (keepFirst) {
    CMatX out = CMatX::Zero(dA, dA);
    for (int i = 0; i < dA; ++i)
      for (int j = 0; j < dA; ++j)
        for (int k = 0; k < dB; ++k) out(i, j) += rho(i * dB + k, j * dB + k);
    return out;
  }
  CMatX out = CMatX::Zero(dB, dB);
  for (int i = 0; i < dB; ++i)
    for (int j = 0; j < dB; ++j)
      for (int k = 0; k < dA; ++k) out(i, j) += rho(k * dB + i, k * dB + j);
  return out;
}

double relative_entropy(const CMatX& a, const CMatX& b, double tol) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "relative_entropy");
  const auto ea = eig_hermitian(a, tol);
  const auto eb = eig_hermitian(b, tol);
  const Eigen::Index n = a.rows();
  // Overlaps |<a_i|b_j>|² weight the cross term Tr(ρa log ρb).
  const CMatX overlap = ea.vectors.adjoint() * eb.vectors;
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = ea.values(i);
    if (p <= tol) continue;
    s += p * std::log2(p);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double w = std::norm(overlap(i, j));
      if (w <= tol) continue;
      const double q = eb.values(j);
      if (q <= tol) return std::numeric_limits<double>::infinity();
      s -= p * w * std::log2(q);
    }
  }
  return std::max(s, 0.0);
}

EntropyReport relative_mutual_entropies(const CompositeDensity& a, const CompositeDensity& b, double tol) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "factor counts differ");
  for (int k = 0; k < a.size(); ++k)
    if (a.factors[k].sector != b.factors[k].sector) throw Error(ErrorKind::ShapeMismatch, "factor sectors differ");

  auto normalized = [](const CompositeDensity& cd) {
    CompositeDensity c = cd;
    c.scale = 1.0;
    return c.intrinsic_matrix();
  };
  const CMatX ra = normalized(a);
  const CMatX rb = normalized(b);

  EntropyReport r;
  r.entropy_a = entropy(ra, tol);
  r.entropy_b = entropy(rb, tol);
  r.relative_ab = relative_entropy(ra, rb, tol);
  if (a.size() >= 2) {
    const int dB = static_cast<int>(ra.rows() / 2);
    const double s1 = entropy(partial_trace_dense(ra, 2, dB, true), tol);
    const double sRest = entropy(partial_trace_dense(ra, 2, dB, false), tol);
    r.mutual_a = s1 + sRest - r.entropy_a;
    r.conditional_a = r.entropy_a - sRest;
    r.subadditive = r.entropy_a <= s1 + sRest + 1e-9;
  }
  const double mixed = entropy(CMatX((ra + rb) / 2.0), tol);
  r.concave = mixed + 1e-9 >= (r.entropy_a + r.entropy_b) / 2.0;
  return r;
}

}  // namespace twofold
