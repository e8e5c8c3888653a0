#include <fstream>
#include <random>
#include <sstream>

#include "twofold/cli.hpp"
#include "twofold/correlations.hpp"
#include "twofold/measurement.hpp"

namespace twofold::cli {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, field + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "non-finite number");
  return v;
}

cplx complex_value(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "complex literal must be [re, im]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

CVec2 vector2(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected two complex components");
  CVec2 v;
  for (int i = 0; i < 2; ++i) v(i) = complex_value(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

CMat2 matrix2(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a 2x2 matrix of complex literals");
  CMat2 m;
  for (int r = 0; r < 2; ++r) m.row(r) = vector2(j[r], path + "[" + std::to_string(r) + "]");
  return m;
}

Sector sector(const Json& j, const std::string& path) {
  if (j == "plus") return Sector::Plus;
  if (j == "minus") return Sector::Minus;
  fail(path, "sector must be \"plus\" or \"minus\"");
}

Observable observable(const Json& j, const std::string& path) {
  const Json spec = j.is_string() ? Json{{"kind", j}} : j;
  const Json& kind = require(spec, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  auto param = [&](const char* key, double dflt) {
    auto it = spec.find(key);
    return it == spec.end() ? dflt : number(*it, path + "." + key);
  };
  if (k == "charge") return make_charge(param("q", 1.0));
  if (k == "spin") return make_spin();
  if (k == "polarization") return make_polarization();
  if (k == "energy") {
    EnergyBranch b = EnergyBranch::I;
    if (auto it = spec.find("branch"); it != spec.end()) {
      if (*it == "I")
        b = EnergyBranch::I;
      else if (*it == "II")
        b = EnergyBranch::II;
      else
        fail(path + ".branch", "expected \"I\" or \"II\"");
    }
    return make_energy(param("E", 1.0), b);
  }
  if (k == "energy_total") return make_energy_total(param("E", 1.0));
  throw Error(ErrorKind::UnknownKind, path + ".kind: " + k);
}

FrameMode frame_mode(const Json& j, const std::string& path) {
  if (j == "operator_invariant") return FrameMode::OperatorInvariant;
  if (j == "matrix_invariant") return FrameMode::MatrixInvariant;
  if (j == "both") return FrameMode::Both;
  fail(path, "mode must be operator_invariant, matrix_invariant or both");
}

Json vector_json(const SectorVector& v) { return row_json(v.components); }

Json weights_json(const std::array<double, 2>& w) { return Json::array({w[0], w[1]}); }

/// Uniform [0, 1) from the raw engine output, independent of the standard
/// library's distribution implementations.
double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

struct Prepared {
  bool isPair = true;
  PairState pair;
  CompositeState composite;
};

Prepared prepare(const Json& doc, Report& rep, double tol) {
  Prepared p;
  Json step;
  step["step"] = "prepare";
  const bool hasPair = doc.contains("pair");
  const bool hasComposite = doc.contains("composite");
  if (hasPair == hasComposite) fail("scenario", "exactly one of pair or composite is required");
  if (hasPair) {
    const Json& pj = doc["pair"];
    p.pair = make_pair_state(vector2(require(pj, "plus", "pair"), "pair.plus"),
                             vector2(require(pj, "minus", "pair"), "pair.minus"));
    const CVec4 full = p.pair.full();
    step["kind"] = "pair";
    step["plus"] = vector_json(p.pair.plus);
    step["minus"] = vector_json(p.pair.minus);
    step["weights_plus"] = weights_json(born_probabilities(p.pair, Sector::Plus));
    step["weights_minus"] = weights_json(born_probabilities(p.pair, Sector::Minus));
    const double ind = std::abs(indefinite_inner(full, full));
    const double hil = std::abs(hilbert_inner(full, full) - 2.0);
    rep.checks.push_back(make_check("scenario.prepare.indefinite_norm", "<Phi|Phi>_g = 0 for a pair", ind, tol));
    rep.checks.push_back(make_check("scenario.prepare.hilbert_norm", "<<Phi|Phi>> = 2 for a pair", hil, tol));
    double entropies[2];
    for (Sector s : {Sector::Plus, Sector::Minus}) entropies[s == Sector::Plus ? 0 : 1] = entropy(density_from_state(p.pair, s));
    step["entropy_plus"] = entropies[0];
    step["entropy_minus"] = entropies[1];
  } else {
    p.isPair = false;
    const Json& fj = require(doc["composite"], "factors", "composite");
    if (!fj.is_array() || fj.empty()) fail("composite.factors", "expected a non-empty list");
    std::vector<SectorVector> factors;
    for (std::size_t i = 0; i < fj.size(); ++i) {
      const std::string path = "composite.factors[" + std::to_string(i) + "]";
      const Sector s = sector(require(fj[i], "sector", path), path + ".sector");
      CVec2 v = vector2(require(fj[i], "state", path), path + ".state");
      if (v.norm() == 0.0) throw Error(ErrorKind::ZeroVector, path + ".state");
      factors.push_back(SectorVector{s, v / v.norm()});
    }
    p.composite = compose(factors, tol);
    const CompositeDensity cd = composite_density(p.composite);
    step["kind"] = "composite";
    step["n_plus"] = p.composite.nPlus;
    step["n_minus"] = p.composite.nMinus;
    step["amplitude"] = row_json(p.composite.amplitude);
    step["trace"] = composite_trace(cd);
    step["signed_value"] = composite_signed_value(p.composite);
    rep.checks.push_back(make_check("scenario.prepare.composite_trace", "Tr rho = 1 for composites",
                                    std::abs(composite_trace(cd) - 1.0), tol));
    const double expectSign = p.composite.nMinus % 2 == 0 ? 1.0 : -1.0;
    rep.checks.push_back(make_check("scenario.prepare.signed_value", "<Psi|rho||Psi>_g = (-1)^N-",
                                    std::abs(composite_signed_value(p.composite) - expectSign), tol));
  }
  rep.steps.push_back(step);
  return p;
}

void observe(const Prepared& p, const std::vector<std::pair<Json, Observable>>& obs, Report& rep) {
  for (const auto& [spec, a] : obs) {
    Json step;
    step["step"] = "observe";
    step["observable"] = spec;
    if (p.isPair) {
      for (Sector s : {Sector::Plus, Sector::Minus}) {
        const std::string tag = to_string(s);
        step["expectation_" + tag] = expectation(a, p.pair, s);
        const SpectralDecomposition sd = spectral_decomposition(a, s);
        step["spectrum_" + tag] = Json::array({sd.eigenvalues[0], sd.eigenvalues[1]});
      }
    } else {
      Json slots = Json::array();
      for (int j = 0; j < p.composite.size(); ++j) {
        Json e;
        e["slot"] = j;
        e["embedded"] = complex_json(embed_single(p.composite, j, a));
        e["sign"] = embed_sign(p.composite, j);
        slots.push_back(e);
      }
      step["slots"] = slots;
    }
    rep.steps.push_back(step);
  }
}

void frames(const Json& doc, const Prepared& p, const std::vector<std::pair<Json, Observable>>& obs, Report& rep,
            double tol) {
  if (!doc.contains("frames")) return;
  const Json& fj = doc["frames"];
  if (!fj.is_array()) fail("frames", "expected a list");
  for (std::size_t i = 0; i < fj.size(); ++i) {
    const std::string path = "frames[" + std::to_string(i) + "]";
    const CMat2 beta = matrix2(require(fj[i], "beta", path), path + ".beta");
    std::optional<CMat2> w;
    if (auto it = fj[i].find("translation"); it != fj[i].end()) {
      if (!it->is_array() || it->size() != 4) fail(path + ".translation", "expected four real components");
      std::array<double, 4> T{};
      for (int k = 0; k < 4; ++k) T[k] = number((*it)[k], path + ".translation");
      w = translation_to_w(T);
    }
    FrameMode mode = FrameMode::OperatorInvariant;
    if (auto it = fj[i].find("mode"); it != fj[i].end()) mode = frame_mode(*it, path + ".mode");
    const FrameTransform ft{dyn_element(beta, w, tol), mode};

    Json step;
    step["step"] = "frame";
    step["index"] = i;
    step["mode"] = to_string(mode);
    step["u_plus"] = matrix_json(ft.element.uPlus);
    step["u_minus"] = matrix_json(ft.element.uMinus);
    if (p.isPair) {
      const TransformedState ts = transform_state(p.pair, ft);
      step["primed_plus"] = vector_json(ts.primedComponents.plus);
      step["primed_minus"] = vector_json(ts.primedComponents.minus);
      step["primed_weights_plus"] = weights_json(ts.weightsPlus);
      step["primed_weights_minus"] = weights_json(ts.weightsMinus);
    } else {
      step["primed_amplitude"] = row_json(transform_amplitude_tensor(p.composite, ft));
    }
    Json observables = Json::array();
    for (const auto& [spec, a] : obs) {
      Json o;
      o["observable"] = spec;
      const TransformedObservable t = transform_observable(a, ft, tol);
      o["entries_plus"] = matrix_json(t.entries.plus);
      o["entries_minus"] = matrix_json(t.entries.minus);
      for (Sector s : {Sector::Plus, Sector::Minus}) {
        const Diagonalization d = diagonalize_primed(t.entries.at(s), s, 1e-8);
        o[std::string("diagonal_") + to_string(s)] = Json::array({d.eigenvalues[0], d.eigenvalues[1]});
        const cplx det0 = a.restriction(s).covariant().determinant();
        const std::string id = "scenario.frame" + std::to_string(i) + ".diag_det." + to_string(s);
        rep.checks.push_back(make_check(id, "det(diag A') = det(A)", std::abs(d.diag.determinant() - det0), tol));
      }
      observables.push_back(o);
    }
    step["observables"] = observables;
    Json inv = Json::array();
    for (const auto& c : invariance_report(ft, tol)) {
      inv.push_back(check_json(c));
      CheckResult scoped = c;
      scoped.id = "scenario.frame" + std::to_string(i) + "." + c.id;
      rep.checks.push_back(scoped);
    }
    step["invariance_report"] = inv;
    rep.steps.push_back(step);
  }
}

void measurements(const Json& doc, Prepared& p, std::mt19937_64& rng, Report& rep, double tol) {
  if (!doc.contains("measurements")) return;
  const Json& mj = doc["measurements"];
  if (!mj.is_array()) fail("measurements", "expected a list");
  for (std::size_t i = 0; i < mj.size(); ++i) {
    const std::string path = "measurements[" + std::to_string(i) + "]";
    const Json& slotJ = require(mj[i], "slot", path);
    const Json& outJ = require(mj[i], "outcome", path);

    SectorVector target;
    int slot = -1;
    if (p.isPair) {
      target = p.pair.piece(sector(slotJ, path + ".slot"));
    } else {
      if (!slotJ.is_number_integer()) fail(path + ".slot", "expected a factor index");
      slot = slotJ.get<int>();
      if (slot < 0 || slot >= p.composite.size())
        throw Error(ErrorKind::IndexOutOfRange, path + ".slot " + std::to_string(slot));
      target = p.composite.factors[slot];
    }
    const auto probs = measure_probabilities(target, tol);
    int outcome = 0;
    bool sampled = false;
    if (outJ == "sample") {
      sampled = true;
      outcome = uniform01(rng) < probs[0] ? 0 : 1;
    } else if (outJ.is_number_integer()) {
      outcome = outJ.get<int>();
    } else {
      fail(path + ".outcome", "expected 0, 1 or \"sample\"");
    }
    const SectorVector reduced = reduce_state(target, outcome, tol);
    const double repeat = measure_probabilities(reduced, tol)[outcome];

    Json step;
    step["step"] = "measure";
    step["slot"] = slotJ;
    step["sector"] = to_string(target.sector);
    step["probabilities"] = weights_json(probs);
    step["sampled"] = sampled;
    step["outcome"] = outcome;
    step["reduced"] = vector_json(reduced);
    step["repeat_probability"] = repeat;
    rep.checks.push_back(make_check("scenario.measure" + std::to_string(i) + ".completeness",
                                    "sum of outcome weights = 1", std::abs(probs[0] + probs[1] - 1.0), tol));
    rep.checks.push_back(make_check("scenario.measure" + std::to_string(i) + ".repeat",
                                    "repeated outcome has probability 1", std::abs(repeat - 1.0), tol));
    if (p.isPair) {
      if (target.sector == Sector::Plus)
        p.pair.plus = reduced;
      else
        p.pair.minus = reduced;
    } else {
      p.composite = composite_measure(p.composite, slot, outcome, tol);
      step["amplitude"] = row_json(p.composite.amplitude);
    }
    rep.steps.push_back(step);
  }
}

}  // namespace

Report run_scenario(const Json& doc, double tol) {
  if (!doc.is_object()) fail("scenario", "top level must be an object");
  const Json& ver = require(doc, "schema_version", "scenario");
  if (!ver.is_string()) fail("schema_version", "expected a string");
  if (ver != "1") fail("schema_version", "unsupported version " + ver.get<std::string>());
  std::uint64_t seed = 0;
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_integer()) fail("seed", "expected an integer");
    seed = it->get<std::uint64_t>();
  }
  std::mt19937_64 rng(seed);

  Report rep;
  {
    Json echo;
    echo["step"] = "input";
    echo["schema_version"] = ver;
    echo["seed"] = seed;
    echo["tolerance"] = tol;
    rep.steps.push_back(echo);
  }
  Prepared p = prepare(doc, rep, tol);

  std::vector<std::pair<Json, Observable>> obs;
  if (auto it = doc.find("observables"); it != doc.end()) {
    if (!it->is_array()) fail("observables", "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i)
      obs.emplace_back((*it)[i], observable((*it)[i], "observables[" + std::to_string(i) + "]"));
  }
  observe(p, obs, rep);
  frames(doc, p, obs, rep, tol);
  measurements(doc, p, rng, rep, tol);
  return rep;
}

Report run_scenario_file(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return run_scenario(doc, tol);
}

}  // namespace twofold::cli
