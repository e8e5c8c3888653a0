#include <sstream>

#include "twofold/cli.hpp"
#include "twofold/density.hpp"
#include "twofold/group.hpp"
#include "twofold/measurement.hpp"
#include "twofold/observables.hpp"

namespace twofold::cli {

namespace {

void section(std::ostringstream& os, const std::string& title, const CMatX& m) {
  os << title << "\n" << format_matrix(m);
}

void per_sector(std::ostringstream& os, const std::string& name, const Observable& a) {
  section(os, name + " (4x4 covariant)", a.covariant4());
  for (Sector s : {Sector::Plus, Sector::Minus})
    section(os, name + " " + to_string(s) + " block", a.restriction(s).covariant());
}

}  // namespace

const std::vector<std::string>& spectra_kinds() {
  static const std::vector<std::string> kinds = {"spin",    "polarization", "charge", "conjugation", "energy", "virtual",
                                                 "M",       "G",            "g",      "delta",       "measurement",
                                                 "mixed"};
  return kinds;
}

std::string spectra(const std::string& kind, double q, double E) {
  std::ostringstream os;
  if (kind == "spin") {
    per_sector(os, "spin", make_spin());
  } else if (kind == "polarization") {
    per_sector(os, "polarization", make_polarization());
  } else if (kind == "charge") {
    per_sector(os, "charge q=" + format_real(q), make_charge(q));
  } else if (kind == "conjugation") {
    const ChargeConjugation c = make_charge_conjugation();
    section(os, "conjugation (4x4 covariant)", c.covariant4());
    for (Sector s : {Sector::Plus, Sector::Minus})
      section(os, std::string("conjugation from ") + to_string(s), c.covariant(s));
  } else if (kind == "energy") {
    per_sector(os, "H_I E=" + format_real(E), make_energy(E, EnergyBranch::I));
    per_sector(os, "H_II E=" + format_real(E), make_energy(E, EnergyBranch::II));
  } else if (kind == "virtual") {
    for (Sector s : {Sector::Plus, Sector::Minus})
      section(os, std::string("virtual ") + to_string(s) + " (4x4 covariant)", make_virtual(s).covariant4());
  } else if (kind == "M") {
    section(os, "M", conversion_matrix());
  } else if (kind == "G") {
    section(os, "G", metric_G());
  } else if (kind == "g") {
    section(os, "g", metric_g());
    for (Sector s : {Sector::Plus, Sector::Minus}) section(os, std::string("g ") + to_string(s), sector_metric(s));
  } else if (kind == "delta") {
    for (Sector s : {Sector::Plus, Sector::Minus}) section(os, std::string("Delta ") + to_string(s), sector_delta(s));
  } else if (kind == "measurement") {
    for (Sector s : {Sector::Plus, Sector::Minus})
      for (int mu = 0; mu < 2; ++mu)
        section(os, "pi(" + std::to_string(mu) + ") " + to_string(s), make_projector(s, mu).matrix);
  } else if (kind == "mixed") {
    for (Sector s : {Sector::Plus, Sector::Minus})
      section(os, std::string("maximally mixed ") + to_string(s), maximally_mixed(s).covariant());
  } else {
    throw Error(ErrorKind::UnknownKind, "spectra kind '" + kind + "'");
  }
  return os.str();
}

}  // namespace twofold::cli
