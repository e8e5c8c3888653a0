#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "twofold/cli.hpp"

namespace twofold::cli {

double default_tol_from_env() {
  const char* v = std::getenv("TWOFOLD_TOL");
  if (v == nullptr || *v == '\0') return default_tolerance;
  char* end = nullptr;
  const double t = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(t > 0.0) || !std::isfinite(t))
    throw Error(ErrorKind::ParseError, std::string("TWOFOLD_TOL: not a positive number: ") + v);
  return t;
}

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json check_json(const CheckResult& c) {
  Json j;
  j["id"] = c.id;
  j["paper_eq"] = c.equation;
  // JSON has no infinity; a non-finite residual is reported as null.
  if (std::isfinite(c.residual))
    j["residual"] = c.residual;
  else
    j["residual"] = nullptr;
  j["pass"] = c.pass;
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["version"] = kReportVersion;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
  j["scenario_steps"] = r.steps;
  return j;
}

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json row_json(const CVecX& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(complex_json(v(i)));
  return j;
}

Json matrix_json(const CMatX& m) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) j.push_back(row_json(m.row(r)));
  return j;
}

std::string format_real(double x) {
  if (std::abs(x) < 1e-13) return "0";
  for (long long d = 1; d <= 64; ++d) {
    const double n = std::round(x * double(d));
    if (std::abs(x * double(d) - n) < 1e-12 * double(d) && std::abs(n) < 1e9) {
      const long long p = static_cast<long long>(n);
      return d == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(d);
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_complex(cplx z) {
  const bool hasRe = std::abs(z.real()) >= 1e-13;
  const bool hasIm = std::abs(z.imag()) >= 1e-13;
  if (!hasIm) return format_real(z.real());
  const std::string im = format_real(std::abs(z.imag()));
  const std::string imPart = (im == "1" ? "" : im) + "i";
  if (!hasRe) return (z.imag() < 0 ? "-" : "") + imPart;
  return format_real(z.real()) + (z.imag() < 0 ? " - " : " + ") + imPart;
}

std::string format_matrix(const CMatX& m) {
  std::vector<std::string> cells(m.size());
  std::size_t width = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      auto& s = cells[r * m.cols() + c];
      s = format_complex(m(r, c));
      width = std::max(width, s.size());
    }
  std::ostringstream os;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto& s = cells[r * m.cols() + c];
      os << (c ? "  " : " ") << std::string(width - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace twofold::cli
