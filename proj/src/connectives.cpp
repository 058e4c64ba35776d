#include "fgac/connectives.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fgac {

namespace {

void check_degree(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error(std::string(what) + " outside [0,1]: " + std::to_string(x));
}

}  // namespace

TripletSpec TripletSpec::power(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("power isomorphism requires c > 0");
  TripletSpec s;
  s.isomorphism = Isomorphism::power;
  s.power_exponent = c;
  return s;
}

double TripletSpec::phi(double x) const {
  if (isomorphism == Isomorphism::identity || power_exponent == 1.0) return x;
  return std::pow(x, power_exponent);
}

double TripletSpec::phi_inv(double x) const {
  if (isomorphism == Isomorphism::identity || power_exponent == 1.0) return x;
  return std::pow(x, 1.0 / power_exponent);
}

double t_norm(const TripletSpec& spec, double x, double y) {
  check_degree(x, "t_norm argument");
  check_degree(y, "t_norm argument");
  const double value = spec.phi(x) + spec.phi(y) - 1.0;
  return spec.phi_inv(std::max(0.0, value));
}

double implicator(const TripletSpec& spec, double x, double y) {
  check_degree(x, "implicator argument");
  check_degree(y, "implicator argument");
  const double value = 1.0 - spec.phi(x) + spec.phi(y);
  return spec.phi_inv(std::min(1.0, value));
}

double negator(const TripletSpec& spec, double x) {
  check_degree(x, "negator argument");
  return spec.phi_inv(1.0 - spec.phi(x));
}

double averaging(const TripletSpec& spec, double x, double y) {
  check_degree(x, "averaging argument");
  check_degree(y, "averaging argument");
  return spec.phi_inv(0.5 * (spec.phi(x) + spec.phi(y)));
}

double decision_threshold(const TripletSpec& spec) { return spec.phi_inv(0.5); }

namespace {

VectorXd lower_weights(OwaScheme scheme, int n) {
  VectorXd w(n);
  switch (scheme) {
    case OwaScheme::strict_min:
    case OwaScheme::strict_max:
      w.setZero();
      w[n - 1] = 1.0;
      break;
    case OwaScheme::additive:
      for (int i = 1; i <= n; ++i) w[i - 1] = 2.0 * i / (double(n) * (n + 1));
      break;
    case OwaScheme::exponential: {
      // 2^(i-1) / (2^n - 1), evaluated as exp2 so large n does not overflow
      const double denom = 1.0 - std::exp2(-double(n));
      for (int i = 1; i <= n; ++i) w[i - 1] = std::exp2(double(i - 1 - n)) / denom;
      break;
    }
    case OwaScheme::inverse_additive: {
      double dn = 0.0;
      for (int i = 1; i <= n; ++i) dn += 1.0 / i;
      for (int i = 1; i <= n; ++i) w[i - 1] = 1.0 / ((n - i + 1) * dn);
      break;
    }
  }
  return w;
}

}  // namespace

OwaWeights make_owa_weights(OwaScheme scheme, int n, OwaDirection direction,
                            std::optional<int> truncation) {
  if (n < 1) throw std::invalid_argument("owa weights require n >= 1");
  if (truncation && (*truncation < 1 || *truncation > n))
    throw std::invalid_argument("owa truncation must lie in [1, n]");

  VectorXd lower;
  if (truncation && *truncation < n) {
    lower = VectorXd::Zero(n);
    lower.tail(*truncation) = lower_weights(scheme, *truncation);
  } else {
    lower = lower_weights(scheme, n);
  }

  OwaWeights w;
  w.scheme = scheme;
  w.direction = direction;
  w.truncation = truncation;
  // upper weights are the exact reversal of the lower ones (complementarity)
  w.values = direction == OwaDirection::lower ? lower : lower.reverse().eval();
  return w;
}

double owa(const OwaWeights& weights, const VectorXd& values) {
  if (weights.values.size() != values.size())
    throw std::invalid_argument("owa: weight/value length mismatch");
  VectorXd sorted = values;
  std::stable_sort(sorted.data(), sorted.data() + sorted.size(), std::greater<double>());
  return weights.values.dot(sorted);
}

const char* to_string(OwaScheme s) {
  switch (s) {
    case OwaScheme::strict_min: return "strict_min";
    case OwaScheme::strict_max: return "strict_max";
    case OwaScheme::additive: return "additive";
    case OwaScheme::exponential: return "exponential";
    case OwaScheme::inverse_additive: return "inverse_additive";
  }
  return "?";
}

std::optional<OwaScheme> owa_scheme_from_string(const std::string& s) {
  if (s == "strict_min") return OwaScheme::strict_min;
  if (s == "strict_max") return OwaScheme::strict_max;
  if (s == "additive" || s == "add") return OwaScheme::additive;
  if (s == "exponential" || s == "exp") return OwaScheme::exponential;
  if (s == "inverse_additive" || s == "invadd") return OwaScheme::inverse_additive;
  return std::nullopt;
}

namespace reference {

double t_norm(Tnorm kind, double x, double y) {
  check_degree(x, "t_norm argument");
  check_degree(y, "t_norm argument");
  switch (kind) {
    case Tnorm::minimum: return std::min(x, y);
    case Tnorm::product: return x * y;
    case Tnorm::drastic: return std::max(x, y) == 1.0 ? std::min(x, y) : 0.0;
    case Tnorm::nilpotent_minimum: return x + y > 1.0 ? std::min(x, y) : 0.0;
  }
  return 0.0;
}

double r_implicator(Tnorm kind, double x, double y) {
  check_degree(x, "implicator argument");
  check_degree(y, "implicator argument");
  switch (kind) {
    case Tnorm::minimum: return x <= y ? 1.0 : y;
    case Tnorm::product: return x <= y ? 1.0 : y / x;
    case Tnorm::drastic: return x == 1.0 ? y : 1.0;
    case Tnorm::nilpotent_minimum: return x <= y ? 1.0 : std::max(1.0 - x, y);
  }
  return 1.0;
}

}  // namespace reference

}  // namespace fgac
