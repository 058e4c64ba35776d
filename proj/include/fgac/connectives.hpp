#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

namespace fgac {

using Eigen::VectorXd;

/// Monotone bijection on [0,1] used to transport the Lukasiewicz connectives
/// onto an isomorphic triplet. The power family phi(x) = x^c keeps exact
/// inverses and fixes 0 and 1.
enum class Isomorphism { identity, power };

/// Residual triplet (t-norm, implicator, negator) of the Lukasiewicz family,
/// optionally carried through an isomorphism phi.
struct TripletSpec {
  Isomorphism isomorphism = Isomorphism::identity;
  double power_exponent = 1.0;  // c in phi(x) = x^c, c > 0

  static TripletSpec lukasiewicz() { return {}; }
  static TripletSpec power(double c);

  double phi(double x) const;
  double phi_inv(double x) const;
};

double t_norm(const TripletSpec& spec, double x, double y);
double implicator(const TripletSpec& spec, double x, double y);
double negator(const TripletSpec& spec, double x);

/// N-invariant averaging of two degrees: phi^-1((phi(x)+phi(y))/2).
double averaging(const TripletSpec& spec, double x, double y);

/// Degree above which the positive decision is taken, phi^-1(1/2).
double decision_threshold(const TripletSpec& spec);

enum class OwaScheme { strict_min, strict_max, additive, exponential, inverse_additive };

/// Lower weights soften a minimum, upper weights soften a maximum.
/// Paired lower/upper vectors of one scheme are complementary:
/// (W_L)_i = (W_U)_{n-i+1}.
enum class OwaDirection { lower, upper };

struct OwaWeights {
  VectorXd values;
  OwaScheme scheme = OwaScheme::additive;
  OwaDirection direction = OwaDirection::lower;
  std::optional<int> truncation;
};

/// Builds the scheme's weight vector of length n. With truncation k, only the
/// k most influential positions (tail for lower, head for upper) carry the
/// scheme's weights computed for length k; the rest are zero.
OwaWeights make_owa_weights(OwaScheme scheme, int n, OwaDirection direction,
                            std::optional<int> truncation = std::nullopt);

/// Ordered weighted average: weighted sum over the values sorted descending.
double owa(const OwaWeights& weights, const VectorXd& values);

const char* to_string(OwaScheme s);
std::optional<OwaScheme> owa_scheme_from_string(const std::string& s);

/// Reference evaluation of the other classical t-norms and their
/// R-implicators. Not usable by the classifier, which requires the
/// Lukasiewicz family.
namespace reference {
enum class Tnorm { minimum, product, drastic, nilpotent_minimum };
double t_norm(Tnorm kind, double x, double y);
double r_implicator(Tnorm kind, double x, double y);
}  // namespace reference

}  // namespace fgac
