#pragma once

#include <map>
#include <string>
#include <vector>

#include "sipot/model.hpp"

namespace sipot::catalog {

/// V(z) = e^{-2z} - 2b e^{-z} on the full line, W(z; a) = a - e^{-z}, a_n = b - 1/2 - n.
/// The remainder is R(a) = 2a + 1; the form 2(a - 1) printed with the model is kept in
/// the label only. Throws NoBoundStateError for b <= 1/2.
ShapeInvariantModel make_morse(double b);

/// Morse with the printed remainder R(a) = 2(a - 1) substituted. This variant does not
/// factorize the Hamiltonian; it exists so the discrepancy can be tested.
ShapeInvariantModel make_morse_printed_remainder(double b);

/// V(z) = -(A+B)^2 + A(A-1) sec^2 z + B(B-1) csc^2 z on (0, pi/2),
/// W(z; a) = a tan z - (a + B - A) cot z with a_n = A + n, R(a_n) = 4(2n + A + B - 1).
/// Throws UnsupportedParameterError unless A > 1 and B > 1.
ShapeInvariantModel make_pt1(double A, double B);

/// V(x) = -alpha/x + beta/x^2 + gamma on the half-line.
Potential make_inverse_power(double alpha, double beta, double gamma);

/// Radial Coulomb problem shifted so that its ground level sits at zero:
/// V(x) = -e2/x + l(l+1)/x^2 + e2^2 / (4 (l+1)^2).
Potential make_coulomb_effective(double e2, int l);

/// V(x) = -1/x + 1/x^2.
Potential make_kratzer();

/// V(r) = -strength e^{-r} / (1 - e^{-r}).
Potential make_hulthen(double strength = 1.0);

/// V(x) = x^2 on the full line; solver self-test.
Potential make_harmonic();

/// Closed-form levels used as test references.
namespace levels {
/// E_n = e2^2/4 (1/(l+1)^2 - 1/(n+l+1)^2)
double coulomb_effective(double e2, int l, int n);
/// Hydrogen-like levels with effective angular momentum l'(l'+1) = 1: -1/(4 (n + l' + 1)^2)
double kratzer(int n);
/// E_n = -((strength - N^2) / (2N))^2 with N = n + 1; valid while N^2 < strength.
double hulthen(double strength, int n);
double morse(double b, int n);
double pt1(double A, double B, int n);
}  // namespace levels

/// Names accepted by potential_by_name / model_by_name.
std::vector<std::string> potential_names();
std::vector<std::string> model_names();

/// Builds a named potential from a parameter map; missing parameters take defaults
/// (morse b=5, pt1 A=2 B=3, coulomb e2=1 l=0, hulthen strength=1,
/// inverse-power alpha=beta=1 gamma=0). Unknown names throw ArgumentError.
Potential potential_by_name(const std::string& name, const std::map<std::string, double>& params);

/// Only "morse" and "pt1" are shape-invariant models.
ShapeInvariantModel model_by_name(const std::string& name, const std::map<std::string, double>& params);

}  // namespace sipot::catalog
