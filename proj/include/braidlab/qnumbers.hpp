#pragma once

/**
 * @file qnumbers.hpp
 * @brief q-integers [k]_q = (q^k - q^{-k})/(q - q^{-1}) and brackets [[m]]_xi = (xi^{2m} - 1)/(xi^2 - 1).
 */

namespace braidlab {

/// Below this distance from 1 the q-integer returns its classical limit.
inline constexpr double kClassicalLimitThreshold = 1e-9;

double q_number(int k, double q);
double q_factorial(int k, double q);

double bracket(int m, double xi);
double bracket_factorial(int m, double xi);

/// [[m]] written in z = xi^2: 1 + z + ... + z^{m-1}. Valid for any real z, including z = -1.
double z_bracket(int m, double z);
double z_bracket_factorial(int m, double z);

}  // namespace braidlab
