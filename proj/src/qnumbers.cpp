#include "braidlab/qnumbers.hpp"

#include "braidlab/errors.hpp"

#include <cmath>

namespace braidlab {

double q_number(int k, double q) {
  if (q == 0.0) throw ValidationError("q-number needs q != 0");
  if (std::abs(q - 1.0) < kClassicalLimitThreshold) return k;
  if (std::abs(q + 1.0) < kClassicalLimitThreshold) return (k % 2 == 0 ? -k : k);
  return (std::pow(q, k) - std::pow(q, -k)) / (q - 1.0 / q);
}

double q_factorial(int k, double q) {
  if (k < 0) throw ValidationError("q-factorial of a negative number");
  double result = 1.0;
  for (int i = 2; i <= k; ++i) result *= q_number(i, q);
  return result;
}

double z_bracket(int m, double z) {
  if (m < 0) throw ValidationError("bracket of a negative number");
  double sum = 0.0;
  double power = 1.0;
  for (int i = 0; i < m; ++i) {
    sum += power;
    power *= z;
  }
  return sum;
}

double z_bracket_factorial(int m, double z) {
  if (m < 0) throw ValidationError("bracket factorial of a negative number");
  double result = 1.0;
  for (int i = 2; i <= m; ++i) result *= z_bracket(i, z);
  return result;
}

double bracket(int m, double xi) {
  if (std::abs(xi * xi - 1.0) < kClassicalLimitThreshold) return z_bracket(m, xi * xi);
  return (std::pow(xi, 2 * m) - 1.0) / (xi * xi - 1.0);
}

double bracket_factorial(int m, double xi) {
  if (m < 0) throw ValidationError("bracket factorial of a negative number");
  double result = 1.0;
  for (int i = 2; i <= m; ++i) result *= bracket(i, xi);
  return result;
}

}  // namespace braidlab
