#pragma once

#include <string>

namespace braidlab {

/// The deformation parameter q. Implicit construction from a double accepts q > 0 only;
/// Deformation::expert admits any nonzero real value.
class Deformation {
 public:
  Deformation(double q);  // NOLINT(google-explicit-constructor)

  static Deformation expert(double q);

  double value() const { return q_; }
  operator double() const { return q_; }  // NOLINT(google-explicit-constructor)

 private:
  struct ExpertTag {};
  Deformation(double q, ExpertTag);

  double q_;
};

}  // namespace braidlab
