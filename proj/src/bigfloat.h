// Multiprecision scalar used by the verification paths. One dynamic mpfr
// type; precision changes are scoped with a guard. The default precision is
// process-global in this boost version, so concurrent high-precision work
// must agree on a single digits setting (the double-precision pipeline never
// touches it).
#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace rupert {

using BigFloat = boost::multiprecision::mpfr_float;

class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Decimal string of x with frac_digits digits after the point, truncated
// toward zero. Truncation keeps lower-bound semantics for positive bounds.
std::string floor_fixed(const BigFloat& x, int frac_digits);

// Same truncation for a plain double, via its exact decimal expansion.
std::string floor_fixed(double x, int frac_digits);

}  // namespace rupert
