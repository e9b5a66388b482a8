#include "bigfloat.h"

#include <iomanip>
#include <sstream>

#include "error.h"

namespace rupert {
namespace {

// Prints with extra fractional digits, then cuts. The tail margin keeps the
// final printing round-off from reaching the truncation position.
std::string truncate_at(const BigFloat& ax, int frac_digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(frac_digits + 30) << ax;
  std::string s = os.str();
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    dot = s.size();
    s += '.';
  }
  s.resize(dot + 1 + static_cast<size_t>(frac_digits), '0');
  return s;
}

}  // namespace

std::string floor_fixed(const BigFloat& x, int frac_digits) {
  if (frac_digits < 0) fail(ErrorCode::kInvalid, "floor_fixed: negative digit count");
  if (x < 0) return "-" + truncate_at(BigFloat(-x), frac_digits);
  return truncate_at(x, frac_digits);
}

std::string floor_fixed(double x, int frac_digits) {
  // A double converts to BigFloat exactly, so the decimal expansion below is
  // the exact value of x.
  PrecisionGuard guard(60);
  return floor_fixed(BigFloat(x), frac_digits);
}

}  // namespace rupert
