#include "liesplit/numeric.hpp"

#include <sstream>

namespace liesplit {

std::string to_string(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string to_string(const GaussRat& x) {
  if (is_zero(x.im)) return to_string(x.re);
  std::ostringstream os;
  if (!is_zero(x.re)) {
    os << x.re;
    if (sgn(x.im) >= 0) os << "+";
  }
  if (x.im == 1)
    os << "i";
  else if (x.im == -1)
    os << "-i";
  else
    os << x.im << "i";
  return os.str();
}

}  // namespace liesplit
