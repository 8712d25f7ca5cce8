#include "yangian/scalar/gamma.hpp"

#include "yangian/error.hpp"

namespace yangian {

HighFloat gamma_float(const HighFloat& x) {
  if (x <= 0 && boost::multiprecision::floor(x) == x) throw PoleError("gamma function pole at " + x.str());
  return boost::multiprecision::tgamma(x);
}

}  // namespace yangian
