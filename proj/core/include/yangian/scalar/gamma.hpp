#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace yangian {

// 60 decimal digits of working precision.
using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>>;

// Gamma function; throws PoleError at non-positive integers.
HighFloat gamma_float(const HighFloat& x);

}  // namespace yangian
