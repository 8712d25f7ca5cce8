#pragma once

#include "yangian/error.hpp"
#include "yangian/report.hpp"
#include "yangian/scalar/gamma.hpp"
#include "yangian/scalar/laurent_series.hpp"
#include "yangian/scalar/matrix.hpp"
#include "yangian/scalar/polynomial.hpp"
#include "yangian/scalar/rational.hpp"
#include "yangian/scalar/rational_function.hpp"
#include "yangian/fock.hpp"
#include "yangian/lax.hpp"
#include "yangian/monodromy.hpp"
#include "yangian/invariants.hpp"
#include "yangian/bethe.hpp"
#include "yangian/lattice.hpp"

namespace yangian {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace yangian
