#ifndef ORBITCUB_ORBITCUB_HPP_
#define ORBITCUB_ORBITCUB_HPP_

#include "orbitcub/algebra.hpp"
#include "orbitcub/approx.hpp"
#include "orbitcub/cubature.hpp"
#include "orbitcub/errors.hpp"
#include "orbitcub/grid.hpp"
#include "orbitcub/numeric.hpp"
#include "orbitcub/orbit_functions.hpp"
#include "orbitcub/rational.hpp"
#include "orbitcub/refquad.hpp"
#include "orbitcub/weyl.hpp"
#include "orbitcub/xmap.hpp"

#endif  // ORBITCUB_ORBITCUB_HPP_
