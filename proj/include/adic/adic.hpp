#pragma once

// Umbrella header.

#include "adic/cech.hpp"
#include "adic/disc.hpp"
#include "adic/error.hpp"
#include "adic/expr.hpp"
#include "adic/linalg.hpp"
#include "adic/ordgroup.hpp"
#include "adic/polynomial.hpp"
#include "adic/rational.hpp"
#include "adic/spectral.hpp"
#include "adic/tate.hpp"
#include "adic/valuation.hpp"
#include "adic/value.hpp"
