#pragma once

// Umbrella header for the null-Lagrangian toolkit.

#include "nlag/errors.hpp"
#include "nlag/galilean.hpp"
#include "nlag/invariance.hpp"
#include "nlag/numeric.hpp"
#include "nlag/parse.hpp"
#include "nlag/polynomial.hpp"
#include "nlag/rational.hpp"
#include "nlag/symbol.hpp"
#include "nlag/variational.hpp"
