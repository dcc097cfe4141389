#pragma once

/// Umbrella header for the whole library.

#include "superweyl/algebra.hpp"
#include "superweyl/borels.hpp"
#include "superweyl/characters.hpp"
#include "superweyl/error.hpp"
#include "superweyl/gamma.hpp"
#include "superweyl/linalg.hpp"
#include "superweyl/mates.hpp"
#include "superweyl/polynomial.hpp"
#include "superweyl/rational.hpp"
#include "superweyl/root_system.hpp"
#include "superweyl/scalar.hpp"
#include "superweyl/verma.hpp"
#include "superweyl/weight.hpp"
#include "superweyl/weyl.hpp"
