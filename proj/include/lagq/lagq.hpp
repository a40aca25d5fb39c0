#pragma once

// Umbrella header for the lagq library.

#include "lagq/detform.hpp"
#include "lagq/factorials.hpp"
#include "lagq/laguerre.hpp"
#include "lagq/numeric.hpp"
#include "lagq/poly.hpp"
#include "lagq/rational.hpp"
#include "lagq/recurrence.hpp"
#include "lagq/verify.hpp"
