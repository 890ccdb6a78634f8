#pragma once

// Umbrella header.

#include "locuskit/errors.hpp"
#include "locuskit/locus.hpp"
#include "locuskit/numeric.hpp"
#include "locuskit/polygon.hpp"
#include "locuskit/power_sums.hpp"
#include "locuskit/tolerances.hpp"
#include "locuskit/trig_lemmas.hpp"
