#pragma once

// Umbrella header: the whole toolkit minus the CLI layer.

#include "fringelab/coherence.hpp"
#include "fringelab/config.hpp"
#include "fringelab/constants.hpp"
#include "fringelab/csv.hpp"
#include "fringelab/emit.hpp"
#include "fringelab/errors.hpp"
#include "fringelab/field.hpp"
#include "fringelab/interference.hpp"
#include "fringelab/monte_carlo.hpp"
#include "fringelab/numeric.hpp"
#include "fringelab/rng.hpp"
#include "fringelab/spectrum.hpp"
#include "fringelab/spectrum_io.hpp"
#include "fringelab/svg.hpp"
#include "fringelab/timing.hpp"
