#pragma once

// Umbrella header.

#include "nlsabc/analysis.hpp"
#include "nlsabc/boundary.hpp"
#include "nlsabc/config.hpp"
#include "nlsabc/csv.hpp"
#include "nlsabc/errors.hpp"
#include "nlsabc/experiments.hpp"
#include "nlsabc/grid.hpp"
#include "nlsabc/initial.hpp"
#include "nlsabc/normal_mode.hpp"
#include "nlsabc/physics.hpp"
#include "nlsabc/presets.hpp"
#include "nlsabc/solver.hpp"
#include "nlsabc/tridiagonal.hpp"
