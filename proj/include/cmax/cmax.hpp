#pragma once

// Umbrella header: kinematics, frame transformations, collisions, dynamics
// and 1D wave solvers for relativity with an invariant maximum speed c_m > c.

#include "cmax/collision.hpp"
#include "cmax/core.hpp"
#include "cmax/dynamics.hpp"
#include "cmax/errors.hpp"
#include "cmax/io.hpp"
#include "cmax/kinematics.hpp"
#include "cmax/vec3.hpp"
#include "cmax/wave.hpp"
#include "cmax/xform.hpp"
