#pragma once

// Library entry point. The oracle headers (spinor_gates/oracle/*) are not
// included here; they pull in Eigen and are meant for verification code.

#include "spinor_gates/core/element.hpp"
#include "spinor_gates/core/generators.hpp"
#include "spinor_gates/extraction/extraction.hpp"
#include "spinor_gates/extraction/reflections.hpp"
#include "spinor_gates/gates/circuit.hpp"
#include "spinor_gates/gates/gates.hpp"
#include "spinor_gates/states/ladder.hpp"
#include "spinor_gates/states/state_ops.hpp"
