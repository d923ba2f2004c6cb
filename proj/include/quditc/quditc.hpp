// quditc.hpp
// Umbrella header for the qudit gate compiler, scheduler and simulator.

#pragma once

#include "quditc/gate_spec.hpp"
#include "quditc/grover.hpp"
#include "quditc/matrix.hpp"
#include "quditc/qubit_reference.hpp"
#include "quditc/rotation.hpp"
#include "quditc/schedule.hpp"
#include "quditc/state.hpp"
#include "quditc/synth.hpp"
#include "quditc/system.hpp"
