#pragma once

// Umbrella header.

#include "revmc/cycles.hpp"
#include "revmc/errors.hpp"
#include "revmc/graph.hpp"
#include "revmc/intmat.hpp"
#include "revmc/io.hpp"
#include "revmc/kolmogorov.hpp"
#include "revmc/markov.hpp"
#include "revmc/parameterization.hpp"
#include "revmc/transition.hpp"
