#pragma once

#include "swarmtsp/baselines.hpp"
#include "swarmtsp/bench.hpp"
#include "swarmtsp/error.hpp"
#include "swarmtsp/instance.hpp"
#include "swarmtsp/localsearch.hpp"
#include "swarmtsp/plot.hpp"
#include "swarmtsp/pso.hpp"
#include "swarmtsp/random.hpp"
#include "swarmtsp/tsplib.hpp"
