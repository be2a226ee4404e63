#ifndef OSOMA_OSOMA_HPP
#define OSOMA_OSOMA_HPP

#include "osoma/errors.hpp"
#include "osoma/random.hpp"
#include "osoma/core.hpp"
#include "osoma/benchmarks.hpp"
#include "osoma/soma.hpp"
#include "osoma/baselines.hpp"
#include "osoma/runner.hpp"
#include "osoma/swap.hpp"
#include "osoma/cost_matrix.hpp"
#include "osoma/tsp.hpp"
#include "osoma/dynamic.hpp"
#include "osoma/io.hpp"
#include "osoma/experiment.hpp"

#endif
