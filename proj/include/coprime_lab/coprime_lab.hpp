#pragma once

#include "analytic_constants.hpp"
#include "bareiss.hpp"
#include "checked.hpp"
#include "errors.hpp"
#include "exact_densities.hpp"
#include "experiment.hpp"
#include "function_spec.hpp"
#include "gaussian.hpp"
#include "monte_carlo.hpp"
#include "parallel.hpp"
#include "primes.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "sieve.hpp"
#include "totient.hpp"
