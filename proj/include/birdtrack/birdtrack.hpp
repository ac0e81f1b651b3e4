#pragma once

#include "birdtrack/errors.hpp"
#include "birdtrack/polynomial.hpp"
#include "birdtrack/rational_function.hpp"
#include "birdtrack/radical.hpp"
#include "birdtrack/permutation.hpp"
#include "birdtrack/diagram.hpp"
#include "birdtrack/symmetrizers.hpp"
#include "birdtrack/linalg.hpp"
#include "birdtrack/parallel.hpp"
#include "birdtrack/numeric.hpp"
#include "birdtrack/singlets.hpp"
#include "birdtrack/tracebasis.hpp"
#include "birdtrack/basis.hpp"
#include "birdtrack/epsilon.hpp"
#include "birdtrack/json_io.hpp"
#include "birdtrack/verify.hpp"
