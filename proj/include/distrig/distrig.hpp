#pragma once

#include "distrig/census.hpp"
#include "distrig/congruence.hpp"
#include "distrig/enumeration.hpp"
#include "distrig/errors.hpp"
#include "distrig/fit.hpp"
#include "distrig/geometry.hpp"
#include "distrig/graph.hpp"
#include "distrig/graph_enum.hpp"
#include "distrig/matrix.hpp"
#include "distrig/rational.hpp"
#include "distrig/rigidity.hpp"
