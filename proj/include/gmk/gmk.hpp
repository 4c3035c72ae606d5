#pragma once

#include "gmk/bit_matrix.hpp"
#include "gmk/braid.hpp"
#include "gmk/canonical.hpp"
#include "gmk/error.hpp"
#include "gmk/gauss_code.hpp"
#include "gmk/gf2.hpp"
#include "gmk/json_io.hpp"
#include "gmk/limits.hpp"
#include "gmk/meander.hpp"
#include "gmk/meander_builder.hpp"
#include "gmk/meander_matrix.hpp"
#include "gmk/realizability.hpp"
#include "gmk/rotation_oracle.hpp"
#include "gmk/svg.hpp"
