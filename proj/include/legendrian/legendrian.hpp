#pragma once

#include "legendrian/errors.hpp"
#include "legendrian/exact_arith.hpp"
#include "legendrian/torus_knot.hpp"
#include "legendrian/diagram.hpp"
#include "legendrian/invariants.hpp"
#include "legendrian/seifert.hpp"
#include "legendrian/families.hpp"
#include "legendrian/io.hpp"
