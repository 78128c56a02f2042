#pragma once

// Umbrella header.

#include <bridgemap/continued_fraction.hpp>
#include <bridgemap/count_table.hpp>
#include <bridgemap/counting.hpp>
#include <bridgemap/error.hpp>
#include <bridgemap/families.hpp>
#include <bridgemap/golden.hpp>
#include <bridgemap/integer.hpp>
#include <bridgemap/invariants.hpp>
#include <bridgemap/knot_class.hpp>
#include <bridgemap/ors.hpp>
#include <bridgemap/rational.hpp>
