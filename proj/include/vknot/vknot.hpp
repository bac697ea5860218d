#pragma once

// Umbrella header for the vknot library: chord/arrow diagram codes for
// virtual knots and the exact invariants computed on them.

#include "alexander.hpp"
#include "bracket.hpp"
#include "codes.hpp"
#include "diagram.hpp"
#include "families.hpp"
#include "filamentation.hpp"
#include "flat.hpp"
#include "laurent.hpp"
#include "moves.hpp"
