#pragma once

// Umbrella header: the whole library.

#include "branchblocks/bigint.hpp"
#include "branchblocks/branching.hpp"
#include "branchblocks/characters.hpp"
#include "branchblocks/interlacing.hpp"
#include "branchblocks/json.hpp"
#include "branchblocks/render.hpp"
#include "branchblocks/tiling.hpp"
#include "branchblocks/verification.hpp"
#include "branchblocks/weights.hpp"
