#pragma once

#include "holeforge/certificates.hpp"
#include "holeforge/errors.hpp"
#include "holeforge/good_triples.hpp"
#include "holeforge/lattice_core.hpp"
#include "holeforge/lifting.hpp"
#include "holeforge/rect_simplex.hpp"
#include "holeforge/semigroup_oracle.hpp"
