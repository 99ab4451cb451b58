#pragma once

// Umbrella header.

#include "equiloc/coadjoint.hpp"
#include "equiloc/equivalence.hpp"
#include "equiloc/errors.hpp"
#include "equiloc/expsum.hpp"
#include "equiloc/json_io.hpp"
#include "equiloc/laurent.hpp"
#include "equiloc/linalg.hpp"
#include "equiloc/linform.hpp"
#include "equiloc/localize.hpp"
#include "equiloc/polytope.hpp"
#include "equiloc/rational.hpp"
#include "equiloc/scalar.hpp"
#include "equiloc/series.hpp"
#include "equiloc/toric.hpp"
