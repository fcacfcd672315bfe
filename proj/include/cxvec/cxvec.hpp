#pragma once

#include "cxvec/errors.hpp"   // IWYU pragma: export
#include "cxvec/scalar.hpp"   // IWYU pragma: export
#include "cxvec/vector.hpp"   // IWYU pragma: export
#include "cxvec/geometry.hpp" // IWYU pragma: export
#include "cxvec/matrix.hpp"   // IWYU pragma: export
#include "cxvec/series.hpp"   // IWYU pragma: export
#include "cxvec/rng.hpp"      // IWYU pragma: export
#include "cxvec/emf.hpp"      // IWYU pragma: export
