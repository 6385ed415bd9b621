// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

// Umbrella header for the whole library.

#pragma once

#include "lorentz/core.hpp"       // IWYU pragma: export
#include "lorentz/decompose.hpp"  // IWYU pragma: export
#include "lorentz/errors.hpp"     // IWYU pragma: export
#include "lorentz/matrix.hpp"     // IWYU pragma: export
#include "lorentz/polar.hpp"      // IWYU pragma: export
#include "lorentz/sampler.hpp"    // IWYU pragma: export
#include "lorentz/sym_eig4.hpp"   // IWYU pragma: export
