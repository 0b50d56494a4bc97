#pragma once

// Umbrella header for the spinlambda library.

#include "chamber.hpp"
#include "context.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "norms.hpp"
#include "pairdatum.hpp"
#include "rational.hpp"
#include "scan.hpp"
#include "weyl.hpp"
