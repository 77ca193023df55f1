#pragma once

// Umbrella header.

#include "isoext/completion.hpp"
#include "isoext/errors.hpp"
#include "isoext/extension.hpp"
#include "isoext/generate.hpp"
#include "isoext/instance.hpp"
#include "isoext/pointset.hpp"
#include "isoext/report.hpp"
#include "isoext/rng.hpp"
#include "isoext/space.hpp"
#include "isoext/span.hpp"
#include "isoext/tolerances.hpp"
