#pragma once

#include "twideal/geometry/invariant.hpp"
#include "twideal/geometry/multiplicative.hpp"
#include "twideal/geometry/orbit.hpp"
#include "twideal/geometry/point.hpp"
