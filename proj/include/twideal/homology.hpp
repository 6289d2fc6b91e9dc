#pragma once

#include "twideal/homology/module.hpp"
#include "twideal/homology/quotient_tor.hpp"
#include "twideal/homology/resolution.hpp"
#include "twideal/homology/tor.hpp"
