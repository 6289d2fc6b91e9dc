#pragma once

#include "twideal/idealizer/decomposition.hpp"
#include "twideal/idealizer/idealizer.hpp"
