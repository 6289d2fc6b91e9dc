#pragma once

#include "twideal/twist/automorphism.hpp"
#include "twideal/twist/twisted.hpp"
