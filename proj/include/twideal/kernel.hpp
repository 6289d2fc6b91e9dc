#pragma once

#include "twideal/kernel/error.hpp"
#include "twideal/kernel/field.hpp"
#include "twideal/kernel/groebner.hpp"
#include "twideal/kernel/hilbert.hpp"
#include "twideal/kernel/ideal.hpp"
#include "twideal/kernel/linalg.hpp"
#include "twideal/kernel/monomial.hpp"
#include "twideal/kernel/poly.hpp"
#include "twideal/kernel/unipoly.hpp"
