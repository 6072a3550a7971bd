#pragma once

// Umbrella header.

#include "unproj/error.hpp"
#include "unproj/field.hpp"
#include "unproj/ring.hpp"
#include "unproj/polynomial.hpp"
#include "unproj/text.hpp"
#include "unproj/groebner.hpp"
#include "unproj/hilbert.hpp"
#include "unproj/monomial_ideal.hpp"
#include "unproj/ideal.hpp"
#include "unproj/ring_map.hpp"
#include "unproj/unprojection.hpp"
#include "unproj/fano.hpp"
