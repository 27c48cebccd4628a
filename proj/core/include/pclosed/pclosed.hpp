#pragma once

#include "pclosed/cartier.hpp"
#include "pclosed/criterion.hpp"
#include "pclosed/derivation.hpp"
#include "pclosed/error.hpp"
#include "pclosed/field.hpp"
#include "pclosed/linalg.hpp"
#include "pclosed/monomial.hpp"
#include "pclosed/multiplier.hpp"
#include "pclosed/pdecomp.hpp"
#include "pclosed/poly.hpp"
#include "pclosed/ratfn.hpp"
#include "pclosed/series.hpp"
