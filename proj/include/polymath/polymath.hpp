#pragma once

#include "polymath/axioms.hpp"
#include "polymath/bignat.hpp"
#include "polymath/bitstack.hpp"
#include "polymath/contract.hpp"
#include "polymath/errors.hpp"
#include "polymath/hfs.hpp"
#include "polymath/limits.hpp"
#include "polymath/ordering.hpp"
#include "polymath/peano.hpp"
#include "polymath/textio.hpp"
