#pragma once

#include "sswcn/counting.hpp"
#include "sswcn/error.hpp"
#include "sswcn/height.hpp"
#include "sswcn/lattice.hpp"
#include "sswcn/oeis.hpp"
#include "sswcn/periodicity.hpp"
#include "sswcn/polynomial.hpp"
#include "sswcn/sequences.hpp"
#include "sswcn/syt.hpp"
