#pragma once

#include "truth_table.hpp"
#include "predicates.hpp"
#include "clones.hpp"
#include "closure.hpp"
#include "classify.hpp"
#include "lattice.hpp"
#include "verify.hpp"
