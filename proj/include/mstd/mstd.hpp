#pragma once

#include "mstd/combinatorics.hpp"
#include "mstd/constructions.hpp"
#include "mstd/error.hpp"
#include "mstd/gap_notation.hpp"
#include "mstd/int_set.hpp"
#include "mstd/kernel.hpp"
#include "mstd/lemma_checks.hpp"
#include "mstd/parallel.hpp"
#include "mstd/search.hpp"
#include "mstd/sets.hpp"
