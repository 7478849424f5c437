#pragma once

// Umbrella header.

#include "counting.hpp"
#include "families.hpp"
#include "marked_words.hpp"
#include "necklaces.hpp"
#include "permutation.hpp"
#include "reference_data.hpp"
#include "switch_bijection.hpp"
#include "text_io.hpp"
#include "trace_checks.hpp"
#include "verify.hpp"
