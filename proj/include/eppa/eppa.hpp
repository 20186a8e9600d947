#pragma once

// Umbrella header: the whole library in one include.

#include "eppa/automorphisms.hpp"
#include "eppa/bigint.hpp"
#include "eppa/bounds.hpp"
#include "eppa/canonical.hpp"
#include "eppa/generalized.hpp"
#include "eppa/io.hpp"
#include "eppa/kkfree.hpp"
#include "eppa/kneser.hpp"
#include "eppa/structures.hpp"
#include "eppa/valuation.hpp"
#include "eppa/verify.hpp"
#include "eppa/witness.hpp"
