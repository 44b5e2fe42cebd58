#pragma once

// Umbrella header for the whole library.

#include "orbitwords/action.hpp"
#include "orbitwords/complexity.hpp"
#include "orbitwords/config.hpp"
#include "orbitwords/continued_fraction.hpp"
#include "orbitwords/factors.hpp"
#include "orbitwords/generator.hpp"
#include "orbitwords/group.hpp"
#include "orbitwords/morphism.hpp"
#include "orbitwords/oeis.hpp"
#include "orbitwords/powers.hpp"
#include "orbitwords/pqstats.hpp"
#include "orbitwords/search.hpp"
#include "orbitwords/suite.hpp"
#include "orbitwords/word.hpp"
