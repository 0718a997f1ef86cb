#pragma once

#include "adjlab/bitset.hpp"
#include "adjlab/contiguity.hpp"
#include "adjlab/crossing.hpp"
#include "adjlab/errors.hpp"
#include "adjlab/generators.hpp"
#include "adjlab/graph.hpp"
#include "adjlab/io.hpp"
#include "adjlab/isomorphism.hpp"
#include "adjlab/labeling.hpp"
#include "adjlab/rng.hpp"
#include "adjlab/set_system.hpp"
#include "adjlab/verify.hpp"
