#pragma once

#include "fsq/basis.hpp"
#include "fsq/certifier.hpp"
#include "fsq/engine.hpp"
#include "fsq/errors.hpp"
#include "fsq/lattice.hpp"
#include "fsq/special.hpp"
#include "fsq/squeezers.hpp"
#include "fsq/states.hpp"
