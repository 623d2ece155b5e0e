#pragma once

#include "qhop/counting.hpp"
#include "qhop/evolve.hpp"
#include "qhop/fock.hpp"
#include "qhop/gates.hpp"
#include "qhop/instances.hpp"
#include "qhop/io.hpp"
#include "qhop/jw.hpp"
#include "qhop/lattice.hpp"
#include "qhop/nonlinear.hpp"
#include "qhop/oracle.hpp"
#include "qhop/rng.hpp"
#include "qhop/scaling.hpp"
#include "qhop/state.hpp"
#include "qhop/version.hpp"
