#pragma once

#include "bellmap/bell.hpp"
#include "bellmap/errors.hpp"
#include "bellmap/grassmann.hpp"
#include "bellmap/linalg.hpp"
#include "bellmap/matrix.hpp"
#include "bellmap/phase_search.hpp"
#include "bellmap/rng.hpp"
#include "bellmap/serialize.hpp"
#include "bellmap/spin_rep.hpp"
#include "bellmap/yang_mills.hpp"
