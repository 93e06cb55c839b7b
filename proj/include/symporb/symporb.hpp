#ifndef SYMPORB_SYMPORB_HPP_
#define SYMPORB_SYMPORB_HPP_

#include "symporb/characters.hpp"
#include "symporb/cyclo.hpp"
#include "symporb/errors.hpp"
#include "symporb/fp.hpp"
#include "symporb/io.hpp"
#include "symporb/lie.hpp"
#include "symporb/maxdim.hpp"
#include "symporb/orbits.hpp"
#include "symporb/polarization.hpp"
#include "symporb/roots.hpp"

#endif
