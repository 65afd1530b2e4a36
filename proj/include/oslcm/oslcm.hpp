#ifndef OSLCM_OSLCM_HPP
#define OSLCM_OSLCM_HPP

#include "oslcm/core.hpp"
#include "oslcm/exact.hpp"
#include "oslcm/generators.hpp"
#include "oslcm/io.hpp"
#include "oslcm/median.hpp"
#include "oslcm/svg.hpp"

#endif
