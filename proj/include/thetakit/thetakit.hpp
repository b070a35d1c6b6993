#ifndef THETAKIT_THETAKIT_HPP
#define THETAKIT_THETAKIT_HPP

#include "thetakit/errata.hpp"
#include "thetakit/json_io.hpp"

#endif  // THETAKIT_THETAKIT_HPP
