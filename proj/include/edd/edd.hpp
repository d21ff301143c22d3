#pragma once

#include "edd/error.hpp"
#include "edd/ring.hpp"
#include "edd/integer.hpp"
#include "edd/poly.hpp"
#include "edd/proper_rational.hpp"
#include "edd/fraction.hpp"
#include "edd/matrix.hpp"
#include "edd/smith.hpp"
#include "edd/coprime.hpp"
#include "edd/system.hpp"
#include "edd/fof.hpp"
