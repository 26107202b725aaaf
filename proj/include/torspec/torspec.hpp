#pragma once

#include "torspec/error.hpp"
#include "torspec/intmath.hpp"
#include "torspec/rootdata.hpp"
#include "torspec/weights.hpp"
#include "torspec/mult.hpp"
#include "torspec/torus.hpp"
#include "torspec/spectra.hpp"
#include "torspec/verify.hpp"
#include "torspec/json_io.hpp"
#include "torspec/cli.hpp"
