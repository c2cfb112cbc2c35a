#pragma once

#include "quartic/coefficient.hpp"
#include "quartic/count_table.hpp"
#include "quartic/errors.hpp"
#include "quartic/fixed_point.hpp"
#include "quartic/networks.hpp"
#include "quartic/pipeline.hpp"
#include "quartic/quadrangulations.hpp"
#include "quartic/series.hpp"
#include "quartic/series_functions.hpp"
#include "quartic/three_connected_maps.hpp"
