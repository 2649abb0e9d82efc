#pragma once

#include "isot/decide.hpp"
#include "isot/exact.hpp"
#include "isot/gadgets.hpp"
#include "isot/graph.hpp"
#include "isot/io.hpp"
#include "isot/oracle.hpp"
#include "isot/rational.hpp"
#include "isot/search.hpp"
