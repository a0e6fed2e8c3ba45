#pragma once

#include "ybx/braiding.hpp"
#include "ybx/brace.hpp"
#include "ybx/catalog.hpp"
#include "ybx/enumerate.hpp"
#include "ybx/finset.hpp"
#include "ybx/io.hpp"
#include "ybx/linrep.hpp"
#include "ybx/prelie.hpp"
#include "ybx/shelf.hpp"
#include "ybx/solution.hpp"
#include "ybx/types.hpp"
#include "ybx/ybalg.hpp"
