#pragma once

#include "arith.hpp"
#include "error.hpp"
#include "export.hpp"
#include "graph.hpp"
#include "harness/checks.hpp"
#include "harness/family.hpp"
#include "harness/instance.hpp"
#include "harness/suite.hpp"
#include "lattice.hpp"
#include "metrics.hpp"
#include "module.hpp"
#include "predicates.hpp"
#include "ring.hpp"
#include "submodule.hpp"
