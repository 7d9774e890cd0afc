#pragma once

// Umbrella header for the algebra, module and analysis layers. The CLI
// (blocksuper/cli.hpp) is separate because it pulls in CLI11 and nlohmann/json.

#include <blocksuper/rational.hpp>
#include <blocksuper/scalar.hpp>
#include <blocksuper/poly.hpp>
#include <blocksuper/algebra.hpp>
#include <blocksuper/hv.hpp>
#include <blocksuper/modules.hpp>
#include <blocksuper/expr.hpp>
#include <blocksuper/linalg.hpp>
#include <blocksuper/closure.hpp>
#include <blocksuper/invariants.hpp>
#include <blocksuper/rank2.hpp>
#include <blocksuper/verify.hpp>
