#pragma once

#include "quasichoice/axioms.hpp"
#include "quasichoice/core.hpp"
#include "quasichoice/generators.hpp"
#include "quasichoice/io.hpp"
#include "quasichoice/parallel.hpp"
#include "quasichoice/represent.hpp"
#include "quasichoice/solvers.hpp"
#include "quasichoice/types.hpp"
