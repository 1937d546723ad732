#pragma once

#include "casimir/equilibrium.hpp"
#include "casimir/errors.hpp"
#include "casimir/pressure.hpp"
#include "casimir/processes.hpp"
#include "casimir/root_finding.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/thermo_state.hpp"
#include "casimir/units.hpp"
