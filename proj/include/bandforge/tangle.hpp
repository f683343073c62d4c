#pragma once

#include "bandforge/tangle/conway.hpp"
#include "bandforge/tangle/diagram.hpp"
#include "bandforge/tangle/fraction.hpp"
#include "bandforge/tangle/goeritz.hpp"
#include "bandforge/tangle/signature.hpp"
#include "bandforge/tangle/two_bridge.hpp"
