#pragma once

#include "bandforge/gluing/bloch_wigner.hpp"
#include "bandforge/gluing/edge_classes.hpp"
#include "bandforge/gluing/equations.hpp"
#include "bandforge/gluing/newton.hpp"
