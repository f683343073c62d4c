#pragma once

#include "bandforge/tri/fixtures.hpp"
#include "bandforge/tri/isomorphism.hpp"
#include "bandforge/tri/parse.hpp"
#include "bandforge/tri/permutation.hpp"
#include "bandforge/tri/serialize.hpp"
#include "bandforge/tri/triangulation.hpp"
#include "bandforge/tri/validate.hpp"
