#pragma once

#include "bandforge/verified/bloch_wigner.hpp"
#include "bandforge/verified/interval.hpp"
#include "bandforge/verified/krawczyk.hpp"
