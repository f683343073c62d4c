#pragma once

#include "bandforge/surgery/bhw.hpp"
#include "bandforge/surgery/lens.hpp"
#include "bandforge/surgery/slope.hpp"
