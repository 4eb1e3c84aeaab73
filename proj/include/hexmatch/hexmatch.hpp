#pragma once

#include "hexmatch/bitcore.hpp"
#include "hexmatch/kingwen.hpp"
#include "hexmatch/matching.hpp"
#include "hexmatch/optimizer.hpp"
#include "hexmatch/orbits.hpp"
