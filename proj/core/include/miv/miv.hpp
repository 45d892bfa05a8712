#pragma once

#include "miv/condorcet.hpp"
#include "miv/error.hpp"
#include "miv/instance_io.hpp"
#include "miv/limits.hpp"
#include "miv/majority.hpp"
#include "miv/profile.hpp"
#include "miv/rational.hpp"
#include "miv/representation.hpp"
#include "miv/single_crossing.hpp"
#include "miv/structure.hpp"
