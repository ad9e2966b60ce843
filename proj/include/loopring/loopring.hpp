#pragma once

#include "loopring/error.hpp"
#include "loopring/loop_table.hpp"
#include "loopring/witness.hpp"
#include "loopring/identities.hpp"
#include "loopring/conditions.hpp"
#include "loopring/theorems.hpp"
#include "loopring/gf2_ring.hpp"
#include "loopring/enumerate.hpp"
#include "loopring/catalog.hpp"
#include "loopring/sweep.hpp"
#include "loopring/fixtures.hpp"
