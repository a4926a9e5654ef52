#pragma once

#include "subsidy/bid_and_take.hpp"
#include "subsidy/core.hpp"
#include "subsidy/envy.hpp"
#include "subsidy/error.hpp"
#include "subsidy/identical.hpp"
#include "subsidy/instances.hpp"
#include "subsidy/matching.hpp"
#include "subsidy/moving_knife.hpp"
#include "subsidy/oracle.hpp"
#include "subsidy/rational.hpp"
#include "subsidy/reduction.hpp"
#include "subsidy/rounding.hpp"
#include "subsidy/verify.hpp"
