#pragma once

#include "propmod/affine.hpp"
#include "propmod/bands.hpp"
#include "propmod/checker.hpp"
#include "propmod/enumerate.hpp"
#include "propmod/error.hpp"
#include "propmod/feasibility.hpp"
#include "propmod/interval.hpp"
#include "propmod/intervals.hpp"
#include "propmod/numsem.hpp"
#include "propmod/rational.hpp"
