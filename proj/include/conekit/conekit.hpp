#pragma once

#include "conekit/bench.hpp"
#include "conekit/verify.hpp"
