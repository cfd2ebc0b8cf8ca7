#pragma once

#include "cachesim/baselines.hpp"
#include "cachesim/core.hpp"
#include "cachesim/energy.hpp"
#include "cachesim/engine.hpp"
#include "cachesim/harness.hpp"
#include "cachesim/lwrp.hpp"
#include "cachesim/policy.hpp"
#include "cachesim/trace.hpp"
#include "cachesim/victim_buffer.hpp"
