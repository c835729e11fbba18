#pragma once

// Umbrella header for the shift-design personnel task scheduling engine.

#include "sdpts/assignment.hpp"
#include "sdpts/compatibility.hpp"
#include "sdpts/enumerate.hpp"
#include "sdpts/error.hpp"
#include "sdpts/external.hpp"
#include "sdpts/generator.hpp"
#include "sdpts/greedy.hpp"
#include "sdpts/improve.hpp"
#include "sdpts/instance.hpp"
#include "sdpts/io.hpp"
#include "sdpts/lp_writer.hpp"
#include "sdpts/merge.hpp"
#include "sdpts/model.hpp"
#include "sdpts/mps_writer.hpp"
#include "sdpts/time_grid.hpp"
#include "sdpts/validator.hpp"
