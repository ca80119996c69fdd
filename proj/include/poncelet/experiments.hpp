#pragma once

#include "poncelet/experiments/fitting.hpp"
#include "poncelet/experiments/report.hpp"
#include "poncelet/experiments/sweep.hpp"
#include "poncelet/experiments/verifiers.hpp"
