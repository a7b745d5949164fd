#pragma once

#include "kolkata/analysis.hpp"
#include "kolkata/empirical.hpp"
#include "kolkata/errors.hpp"
#include "kolkata/indices.hpp"
#include "kolkata/lorenz.hpp"
#include "kolkata/presets.hpp"
#include "kolkata/random_curves.hpp"
#include "kolkata/verify.hpp"
