#pragma once

#include "ftc/errors.hpp"
#include "ftc/vec.hpp"
#include "ftc/rng.hpp"
#include "ftc/curve.hpp"
#include "ftc/param.hpp"
#include "ftc/curvature.hpp"
#include "ftc/smoothing.hpp"
#include "ftc/projection.hpp"
#include "ftc/enclosing_ball.hpp"
#include "ftc/comparison.hpp"
#include "ftc/distortion.hpp"
#include "ftc/search.hpp"
#include "ftc/variation.hpp"
#include "ftc/io.hpp"
