#pragma once

#include "rpolylog/errors.hpp"
#include "rpolylog/fitlab.hpp"
#include "rpolylog/gfunc.hpp"
#include "rpolylog/mpcomplex.hpp"
#include "rpolylog/mpcore.hpp"
#include "rpolylog/mpreal.hpp"
#include "rpolylog/parallel.hpp"
#include "rpolylog/polyengine.hpp"
#include "rpolylog/polynomial.hpp"
#include "rpolylog/resurgent.hpp"
#include "rpolylog/shipped.hpp"
#include "rpolylog/version.hpp"
