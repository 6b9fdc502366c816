#pragma once

#include "qframes/elimination.hpp"
#include "qframes/error.hpp"
#include "qframes/frames.hpp"
#include "qframes/gen.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/quaternion.hpp"
#include "qframes/qvector.hpp"
#include "qframes/riesz.hpp"
#include "qframes/spectrum.hpp"
#include "qframes/tolerances.hpp"
