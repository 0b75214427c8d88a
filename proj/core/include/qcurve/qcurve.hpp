#pragma once

#include "qcurve/characterize.hpp"
#include "qcurve/curve.hpp"
#include "qcurve/errors.hpp"
#include "qcurve/families.hpp"
#include "qcurve/kernel.hpp"
#include "qcurve/numerics.hpp"
#include "qcurve/quaternion.hpp"
#include "qcurve/spline.hpp"
