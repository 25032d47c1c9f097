#pragma once

#include "multigamma/asymptotic.hpp"
#include "multigamma/calibration.hpp"
#include "multigamma/constants.hpp"
#include "multigamma/conventions.hpp"
#include "multigamma/evaluate.hpp"
#include "multigamma/exact_poly.hpp"
#include "multigamma/extrapolate.hpp"
#include "multigamma/identities.hpp"
#include "multigamma/json_io.hpp"
#include "multigamma/multiplication.hpp"
#include "multigamma/oracle.hpp"
#include "multigamma/products.hpp"
