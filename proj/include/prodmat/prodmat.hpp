#pragma once

// Umbrella header.

#include "prodmat/errors.hpp"
#include "prodmat/exp_riordan.hpp"
#include "prodmat/matrix_spec.hpp"
#include "prodmat/polynomial.hpp"
#include "prodmat/power_series.hpp"
#include "prodmat/production_matrix.hpp"
#include "prodmat/rational.hpp"
#include "prodmat/rational_gf.hpp"
#include "prodmat/rational_matrix.hpp"
#include "prodmat/riordan.hpp"
#include "prodmat/row_expr.hpp"
#include "prodmat/rule.hpp"
#include "prodmat/series_expr.hpp"
