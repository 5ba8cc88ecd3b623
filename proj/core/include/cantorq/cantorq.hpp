#pragma once

#include "cantorq/asymptotics.hpp"
#include "cantorq/cantor_measure.hpp"
#include "cantorq/constraint_geometry.hpp"
#include "cantorq/errors.hpp"
#include "cantorq/oracle.hpp"
#include "cantorq/quantizer.hpp"
#include "cantorq/rational.hpp"
