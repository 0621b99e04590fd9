#pragma once

#include "qpade/casorati.hpp"
#include "qpade/draws.hpp"
#include "qpade/errors.hpp"
#include "qpade/evolution.hpp"
#include "qpade/matrix.hpp"
#include "qpade/pade.hpp"
#include "qpade/params.hpp"
#include "qpade/polynomial.hpp"
#include "qpade/qseries.hpp"
#include "qpade/rational.hpp"
#include "qpade/rational_function.hpp"
#include "qpade/report.hpp"
#include "qpade/special.hpp"
#include "qpade/verify.hpp"
