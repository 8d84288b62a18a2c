#ifndef FINMEAS_FINMEAS_HPP
#define FINMEAS_FINMEAS_HPP

#include "finmeas/algebra.hpp"
#include "finmeas/cli.hpp"
#include "finmeas/document.hpp"
#include "finmeas/errors.hpp"
#include "finmeas/generate.hpp"
#include "finmeas/grid.hpp"
#include "finmeas/law_report.hpp"
#include "finmeas/measure.hpp"
#include "finmeas/monad.hpp"
#include "finmeas/morphism.hpp"
#include "finmeas/pettis.hpp"
#include "finmeas/rational.hpp"

#endif // FINMEAS_FINMEAS_HPP
