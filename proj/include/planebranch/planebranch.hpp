#pragma once

#include "planebranch/arith.hpp"
#include "planebranch/corpus.hpp"
#include "planebranch/curves.hpp"
#include "planebranch/errors.hpp"
#include "planebranch/lgamma.hpp"
#include "planebranch/poles.hpp"
#include "planebranch/polynomial.hpp"
#include "planebranch/quadrature.hpp"
#include "planebranch/report.hpp"
#include "planebranch/residue.hpp"
#include "planebranch/resolution.hpp"
#include "planebranch/semigroup.hpp"
#include "planebranch/serialize.hpp"
#include "planebranch/verify.hpp"
