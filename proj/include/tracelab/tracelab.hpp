#pragma once

#include "tracelab/algebra.hpp"
#include "tracelab/enumerate.hpp"
#include "tracelab/error.hpp"
#include "tracelab/field.hpp"
#include "tracelab/hom.hpp"
#include "tracelab/matrix.hpp"
#include "tracelab/module.hpp"
#include "tracelab/polynomial.hpp"
#include "tracelab/predicates.hpp"
#include "tracelab/random.hpp"
#include "tracelab/report.hpp"
#include "tracelab/semigroup.hpp"
#include "tracelab/spec_file.hpp"
#include "tracelab/subspace.hpp"
#include "tracelab/trace.hpp"
#include "tracelab/verifier.hpp"
