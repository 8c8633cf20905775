#pragma once

#include "dsl/rational.hpp"
#include "dsl/group.hpp"
#include "dsl/word.hpp"
#include "dsl/poly.hpp"
#include "dsl/core_algebra.hpp"
#include "dsl/truncated.hpp"
#include "dsl/y_algebra.hpp"
#include "dsl/ihara.hpp"
#include "dsl/linalg.hpp"
#include "dsl/solver.hpp"
#include "dsl/series.hpp"
#include "dsl/io.hpp"
#include "dsl/expr.hpp"
#include "dsl/verify.hpp"
