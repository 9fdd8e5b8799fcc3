#pragma once

#include "error.hpp"
#include "field.hpp"
#include "weights.hpp"
#include "bigint.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "ring.hpp"
#include "polynomial.hpp"
#include "system.hpp"
#include "transform.hpp"
#include "enumerate.hpp"
#include "monomial_ideal.hpp"
#include "series.hpp"
#include "bounds.hpp"
#include "linalg.hpp"
#include "groebner.hpp"
#include "matrix_gb.hpp"
#include "fglm.hpp"
#include "generators.hpp"
#include "structure.hpp"
#include "io.hpp"
#include "report.hpp"
#include "bench.hpp"
