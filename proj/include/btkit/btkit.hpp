#pragma once

#include "algebra.hpp"
#include "combinatorics.hpp"
#include "error.hpp"
#include "field.hpp"
#include "parallel.hpp"
#include "parse.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "poly_ab.hpp"
#include "polynomial.hpp"
#include "ptl.hpp"
#include "rational.hpp"
#include "relations.hpp"
#include "scalar.hpp"
#include "sparse.hpp"
#include "tensor_rep.hpp"
#include "trace.hpp"
#include "words.hpp"
