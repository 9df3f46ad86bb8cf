#pragma once

#include "gca/builders.hpp"
#include "gca/cell.hpp"
#include "gca/f2_matrix.hpp"
#include "gca/grade_vec.hpp"
#include "gca/grading.hpp"
#include "gca/json_io.hpp"
#include "gca/lie.hpp"
#include "gca/monomial.hpp"
#include "gca/rational.hpp"
#include "gca/solver.hpp"
#include "gca/structure_table.hpp"
