#pragma once

// Umbrella header: exact Ehrhart h*-polynomial decompositions for
// rational polytopes.

#include "ehrhart/cone_box.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/hstar.hpp"
#include "ehrhart/int_matrix.hpp"
#include "ehrhart/normal_form.hpp"
#include "ehrhart/numeric.hpp"
#include "ehrhart/polynomial.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/triangulation.hpp"
