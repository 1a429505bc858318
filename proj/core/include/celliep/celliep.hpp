#pragma once

#include "celliep/cell_matrix.hpp"
#include "celliep/eigen.hpp"
#include "celliep/errors.hpp"
#include "celliep/iep.hpp"
#include "celliep/matrix.hpp"
#include "celliep/perm.hpp"
#include "celliep/reduction.hpp"
#include "celliep/spectrum.hpp"
