#pragma once

#include "algebra.hpp"
#include "duality.hpp"
#include "group.hpp"
#include "io.hpp"
#include "irreps.hpp"
#include "matrix_model.hpp"
#include "quantum.hpp"
#include "spectral.hpp"
#include "su2.hpp"
#include "types.hpp"
