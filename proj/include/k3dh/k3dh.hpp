#pragma once

#include "k3dh/errors.hpp"
#include "k3dh/exact_linalg.hpp"
#include "k3dh/isometry.hpp"
#include "k3dh/json_io.hpp"
#include "k3dh/kummer.hpp"
#include "k3dh/lattice.hpp"
#include "k3dh/moment_model.hpp"
#include "k3dh/period_domain.hpp"
#include "k3dh/polynomial.hpp"
#include "k3dh/report.hpp"
#include "k3dh/sampling.hpp"
#include "k3dh/shortvec.hpp"
#include "k3dh/sublattice.hpp"
#include "k3dh/verify.hpp"
