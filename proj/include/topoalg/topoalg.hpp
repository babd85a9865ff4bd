// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_TOPOALG_HPP
#define TOPOALG_TOPOALG_HPP

#include "topoalg/algebra.hpp"
#include "topoalg/algebroid.hpp"
#include "topoalg/cechain.hpp"
#include "topoalg/clifford.hpp"
#include "topoalg/dictscan.hpp"
#include "topoalg/envelope.hpp"
#include "topoalg/flagged.hpp"
#include "topoalg/json_io.hpp"
#include "topoalg/lie.hpp"
#include "topoalg/linalg.hpp"
#include "topoalg/matrix.hpp"
#include "topoalg/model.hpp"
#include "topoalg/operad.hpp"
#include "topoalg/report.hpp"
#include "topoalg/run.hpp"
#include "topoalg/scalar.hpp"
#include "topoalg/sym.hpp"
#include "topoalg/tatehom.hpp"
#include "topoalg/tensor.hpp"
#include "topoalg/uchr.hpp"
#include "topoalg/version.hpp"

#endif  // TOPOALG_TOPOALG_HPP
