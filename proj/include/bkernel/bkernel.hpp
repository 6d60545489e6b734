// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include "bkernel/bkg_io.hpp"
#include "bkernel/gluing.hpp"
#include "bkernel/graph.hpp"
#include "bkernel/harness.hpp"
#include "bkernel/isomorphism.hpp"
#include "bkernel/kernel_result.hpp"
#include "bkernel/kernels/fvs.hpp"
#include "bkernel/kernels/paths.hpp"
#include "bkernel/kernels/vc_fvs.hpp"
#include "bkernel/kernels/vc_td.hpp"
#include "bkernel/kernels/vc_vc.hpp"
#include "bkernel/lower_bounds.hpp"
#include "bkernel/solvers/exact.hpp"
#include "bkernel/validate.hpp"

namespace bk {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace bk
