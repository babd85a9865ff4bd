// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_VERSION_HPP
#define TOPOALG_VERSION_HPP

namespace topoalg {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
