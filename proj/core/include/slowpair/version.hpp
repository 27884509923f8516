// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace slowpair {

inline constexpr const char* version_string = "0.1.0";

}  // namespace slowpair
