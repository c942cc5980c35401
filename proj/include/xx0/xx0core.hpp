// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xx0/core/bethe.hpp"
#include "xx0/core/formfactor.hpp"
#include "xx0/core/persistence.hpp"
#include "xx0/core/walker.hpp"
