// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xx0/asym.hpp"
#include "xx0/bigint.hpp"
#include "xx0/boxcount.hpp"
#include "xx0/combinat.hpp"
#include "xx0/edoracle.hpp"
#include "xx0/errors.hpp"
#include "xx0/laurent.hpp"
#include "xx0/matrix.hpp"
#include "xx0/qexact.hpp"
#include "xx0/schur.hpp"
#include "xx0/xx0core.hpp"
