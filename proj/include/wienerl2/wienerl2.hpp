// Copyright 2026 The wienerl2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "wienerl2/compensated_sum.hpp"
#include "wienerl2/distribution.hpp"
#include "wienerl2/erfc.hpp"
#include "wienerl2/errors.hpp"
#include "wienerl2/oracles.hpp"
#include "wienerl2/series.hpp"
#include "wienerl2/validation.hpp"
