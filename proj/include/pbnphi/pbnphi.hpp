/*
 * Copyright 2026 The pbnphi Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "pbnphi/dynamics.hpp"
#include "pbnphi/error.hpp"
#include "pbnphi/information.hpp"
#include "pbnphi/marginalize.hpp"
#include "pbnphi/network.hpp"
#include "pbnphi/partition.hpp"
#include "pbnphi/phi.hpp"
#include "pbnphi/types.hpp"
