/*
 *   Copyright 2026 The fuzzint Authors
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

#ifndef FUZZINT_FUZZINT_HPP
#define FUZZINT_FUZZINT_HPP

#include "fuzzint/capacity.hpp"
#include "fuzzint/error.hpp"
#include "fuzzint/integral.hpp"
#include "fuzzint/io.hpp"
#include "fuzzint/laws.hpp"
#include "fuzzint/repro.hpp"
#include "fuzzint/report.hpp"
#include "fuzzint/scalar.hpp"
#include "fuzzint/search.hpp"
#include "fuzzint/semicopula.hpp"

#endif
