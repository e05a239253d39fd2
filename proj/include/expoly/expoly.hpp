/*
   Copyright 2026 The expoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EXPOLY_EXPOLY_HPP
#define EXPOLY_EXPOLY_HPP

#include "bench.hpp"
#include "d_poly.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "exact_linalg.hpp"
#include "expansivity.hpp"
#include "gap_bounds.hpp"
#include "oracle.hpp"
#include "poly_core.hpp"

#endif  // EXPOLY_EXPOLY_HPP
