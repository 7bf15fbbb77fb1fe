// Copyright 2026 The betafrac Authors
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

#ifndef BETAFRAC_BETAFRAC_HPP_
#define BETAFRAC_BETAFRAC_HPP_

#include "betafrac/dist.hpp"
#include "betafrac/graphs.hpp"
#include "betafrac/io.hpp"
#include "betafrac/ks.hpp"
#include "betafrac/params.hpp"
#include "betafrac/quadrature.hpp"
#include "betafrac/random.hpp"
#include "betafrac/simulate.hpp"
#include "betafrac/specfun.hpp"

#endif  // BETAFRAC_BETAFRAC_HPP_
