// Copyright 2026 The Lotto Signal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOTTO_SIGNAL_LOTTO_SIGNAL_HPP_
#define LOTTO_SIGNAL_LOTTO_SIGNAL_HPP_

#include "lotto_signal/core_model.hpp"
#include "lotto_signal/equilibrium.hpp"
#include "lotto_signal/oracle.hpp"
#include "lotto_signal/signaling.hpp"
#include "lotto_signal/sweep.hpp"

#endif  // LOTTO_SIGNAL_LOTTO_SIGNAL_HPP_
