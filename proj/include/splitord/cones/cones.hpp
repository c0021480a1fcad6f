// Copyright 2026 The splitord Authors
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

#ifndef SPLITORD_CONES_CONES_HPP_
#define SPLITORD_CONES_CONES_HPP_

#include "splitord/cones/cone.hpp"
#include "splitord/cones/preorder.hpp"

#endif  // SPLITORD_CONES_CONES_HPP_
