// Copyright 2026 The gsqss Authors
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

#pragma once

#include "gsqss/access.hpp"
#include "gsqss/bounds.hpp"
#include "gsqss/errors.hpp"
#include "gsqss/gf2.hpp"
#include "gsqss/graph.hpp"
#include "gsqss/graph_io.hpp"
#include "gsqss/protocol.hpp"
#include "gsqss/quantum.hpp"
#include "gsqss/shamir.hpp"
#include "gsqss/threshold.hpp"
#include "gsqss/vertex_set.hpp"
