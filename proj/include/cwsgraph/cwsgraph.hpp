// Copyright 2026 The cwsgraph Authors
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


#ifndef CWSGRAPH_CWSGRAPH_HPP
#define CWSGRAPH_CWSGRAPH_HPP

#include "cwsgraph/cws.hpp"
#include "cwsgraph/errors.hpp"
#include "cwsgraph/f2core.hpp"
#include "cwsgraph/gf2m.hpp"
#include "cwsgraph/graphstate.hpp"
#include "cwsgraph/io.hpp"
#include "cwsgraph/protosim.hpp"
#include "cwsgraph/tentpeg.hpp"

#endif
