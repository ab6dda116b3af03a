// Copyright 2026 The graphprep Authors
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
#ifndef GRAPHPREP_SCHEDULE_JSON_H
#define GRAPHPREP_SCHEDULE_JSON_H

#include <string>
#include <string_view>

#include "graphprep/schedule.h"
#include "json.hpp"

namespace graphprep {

using Json = nlohmann::ordered_json;

Json metrics_to_json(const ComplexityMetrics &m);
Json schedule_to_json(const Schedule &s);
/// Throws ParseError on missing or ill-typed fields.
Schedule schedule_from_json(const Json &j);
Schedule schedule_from_string(std::string_view text);

}  // namespace graphprep

#endif
