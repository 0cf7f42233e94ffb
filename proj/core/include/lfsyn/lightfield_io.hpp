/*
 * Copyright 2026 The lfsyn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include "lfsyn/lightfield.hpp"

namespace lfsyn {

// Light field container: one PNG holding the SAIs as a tile grid (v outer,
// u inner, row-major) plus a sibling JSON metadata document at the same
// path with a .json extension. The round trip through save/load is
// bit-exact at the declared bit depth.

std::string metadata_path_for(const std::string& lf_path);

void save_lightfield(const LightField& lf, const std::string& path);

LightField load_lightfield(const std::string& path);

}  // namespace lfsyn
