// Copyright 2026 The palettekit Authors
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

#pragma once

namespace palettekit {

// Search caps. Each exact search refuses instances above its cap with
// ErrorKind::kResourceLimit instead of running unbounded.
struct Limits {
  int max_edges_chromatic = 40;
  int max_edges_palette = 30;
  int max_edges_oracle = 10;
  int max_cycle_space_dim = 25;
};

}  // namespace palettekit
