//------------------------------------------------------------------------------
//
//   Copyright 2026 The mechfront Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

namespace mechfront {

/// Caps the worker count used by the parallel kernels. 0 restores the
/// runtime default.
void set_thread_count(int threads);
int  thread_count();

/// Applies MECHFRONT_THREADS if set. Returns false on a malformed value.
bool configure_threads_from_env();

}  // namespace mechfront
