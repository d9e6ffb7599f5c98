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

#include "mechfront/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mechfront {

namespace {
int default_threads()
{
#ifdef _OPENMP
  static int const initial = omp_get_max_threads();
  return initial;
#else
  return 1;
#endif
}
}  // namespace

void set_thread_count(int threads)
{
#ifdef _OPENMP
  int const base = default_threads();
  omp_set_num_threads(threads > 0 ? threads : base);
#else
  (void)threads;
#endif
}

int thread_count()
{
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool configure_threads_from_env()
{
  char const *raw = std::getenv("MECHFRONT_THREADS");
  if (raw == nullptr || *raw == '\0')
  {
    return true;
  }
  try
  {
    std::size_t used = 0;
    int const   n    = std::stoi(raw, &used);
    if (used != std::string(raw).size() || n < 0)
    {
      return false;
    }
    set_thread_count(n);
    return true;
  }
  catch (std::exception const &)
  {
    return false;
  }
}

}  // namespace mechfront
