/*
   Copyright 2026 the mzk authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MZK_MZK_HPP
#define MZK_MZK_HPP

#include "bigcomplex.hpp"
#include "bigfloat.hpp"
#include "errors.hpp"
#include "finite.hpp"
#include "functional.hpp"
#include "gaussian.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "multipoly.hpp"
#include "mz.hpp"
#include "parse.hpp"
#include "pfd.hpp"
#include "polyroots.hpp"
#include "puiseux.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "wz.hpp"

#endif
