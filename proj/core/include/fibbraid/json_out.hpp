// Copyright 2026 The fibbraid Authors
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

#ifndef FIBBRAID_JSON_OUT_HPP
#define FIBBRAID_JSON_OUT_HPP

#include <complex>
#include <string>
#include <string_view>

namespace fibbraid {

/// Doubles are always written with 17 significant digits so that output is
/// bit-for-bit reproducible.
std::string format_double(double x);
/// "re+imi" with 17 significant digits per part.
std::string format_complex(std::complex<double> z);
std::string json_string(std::string_view text);

}  // namespace fibbraid

#endif
