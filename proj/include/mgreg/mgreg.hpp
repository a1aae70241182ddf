/*
 * Copyright 2026 The mgreg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MGREG_MGREG_HPP_
#define MGREG_MGREG_HPP_

#include "mgreg/bott.hpp"
#include "mgreg/catalog.hpp"
#include "mgreg/cohom.hpp"
#include "mgreg/error.hpp"
#include "mgreg/field.hpp"
#include "mgreg/glp.hpp"
#include "mgreg/integer.hpp"
#include "mgreg/poly.hpp"
#include "mgreg/regions.hpp"
#include "mgreg/twistcx.hpp"

#endif  // MGREG_MGREG_HPP_
