#pragma once

#include "symph/bottleneck.hpp"
#include "symph/common.hpp"
#include "symph/complex.hpp"
#include "symph/field.hpp"
#include "symph/geometry.hpp"
#include "symph/group.hpp"
#include "symph/io.hpp"
#include "symph/oracles.hpp"
#include "symph/orbit.hpp"
#include "symph/persistence.hpp"
#include "symph/pseudo_distance.hpp"
#include "symph/scenarios.hpp"
#include "symph/verify.hpp"
