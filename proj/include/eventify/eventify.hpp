#pragma once

#include "eventify/device.hpp"
#include "eventify/io.hpp"
#include "eventify/monoid_transforms.hpp"
#include "eventify/ovm.hpp"
#include "eventify/random.hpp"
#include "eventify/relation.hpp"
#include "eventify/result.hpp"
#include "eventify/simulation.hpp"
#include "eventify/transforms.hpp"
#include "eventify/variator.hpp"
#include "eventify/verdict.hpp"
