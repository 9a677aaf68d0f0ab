#pragma once

#include "thompson/dyadic.hpp"
#include "thompson/element.hpp"
#include "thompson/error.hpp"
#include "thompson/interpolate.hpp"
#include "thompson/svg.hpp"
#include "thompson/witness.hpp"
#include "thompson/word.hpp"
