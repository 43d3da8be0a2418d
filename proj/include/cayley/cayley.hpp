#pragma once

#include "cayley/analysis.hpp"
#include "cayley/attacks.hpp"
#include "cayley/bitio.hpp"
#include "cayley/generators.hpp"
#include "cayley/hasher.hpp"
#include "cayley/mat2.hpp"
#include "cayley/params.hpp"
#include "cayley/randomness.hpp"
#include "cayley/rng.hpp"
