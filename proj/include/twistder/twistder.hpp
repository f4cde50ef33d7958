#pragma once

#include "twistder/algebra.hpp"
#include "twistder/decomposition.hpp"
#include "twistder/derivation.hpp"
#include "twistder/endomorphism.hpp"
#include "twistder/error.hpp"
#include "twistder/gaussian_rational.hpp"
#include "twistder/group.hpp"
#include "twistder/groupoid.hpp"
#include "twistder/linalg.hpp"
#include "twistder/solver.hpp"
