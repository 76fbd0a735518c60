#pragma once

#include "orrsom/blasius.hpp"
#include "orrsom/cli.hpp"
#include "orrsom/diff_ops.hpp"
#include "orrsom/eigensolver.hpp"
#include "orrsom/enclosure.hpp"
#include "orrsom/grid.hpp"
#include "orrsom/io.hpp"
#include "orrsom/pencil.hpp"
#include "orrsom/profile.hpp"
#include "orrsom/rayleigh.hpp"
#include "orrsom/spectrum.hpp"
#include "orrsom/trial_function.hpp"
#include "orrsom/verify.hpp"
