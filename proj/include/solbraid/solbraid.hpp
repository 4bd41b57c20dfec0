#pragma once

// Umbrella header: the whole library.

#include "solbraid/analysis.hpp"
#include "solbraid/braid.hpp"
#include "solbraid/burau.hpp"
#include "solbraid/cable.hpp"
#include "solbraid/cli.hpp"
#include "solbraid/conjugacy.hpp"
#include "solbraid/errors.hpp"
#include "solbraid/garside.hpp"
#include "solbraid/io.hpp"
#include "solbraid/kauffman.hpp"
#include "solbraid/laurent.hpp"
#include "solbraid/report.hpp"
#include "solbraid/sequences.hpp"
#include "solbraid/solenoid.hpp"
#include "solbraid/svg.hpp"
#include "solbraid/wclass.hpp"
