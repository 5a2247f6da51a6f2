#pragma once

#include "bcnid/error.hpp"
#include "bcnid/stp.hpp"
#include "bcnid/logic.hpp"
#include "bcnid/dynamics.hpp"
#include "bcnid/analysis.hpp"
#include "bcnid/ident.hpp"
#include "bcnid/harness.hpp"
#include "bcnid/io.hpp"
