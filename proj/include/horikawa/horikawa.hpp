#pragma once

#include <horikawa/numbers.hpp>
#include <horikawa/lattice.hpp>
#include <horikawa/covers.hpp>
#include <horikawa/stable.hpp>
#include <horikawa/catalog.hpp>
#include <horikawa/report.hpp>
#include <horikawa/verify.hpp>
#include <horikawa/commands.hpp>
