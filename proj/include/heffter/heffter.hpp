#pragma once

#include "heffter/census.hpp"
#include "heffter/construct.hpp"
#include "heffter/core.hpp"
#include "heffter/embed.hpp"
#include "heffter/errors.hpp"
#include "heffter/invariants.hpp"
#include "heffter/io.hpp"
#include "heffter/params.hpp"
#include "heffter/verify.hpp"
