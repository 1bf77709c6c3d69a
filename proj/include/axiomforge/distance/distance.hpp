#pragma once

#include "axiomforge/distance/levenshtein.hpp"
#include "axiomforge/distance/oracle.hpp"
#include "axiomforge/distance/rank.hpp"
#include "axiomforge/distance/structural.hpp"
