#pragma once

#include "axiomforge/search/algorithms.hpp"
#include "axiomforge/search/candidate.hpp"
#include "axiomforge/search/config.hpp"
#include "axiomforge/search/session.hpp"
