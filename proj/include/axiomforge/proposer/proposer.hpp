#pragma once

#include "axiomforge/proposer/context.hpp"
#include "axiomforge/proposer/extract.hpp"
#include "axiomforge/proposer/http.hpp"
#include "axiomforge/proposer/http_oracles.hpp"
#include "axiomforge/proposer/oracle.hpp"
#include "axiomforge/proposer/scripted.hpp"
