#pragma once

#include "bellcore.hpp"
#include "closedform.hpp"
#include "codec.hpp"
#include "compgen.hpp"
#include "count.hpp"
#include "verify.hpp"
