#pragma once

#include "hbst/bench.hpp"
#include "hbst/differential.hpp"
#include "hbst/document.hpp"
#include "hbst/key_space.hpp"
#include "hbst/naive_bst.hpp"
#include "hbst/oracle_set.hpp"
#include "hbst/render.hpp"
#include "hbst/tree.hpp"
#include "hbst/validate.hpp"
#include "hbst/workload.hpp"
