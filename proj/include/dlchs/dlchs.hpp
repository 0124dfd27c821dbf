#pragma once

#include "dlchs/cycles.hpp"
#include "dlchs/digraph.hpp"
#include "dlchs/generate.hpp"
#include "dlchs/io.hpp"
#include "dlchs/oracle.hpp"
#include "dlchs/pipeline.hpp"
#include "dlchs/rep_paths.hpp"
#include "dlchs/separators.hpp"
#include "dlchs/transform.hpp"
