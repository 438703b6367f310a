#pragma once

#include "modtensor/alcoves.hpp"
#include "modtensor/characters.hpp"
#include "modtensor/classify.hpp"
#include "modtensor/errors.hpp"
#include "modtensor/rootdata.hpp"
#include "modtensor/simples.hpp"
#include "modtensor/sweep.hpp"
#include "modtensor/tensor.hpp"
#include "modtensor/weight.hpp"
