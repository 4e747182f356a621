#pragma once

#include "fountain/errors.hpp"
#include "fountain/random.hpp"
#include "fountain/gf2.hpp"
#include "fountain/matrixgen.hpp"
#include "fountain/codec.hpp"
#include "fountain/permgroup.hpp"
#include "fountain/entropy.hpp"
#include "fountain/experiments.hpp"
