#pragma once

#include "atomic/affine.hpp"
#include "atomic/atomiclen.hpp"
#include "atomic/cores.hpp"
#include "atomic/errors.hpp"
#include "atomic/perms.hpp"
#include "atomic/rational.hpp"
#include "atomic/rootdata.hpp"
#include "atomic/susanfe.hpp"
#include "atomic/weyl.hpp"
