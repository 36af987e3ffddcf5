#pragma once

#include "corec/catalog.hpp"
#include "corec/coeff.hpp"
#include "corec/dif.hpp"
#include "corec/dsp.hpp"
#include "corec/errors.hpp"
#include "corec/format.hpp"
#include "corec/lazy.hpp"
#include "corec/qft.hpp"
#include "corec/rational.hpp"
#include "corec/series.hpp"
#include "corec/wav.hpp"
#include "corec/wkb.hpp"
