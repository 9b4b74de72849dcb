#pragma once

#include "periharm/eigenspace.hpp"
#include "periharm/exact.hpp"
#include "periharm/fft.hpp"
#include "periharm/fourier.hpp"
#include "periharm/hermite.hpp"
#include "periharm/io.hpp"
#include "periharm/orthonormalize.hpp"
#include "periharm/parallel.hpp"
#include "periharm/periodized.hpp"
#include "periharm/quadrature.hpp"
#include "periharm/sequences.hpp"
#include "periharm/verify.hpp"
