#pragma once

#include "landau/errors.hpp"
#include "landau/series.hpp"
#include "landau/params.hpp"
#include "landau/harmonic_map.hpp"
#include "landau/mapping_file.hpp"
#include "landau/radii.hpp"
#include "landau/coefficient_bounds.hpp"
#include "landau/lemmas.hpp"
#include "landau/quadrature.hpp"
#include "landau/extremal.hpp"
#include "landau/oracle_config.hpp"
#include "landau/univalence.hpp"
#include "landau/coefficients.hpp"
#include "landau/hypotheses.hpp"
#include "landau/conjecture.hpp"
#include "landau/sharpness.hpp"
#include "landau/tables.hpp"
#include "landau/verify.hpp"
