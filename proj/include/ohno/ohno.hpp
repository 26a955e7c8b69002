#ifndef OHNO_OHNO_HPP
#define OHNO_OHNO_HPP

#include "ohno/rational.hpp"
#include "ohno/word.hpp"
#include "ohno/products.hpp"
#include "ohno/maps.hpp"
#include "ohno/series.hpp"
#include "ohno/arb_float.hpp"
#include "ohno/zeta_poly.hpp"
#include "ohno/xy_poly.hpp"
#include "ohno/gamma_series.hpp"
#include "ohno/mzv.hpp"
#include "ohno/numeric.hpp"
#include "ohno/regularization.hpp"
#include "ohno/check_report.hpp"
#include "ohno/checks_exact.hpp"
#include "ohno/checks_numeric.hpp"
#include "ohno/relations.hpp"
#include "ohno/suites.hpp"
#include "ohno/report.hpp"

#endif
