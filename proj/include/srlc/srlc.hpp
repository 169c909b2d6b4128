#pragma once

#include "srlc/binomial.hpp"
#include "srlc/cohomology.hpp"
#include "srlc/complex.hpp"
#include "srlc/corpus.hpp"
#include "srlc/facet_io.hpp"
#include "srlc/field.hpp"
#include "srlc/generic_forms.hpp"
#include "srlc/graebe.hpp"
#include "srlc/hochster.hpp"
#include "srlc/matrix.hpp"
#include "srlc/quotient.hpp"
#include "srlc/report.hpp"
