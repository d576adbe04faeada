#pragma once

// Exact computational engine for the blob-algebra and Temperley-Lieb
// tensor-space representations: generic Laurent / cyclotomic coefficient
// arithmetic, the representations and their defining relations, the
// localization idempotent, the adjointness-map rank certificates, and the
// integer multiplicity tables.

#include "blobtilt/adjoint.hpp"
#include "blobtilt/cyclotomic_field.hpp"
#include "blobtilt/cyclotomic_int.hpp"
#include "blobtilt/elimination.hpp"
#include "blobtilt/functor.hpp"
#include "blobtilt/laurent.hpp"
#include "blobtilt/numeric.hpp"
#include "blobtilt/qnum.hpp"
#include "blobtilt/qparams.hpp"
#include "blobtilt/rep.hpp"
#include "blobtilt/report.hpp"
#include "blobtilt/sparse.hpp"
#include "blobtilt/specialization.hpp"
#include "blobtilt/tables.hpp"
#include "blobtilt/words.hpp"
