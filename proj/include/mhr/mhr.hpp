#pragma once

#include "mhr/element_set.hpp"
#include "mhr/error.hpp"
#include "mhr/hyperring.hpp"
#include "mhr/ideals.hpp"
#include "mhr/classify.hpp"
#include "mhr/homs.hpp"
#include "mhr/ring_spec.hpp"
#include "mhr/conformance.hpp"
#include "mhr/corpus.hpp"
#include "mhr/workspace.hpp"
#include "mhr/report.hpp"
