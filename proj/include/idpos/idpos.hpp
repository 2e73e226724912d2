#pragma once

#include "idpos/analysis.hpp"
#include "idpos/corpus.hpp"
#include "idpos/error.hpp"
#include "idpos/evaluation.hpp"
#include "idpos/extract.hpp"
#include "idpos/features.hpp"
#include "idpos/forest.hpp"
#include "idpos/importance.hpp"
#include "idpos/lexicon.hpp"
#include "idpos/metrics.hpp"
#include "idpos/model.hpp"
#include "idpos/record.hpp"
#include "idpos/reports.hpp"
#include "idpos/rng.hpp"
#include "idpos/splitter.hpp"
#include "idpos/synthetic.hpp"
#include "idpos/taggers.hpp"
#include "idpos/tagset.hpp"
#include "idpos/tree.hpp"
