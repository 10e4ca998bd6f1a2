#pragma once

#include "scholarank/citations.hpp"
#include "scholarank/corpus.hpp"
#include "scholarank/dblp.hpp"
#include "scholarank/effect.hpp"
#include "scholarank/error.hpp"
#include "scholarank/graph.hpp"
#include "scholarank/manifest.hpp"
#include "scholarank/merge.hpp"
#include "scholarank/metric_suite.hpp"
#include "scholarank/metrics.hpp"
#include "scholarank/overlap.hpp"
#include "scholarank/pagerank.hpp"
#include "scholarank/scores.hpp"
#include "scholarank/stability.hpp"
#include "scholarank/synthetic.hpp"
#include "scholarank/text.hpp"
