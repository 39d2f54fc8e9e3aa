#pragma once

// Umbrella header for the JADE evaluation engine.

#include "jade/backend.hpp"
#include "jade/checklist.hpp"
#include "jade/config.hpp"
#include "jade/credibility.hpp"
#include "jade/dataset.hpp"
#include "jade/digest.hpp"
#include "jade/errors.hpp"
#include "jade/generation.hpp"
#include "jade/judge.hpp"
#include "jade/pipeline.hpp"
#include "jade/prompts.hpp"
#include "jade/result.hpp"
#include "jade/scoring.hpp"
#include "jade/skills.hpp"
#include "jade/taxonomy.hpp"
#include "jade/tools.hpp"
#include "jade/url.hpp"
#include "jade/verdict.hpp"
#include "jade/verify.hpp"
