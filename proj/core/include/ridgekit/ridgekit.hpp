#pragma once

#include "ridgekit/config.hpp"
#include "ridgekit/corepoint.hpp"
#include "ridgekit/descriptor.hpp"
#include "ridgekit/enhance.hpp"
#include "ridgekit/error.hpp"
#include "ridgekit/eval.hpp"
#include "ridgekit/image.hpp"
#include "ridgekit/imageio.hpp"
#include "ridgekit/matcher.hpp"
#include "ridgekit/minutiae.hpp"
#include "ridgekit/orientation.hpp"
#include "ridgekit/pipeline.hpp"
#include "ridgekit/ridgemap.hpp"
#include "ridgekit/template_io.hpp"
