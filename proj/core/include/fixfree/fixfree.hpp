#pragma once

#include "fixfree/bitstream.hpp"
#include "fixfree/code.hpp"
#include "fixfree/codec.hpp"
#include "fixfree/constructor.hpp"
#include "fixfree/designer.hpp"
#include "fixfree/dyadic.hpp"
#include "fixfree/errors.hpp"
#include "fixfree/frontier.hpp"
#include "fixfree/length_vector.hpp"
#include "fixfree/oracle.hpp"
#include "fixfree/text_format.hpp"
#include "fixfree/word.hpp"
