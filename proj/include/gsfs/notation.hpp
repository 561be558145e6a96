#pragma once

// Compact whitespace-free text form of both symbol kinds:
//
//   GSFS(b=0;eps=o1;g=1;i=2;(3,1),(5,2))
//   LSA(b=0;eps=o1;g=1;f=2/2;t=0/0;s=0/0;(3,1);r=[];q=[])
//
// Parsing accepts whitespace between tokens and performs no validation
// beyond the grammar and 64-bit range. Rendering is exact, so canonical
// symbols have byte-comparable renderings.

#include <string>
#include <string_view>

#include "gsfs/local_action.hpp"
#include "gsfs/symbol.hpp"

namespace gsfs {

/// Throws ParseError (or OverflowError) with the byte offset of the failure.
GsfsSymbol parse_gsfs(std::string_view text);
std::string render_gsfs(const GsfsSymbol& s);

LocalActionSymbol parse_local(std::string_view text);
std::string render_local(const LocalActionSymbol& s);

}  // namespace gsfs
