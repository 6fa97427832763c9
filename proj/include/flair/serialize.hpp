#pragma once

#include <iosfwd>
#include <string>

#include "flair/model.hpp"

namespace flair {

// Model file format (UTF-8 text, LF line endings):
//
//   # flair-model 1 <epsilon>
//   <t> <x>                                 one record per history point
//   ## <aM> <amin> <amax> <t_last> <x_last>
//
// Doubles are written in shortest round-trip decimal form; unbounded cone
// ends are the tokens "inf" / "-inf". An empty model is the header record
// only. deserialize restores bit-identical state.
void serialize(const FlairModel& model, std::ostream& out);
std::string serialize(const FlairModel& model);

// The epsilon parameter is authoritative; the header value is validated for
// syntax only. Throws ParseError on malformed input.
FlairModel deserialize(std::istream& in, Epsilon epsilon);
FlairModel deserialize(const std::string& text, Epsilon epsilon);

// Convenience for callers that do not know epsilon up front (the CLI):
// takes epsilon from the file header.
FlairModel deserialize_with_header_epsilon(std::istream& in);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace flair
