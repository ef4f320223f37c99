#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "limiter/interval_set.hpp"

namespace limiter {

// Text forms:
//   closed  "{3,5} ∪ [0,1]"      points in braces, intervals in brackets
//   open    "(2,6) ∪ (10,+inf]"  "∅" for the empty set
// "U" is accepted in place of "∪". Printing always uses " ∪ ".

ClusterSet parse_closed_set(std::string_view text);
OpenSet parse_open_set(std::string_view text);

std::string to_string(const ClusterSet& c);
std::string to_string(const OpenSet& o);

nlohmann::json to_json(const ClusterSet& c);
nlohmann::json to_json(const OpenSet& o);
ClusterSet closed_set_from_json(const nlohmann::json& j);
OpenSet open_set_from_json(const nlohmann::json& j);

}  // namespace limiter
