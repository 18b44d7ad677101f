#ifndef ORDMATCH_JSON_IO_HPP
#define ORDMATCH_JSON_IO_HPP

#include <string>

#include "ordmatch/instance.hpp"
#include "ordmatch/matching.hpp"

namespace ordmatch {

// Instance document: {"n": int, "weights": [[number,...],...]} plus an
// optional "name". Weights round-trip exactly (shortest decimal form).
Instance parse_instance(const std::string& json_text);
Instance load_instance_file(const std::string& path);
std::string instance_to_json(const Instance& inst);
void save_instance_file(const Instance& inst, const std::string& path);

// Matching document: {"pairs": [[x,y],...], "weight": number}.
std::string matching_to_json(const Instance& inst, const Matching& m);
Matching parse_matching(const std::string& json_text, const Instance& inst);

}  // namespace ordmatch

#endif
