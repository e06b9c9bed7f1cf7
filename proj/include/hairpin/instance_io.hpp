#pragma once

#include <string>
#include <vector>

#include "hairpin/instance.hpp"

namespace hairpin {

// Malformed or invalid instance input; the message carries line/field context.
class InputError : public Error {
public:
    using Error::Error;
};

struct ParsedInstance {
    HairpinInstance instance;
    std::vector<std::string> notes;  // e.g. auto-completed partial DFAs
};

ParsedInstance parse_instance_text(const std::string& text, const std::string& source = "<input>");
ParsedInstance parse_instance(const std::string& path);

// Canonical JSON document (complete DFAs, dfa_ovL2 section); parses back to an identical instance.
std::string serialize_instance(const HairpinInstance& inst);

}  // namespace hairpin
