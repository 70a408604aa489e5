#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "charkern/catalog.hpp"
#include "charkern/group.hpp"

namespace charkern {

// insertion-ordered JSON everywhere: reports must be byte-reproducible and
// diffable, so key order is part of the format
using ordered_json = nlohmann::ordered_json;

// strict parser: every kind has a fixed key set, anything else is rejected
GroupSpec parse_group_spec(const ordered_json& j);
ordered_json group_spec_to_json(const GroupSpec& s);

// {"entries": [{"name": ..., "spec": {...}, "tags": [...]} ...]}
std::vector<CorpusEntry> parse_manifest(const ordered_json& j);
ordered_json manifest_to_json(const std::vector<CorpusEntry>& entries);

ordered_json load_json_file(const std::string& path);  // SpecInvalid on any failure
// write to <path>.tmp, then rename: no partial files on failure
void write_json_atomic(const std::string& path, const ordered_json& j);

}  // namespace charkern
