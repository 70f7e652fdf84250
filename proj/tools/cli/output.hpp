#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

enum class Format { Table, Csv, Json };

// One command result. `body` is emitted as-is for json; table and csv are
// derived from it. A top-level "source" object maps field names to the
// route that produced them. A top-level "rows" array of flat objects is laid
// out as a grid.
void emit(std::ostream& os, const Json& body, Format fmt);

// Several results in one run (batch mode).
void emit_many(std::ostream& os, const Json& docs, Format fmt);

}  // namespace cli
