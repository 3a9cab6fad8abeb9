#pragma once

// JSON knot and barcode files, and barcode rendering.
//
// Knot file:
//   {
//     "generators":   [{"name": "q", "grading": 1}, ...],
//     "differential": {"q": [[]], "q1": [["q5", "q4", "q3"], ...]},   // [] is the unit word
//     "patches":      [[{"name": "q", "coeff": 1}], ...],
//     "heights":      {"q": 1},            // optional
//     "ng_resolved":  true,                // optional
//     "meta":         {...}                // optional, free-form
//   }
//
// Barcode file:
//   {"bars": [{"degree": 0, "birth": 1, "death": "inf", "birth_label": "q4"}, ...]}
//
// Heights and endpoints are read as exact decimals.  A string "p/q" is also
// accepted wherever a number is, and is written back for values with no
// short decimal form.

#include "legch/algebra.hpp"
#include "legch/diagram.hpp"
#include "legch/persist.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace legch {

struct KnotData {
    DGA dga;
    LagrangianDiagramData diagram;
    std::optional<HeightAssignment> heights;
    nlohmann::json meta;
};

// Throws legch::Error with a code per failure class; messages name the
// offending key (or line, for malformed JSON).
KnotData parse_knot_file(std::string_view bytes);
std::string serialize_knot_file(const KnotData& knot);
KnotData load_knot_file(const std::string& path);

Barcode parse_barcode_file(std::string_view bytes);
std::string serialize_barcode_file(const Barcode& barcode);
Barcode load_barcode_file(const std::string& path);

enum class RenderFormat { text, svg };

// Text: a header line, then one line per bar sorted by (degree, birth, death).
// SVG: one lane per degree, arrowheads on infinite bars.
std::string render_barcode(const Barcode& barcode, RenderFormat format, bool color = false);

} // namespace legch
