#include "legch/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace legch {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

json parse_json(std::string_view bytes) {
    try {
        return json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        const std::size_t offset = std::min<std::size_t>(e.byte, bytes.size());
        const auto line = 1 + std::count(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(offset), '\n');
        fail(ErrorCode::malformed_json, "malformed JSON at line " + std::to_string(line) + ": " + e.what());
    }
}

const json& require(const json& object, const std::string& key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) {
        fail(ErrorCode::schema_violation, "missing key '" + key + "' in " + where);
    }
    return *it;
}

std::string require_string(const json& value, const std::string& where) {
    if (!value.is_string()) {
        fail(ErrorCode::schema_violation, where + " must be a string");
    }
    return value.get<std::string>();
}

Rational read_number(const json& value, const std::string& where) {
    if (value.is_number_integer()) {
        return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>()) : Rational(value.get<std::int64_t>());
    }
    if (value.is_number_float()) {
        return rational_from_decimal_double(value.get<double>());
    }
    if (value.is_string()) {
        if (auto parsed = parse_rational(value.get<std::string>())) {
            return *parsed;
        }
    }
    fail(ErrorCode::schema_violation, where + " must be a number");
}

template <typename Json>
Json write_number(const Rational& value) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(value) == 1) {
        const auto num = numerator(value);
        if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max()) {
            return Json(num.template convert_to<std::int64_t>());
        }
    }
    if (is_terminating_decimal(value)) {
        const double approx = to_double(value);
        if (rational_from_decimal_double(approx) == value) {
            return Json(approx);
        }
    }
    return Json(to_exact_string(value));
}

void check_known_keys(const json& object, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = object.begin(); it != object.end(); ++it) {
        if (!allowed.count(it.key())) {
            fail(ErrorCode::schema_violation, "unexpected key '" + it.key() + "' in " + where);
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::usage, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

KnotData parse_knot_file(std::string_view bytes) {
    const json root = parse_json(bytes);
    if (!root.is_object()) {
        fail(ErrorCode::schema_violation, "knot file must be a JSON object");
    }
    check_known_keys(root, {"generators", "differential", "patches", "heights", "ng_resolved", "meta"}, "knot file");

    const json& gens = require(root, "generators", "knot file");
    if (!gens.is_array()) {
        fail(ErrorCode::schema_violation, "'generators' must be an array");
    }
    std::vector<Generator> generators;
    std::map<std::string, GeneratorId> ids;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string where = "generators[" + std::to_string(i) + "]";
        const json& g = gens[i];
        if (!g.is_object()) {
            fail(ErrorCode::schema_violation, where + " must be an object");
        }
        const std::string name = require_string(require(g, "name", where), where + ".name");
        const json& grading = require(g, "grading", where);
        if (!grading.is_number_integer()) {
            fail(ErrorCode::schema_violation, where + ".grading must be an integer");
        }
        if (name.empty()) {
            fail(ErrorCode::schema_violation, where + ".name must not be empty");
        }
        if (ids.count(name)) {
            fail(ErrorCode::duplicate_generator, where + ": duplicate generator name '" + name + "'");
        }
        const auto id = static_cast<GeneratorId>(i);
        ids[name] = id;
        generators.push_back({id, name, grading.get<int>()});
    }

    auto lookup = [&ids](const std::string& name, const std::string& where) {
        auto it = ids.find(name);
        if (it == ids.end()) {
            fail(ErrorCode::unknown_generator, where + ": unknown generator '" + name + "'");
        }
        return it->second;
    };

    const json& diff = require(root, "differential", "knot file");
    if (!diff.is_object()) {
        fail(ErrorCode::schema_violation, "'differential' must be an object");
    }
    std::vector<std::optional<Element>> differential(generators.size());
    for (auto it = diff.begin(); it != diff.end(); ++it) {
        const std::string where = "differential." + it.key();
        const GeneratorId id = lookup(it.key(), "differential");
        if (!it.value().is_array()) {
            fail(ErrorCode::schema_violation, where + " must be an array of words");
        }
        Element element;
        for (std::size_t w = 0; w < it.value().size(); ++w) {
            const json& word = it.value()[w];
            const std::string word_where = where + "[" + std::to_string(w) + "]";
            if (!word.is_array()) {
                fail(ErrorCode::schema_violation, word_where + " must be an array of generator names");
            }
            Word letters;
            for (const json& letter : word) {
                letters.letters.push_back(lookup(require_string(letter, word_where), word_where));
            }
            element.toggle(letters);
        }
        differential[id] = std::move(element);
    }
    std::vector<Element> complete;
    for (const Generator& g : generators) {
        if (!differential[g.id]) {
            fail(ErrorCode::schema_violation, "differential has no entry for '" + g.name + "'");
        }
        complete.push_back(std::move(*differential[g.id]));
    }

    KnotData knot;
    knot.dga = DGA(generators, std::move(complete));
    const DgaReport report = validate_dga(knot.dga);
    for (const DgaViolation& v : report.violations) {
        if (v.kind == DgaViolation::Kind::grading_drop) {
            fail(ErrorCode::grading_violation, "differential." + knot.dga.name(v.generator) + ": " + v.message);
        }
    }
    if (!report.valid()) {
        const DgaViolation& v = report.violations.front();
        fail(ErrorCode::nonzero_square, "differential." + knot.dga.name(v.generator) + ": " + v.message);
    }

    const json& patches = require(root, "patches", "knot file");
    if (!patches.is_array()) {
        fail(ErrorCode::schema_violation, "'patches' must be an array");
    }
    std::vector<AreaPatch> area_patches;
    for (std::size_t p = 0; p < patches.size(); ++p) {
        const std::string where = "patches[" + std::to_string(p) + "]";
        if (!patches[p].is_array()) {
            fail(ErrorCode::schema_violation, where + " must be an array of corners");
        }
        AreaPatch patch;
        for (std::size_t c = 0; c < patches[p].size(); ++c) {
            const std::string corner_where = where + "[" + std::to_string(c) + "]";
            const json& corner = patches[p][c];
            if (!corner.is_object()) {
                fail(ErrorCode::schema_violation, corner_where + " must be an object");
            }
            const GeneratorId id =
                lookup(require_string(require(corner, "name", corner_where), corner_where + ".name"), corner_where);
            const json& coeff = require(corner, "coeff", corner_where);
            if (!coeff.is_number_integer()) {
                fail(ErrorCode::invalid_patch, corner_where + ".coeff must be an integer");
            }
            patch.corners.push_back({id, coeff.get<int>()});
        }
        area_patches.push_back(std::move(patch));
    }

    bool ng_resolved = false;
    if (auto it = root.find("ng_resolved"); it != root.end()) {
        if (!it->is_boolean()) {
            fail(ErrorCode::schema_violation, "'ng_resolved' must be a boolean");
        }
        ng_resolved = it->get<bool>();
    }
    std::vector<GeneratorId> crossings;
    for (const Generator& g : generators) {
        crossings.push_back(g.id);
    }
    knot.diagram = LagrangianDiagramData(std::move(crossings), std::move(area_patches), ng_resolved);

    if (auto it = root.find("heights"); it != root.end()) {
        if (!it->is_object()) {
            fail(ErrorCode::schema_violation, "'heights' must be an object");
        }
        std::map<GeneratorId, Rational> heights;
        for (auto h = it->begin(); h != it->end(); ++h) {
            const GeneratorId id = lookup(h.key(), "heights");
            Rational value = read_number(h.value(), "heights." + h.key());
            if (!(value > 0)) {
                fail(ErrorCode::invalid_height, "heights." + h.key() + " must be positive");
            }
            heights[id] = std::move(value);
        }
        for (const Generator& g : generators) {
            if (!heights.count(g.id)) {
                fail(ErrorCode::invalid_height, "heights has no entry for '" + g.name + "'");
            }
        }
        knot.heights = HeightAssignment(std::move(heights));
    }

    if (auto it = root.find("meta"); it != root.end()) {
        knot.meta = *it;
    }
    return knot;
}

std::string serialize_knot_file(const KnotData& knot) {
    const DGA& dga = knot.dga;
    ordered_json root;
    ordered_json gens = ordered_json::array();
    for (const Generator& g : dga.generators()) {
        gens.push_back({{"name", g.name}, {"grading", g.grading}});
    }
    root["generators"] = std::move(gens);

    ordered_json diff = ordered_json::object();
    for (const Generator& g : dga.generators()) {
        ordered_json words = ordered_json::array();
        for (const Word& w : dga.differential(g.id).words()) {
            ordered_json letters = ordered_json::array();
            for (GeneratorId letter : w.letters) {
                letters.push_back(dga.name(letter));
            }
            words.push_back(std::move(letters));
        }
        diff[g.name] = std::move(words);
    }
    root["differential"] = std::move(diff);

    ordered_json patches = ordered_json::array();
    for (const AreaPatch& patch : knot.diagram.patches()) {
        ordered_json corners = ordered_json::array();
        for (const Corner& c : patch.corners) {
            corners.push_back({{"name", dga.name(c.crossing)}, {"coeff", c.coefficient}});
        }
        patches.push_back(std::move(corners));
    }
    root["patches"] = std::move(patches);

    if (knot.heights) {
        ordered_json heights = ordered_json::object();
        for (const auto& [id, h] : knot.heights->entries()) {
            heights[dga.name(id)] = write_number<ordered_json>(h);
        }
        root["heights"] = std::move(heights);
    }
    root["ng_resolved"] = knot.diagram.ng_resolved();
    if (!knot.meta.is_null()) {
        root["meta"] = ordered_json::parse(knot.meta.dump());
    }
    return root.dump(2) + "\n";
}

KnotData load_knot_file(const std::string& path) {
    return parse_knot_file(read_file(path));
}

Barcode parse_barcode_file(std::string_view bytes) {
    const json root = parse_json(bytes);
    if (!root.is_object()) {
        fail(ErrorCode::schema_violation, "barcode file must be a JSON object");
    }
    const json& bars = require(root, "bars", "barcode file");
    if (!bars.is_array()) {
        fail(ErrorCode::schema_violation, "'bars' must be an array");
    }
    Barcode barcode;
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const std::string where = "bars[" + std::to_string(i) + "]";
        const json& b = bars[i];
        if (!b.is_object()) {
            fail(ErrorCode::schema_violation, where + " must be an object");
        }
        check_known_keys(b, {"degree", "birth", "death", "birth_label", "death_label"}, where);
        Bar bar;
        const json& degree = require(b, "degree", where);
        if (!degree.is_number_integer()) {
            fail(ErrorCode::schema_violation, where + ".degree must be an integer");
        }
        bar.degree = degree.get<int>();
        bar.birth = read_number(require(b, "birth", where), where + ".birth");
        const json& death = require(b, "death", where);
        if (!(death.is_string() && death.get<std::string>() == "inf")) {
            bar.death = read_number(death, where + ".death");
            if (!(bar.birth < *bar.death)) {
                fail(ErrorCode::schema_violation, where + ": birth must be smaller than death");
            }
        }
        if (auto it = b.find("birth_label"); it != b.end()) {
            bar.birth_label = require_string(*it, where + ".birth_label");
        }
        if (auto it = b.find("death_label"); it != b.end()) {
            bar.death_label = require_string(*it, where + ".death_label");
        }
        barcode.bars.push_back(std::move(bar));
    }
    return barcode;
}

std::string serialize_barcode_file(const Barcode& barcode) {
    ordered_json bars = ordered_json::array();
    for (const Bar& bar : barcode.canonical().bars) {
        ordered_json b;
        b["degree"] = bar.degree;
        b["birth"] = write_number<ordered_json>(bar.birth);
        b["death"] = bar.death ? write_number<ordered_json>(*bar.death) : ordered_json("inf");
        if (bar.birth_label) {
            b["birth_label"] = *bar.birth_label;
        }
        if (bar.death_label) {
            b["death_label"] = *bar.death_label;
        }
        bars.push_back(std::move(b));
    }
    ordered_json root;
    root["bars"] = std::move(bars);
    return root.dump(2) + "\n";
}

Barcode load_barcode_file(const std::string& path) {
    return parse_barcode_file(read_file(path));
}

namespace {

std::string render_text(const Barcode& barcode, bool color) {
    const Barcode sorted = barcode.canonical();
    std::string out = "barcode: " + std::to_string(sorted.bars.size()) + (sorted.bars.size() == 1 ? " bar\n" : " bars\n");
    const char* degree_on = color ? "\x1b[1;36m" : "";
    const char* inf_on = color ? "\x1b[33m" : "";
    const char* off = color ? "\x1b[0m" : "";
    for (const Bar& bar : sorted.bars) {
        out += degree_on;
        out += "H" + std::to_string(bar.degree);
        out += off;
        out += "  [" + to_decimal_string(bar.birth) + ", ";
        if (bar.death) {
            out += to_decimal_string(*bar.death) + ")";
        } else {
            out += inf_on;
            out += "inf";
            out += off;
            out += ")";
        }
        if (bar.birth_label) {
            out += "  " + *bar.birth_label;
        }
        if (bar.death_label) {
            out += "  killed by " + *bar.death_label;
        }
        out += "\n";
    }
    return out;
}

std::string fmt2(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string render_svg(const Barcode& barcode) {
    const Barcode sorted = barcode.canonical();
    const std::vector<int> degrees = sorted.degrees();

    Rational max_value = 1;
    for (const Bar& bar : sorted.bars) {
        max_value = std::max(max_value, bar.birth);
        if (bar.death) {
            max_value = std::max(max_value, *bar.death);
        }
    }
    const double left = 60.0;
    const double plot_width = 480.0;
    const double right_edge = left + plot_width + 40.0;
    const double row = 18.0;
    const double lane_gap = 14.0;
    const double scale = plot_width / to_double(max_value);

    double height = 30.0;
    for (int d : degrees) {
        const auto count = std::count_if(sorted.bars.begin(), sorted.bars.end(), [d](const Bar& b) { return b.degree == d; });
        height += lane_gap + row * static_cast<double>(count);
    }
    height += 30.0;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt2(right_edge + 20.0) + "\" height=\"" +
           fmt2(height) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out += "  <defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" "
           "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n";

    double y = 30.0;
    for (int d : degrees) {
        y += lane_gap;
        const double lane_top = y;
        for (const Bar& bar : sorted.bars) {
            if (bar.degree != d) {
                continue;
            }
            const double x0 = left + scale * to_double(bar.birth);
            const double cy = y + row / 2.0;
            if (bar.death) {
                const double x1 = left + scale * to_double(*bar.death);
                out += "  <line x1=\"" + fmt2(x0) + "\" y1=\"" + fmt2(cy) + "\" x2=\"" + fmt2(x1) + "\" y2=\"" +
                       fmt2(cy) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
                out += "  <circle cx=\"" + fmt2(x1) + "\" cy=\"" + fmt2(cy) + "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
            } else {
                out += "  <line x1=\"" + fmt2(x0) + "\" y1=\"" + fmt2(cy) + "\" x2=\"" + fmt2(right_edge) + "\" y2=\"" +
                       fmt2(cy) + "\" stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
            }
            out += "  <circle cx=\"" + fmt2(x0) + "\" cy=\"" + fmt2(cy) + "\" r=\"3\" fill=\"black\"/>\n";
            if (bar.birth_label) {
                out += "  <text x=\"" + fmt2(x0 - 4.0) + "\" y=\"" + fmt2(cy - 4.0) + "\" text-anchor=\"end\">" +
                       xml_escape(*bar.birth_label) + "</text>\n";
            }
            y += row;
        }
        out += "  <text x=\"10\" y=\"" + fmt2((lane_top + y) / 2.0 + 4.0) + "\">H" + std::to_string(d) + "</text>\n";
    }

    const double axis_y = y + 12.0;
    out += "  <line x1=\"" + fmt2(left) + "\" y1=\"" + fmt2(axis_y) + "\" x2=\"" + fmt2(right_edge) + "\" y2=\"" +
           fmt2(axis_y) + "\" stroke=\"gray\" marker-end=\"url(#arrow)\"/>\n";
    std::set<Rational> ticks;
    for (const Bar& bar : sorted.bars) {
        ticks.insert(bar.birth);
        if (bar.death) {
            ticks.insert(*bar.death);
        }
    }
    for (const Rational& t : ticks) {
        const double x = left + scale * to_double(t);
        out += "  <text x=\"" + fmt2(x) + "\" y=\"" + fmt2(axis_y + 14.0) + "\" text-anchor=\"middle\">" +
               to_decimal_string(t) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace

std::string render_barcode(const Barcode& barcode, RenderFormat format, bool color) {
    return format == RenderFormat::svg ? render_svg(barcode) : render_text(barcode, color);
}

} // namespace legch
