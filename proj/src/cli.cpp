#include "legch/cli.hpp"

#include "legch/augment.hpp"
#include "legch/diagram.hpp"
#include "legch/io.hpp"
#include "legch/metrics.hpp"
#include "legch/persist.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace legch {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_flood = 2;

// Thrown when the chosen height source is flooding and flooding fails.
struct FloodFailure {
    std::string message;
};

std::string name_set(const std::vector<GeneratorId>& ids, const DGA& dga) {
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out += (i ? ", " : "") + dga.name(ids[i]);
    }
    return out + "}";
}

std::string format_chain(const Z2Vector& chain, const DGA& dga) {
    if (chain.empty()) {
        return "0";
    }
    std::string out;
    for (GeneratorId id : chain) {
        out += (out.empty() ? "" : " + ") + dga.name(id);
    }
    return out;
}

Augmentation pick_augmentation(const DGA& dga, std::size_t index) {
    const std::vector<Augmentation> all = enumerate_augmentations(dga);
    if (index >= all.size()) {
        throw Error(ErrorCode::usage, "--aug " + std::to_string(index) + " out of range; the file has " +
                                          std::to_string(all.size()) + " augmentations");
    }
    return all[index];
}

HeightAssignment pick_heights(const KnotData& knot, const std::string& source) {
    const bool use_file = source == "file" || (source.empty() && knot.heights);
    if (use_file) {
        if (!knot.heights) {
            throw Error(ErrorCode::usage, "--heights file given but the file has no \"heights\"");
        }
        return *knot.heights;
    }
    const Tiering tiering = flood(area_inequalities(knot.diagram), knot.diagram.crossings());
    if (!tiering.succeeded()) {
        throw FloodFailure{"flooding failed; unassigned = " + name_set(tiering.unassigned, knot.dga)};
    }
    return assign_heights(tiering);
}

Barcode barcode_of(const KnotData& knot, std::size_t aug, const std::string& height_source) {
    const Augmentation eps = pick_augmentation(knot.dga, aug);
    const HeightAssignment heights = pick_heights(knot, height_source);
    return compute_barcode(build_filtered_complex(linearized_differential(knot.dga, eps), heights));
}

std::string count(std::size_t n, const std::string& one, const std::string& many) {
    return std::to_string(n) + " " + (n == 1 ? one : many);
}

int cmd_validate(const std::string& path, std::ostream& out) {
    const KnotData knot = load_knot_file(path);
    out << "valid: " << count(knot.dga.size(), "generator", "generators") << ", " << count(knot.diagram.patches().size(), "patch", "patches") << "\n";
    if (knot.heights) {
        const InequalitySystem system = area_inequalities(knot.diagram);
        const HeightCheck check = validate_heights(*knot.heights, system);
        if (!check.valid) {
            std::string list;
            for (std::size_t i : check.violations) {
                list += (list.empty() ? "" : ", ") + std::to_string(i);
            }
            throw Error(ErrorCode::invalid_height, "heights give nonpositive area on patches " + list);
        }
        out << "heights: positive area on " << count(system.inequalities.size(), "patch", "patches") << "\n";
    }
    return exit_ok;
}

int cmd_augment(const std::string& path, std::ostream& out) {
    const KnotData knot = load_knot_file(path);
    const std::vector<Augmentation> all = enumerate_augmentations(knot.dga);
    out << all.size() << (all.size() == 1 ? " augmentation\n" : " augmentations\n");
    for (std::size_t i = 0; i < all.size(); ++i) {
        out << "[" << i << "]";
        bool any = false;
        for (const Generator& g : knot.dga.generators()) {
            if (g.grading == 0) {
                out << " " << g.name << "=" << int(all[i].value(g.id));
                any = true;
            }
        }
        if (!any) {
            out << " (no grading-0 generators)";
        }
        out << "\n";
    }
    return exit_ok;
}

int cmd_linearize(const std::string& path, std::size_t aug, std::ostream& out) {
    const KnotData knot = load_knot_file(path);
    const LinearizedComplex lin = linearized_differential(knot.dga, pick_augmentation(knot.dga, aug));
    for (const Generator& g : lin.generators) {
        out << "d " << g.name << " = " << format_chain(lin.differential.column(g.id), knot.dga) << "\n";
    }
    return exit_ok;
}

int cmd_flood(const std::string& path, std::ostream& out) {
    const KnotData knot = load_knot_file(path);
    const Tiering tiering = flood(area_inequalities(knot.diagram), knot.diagram.crossings());
    for (std::size_t k = 0; k < tiering.tiers.size(); ++k) {
        out << "T" << k + 1 << " = " << name_set(tiering.tiers[k], knot.dga) << "\n";
    }
    if (!tiering.succeeded()) {
        out << "flooding failed\n";
        out << "unassigned = " << name_set(tiering.unassigned, knot.dga) << "\n";
        return exit_flood;
    }
    const HeightAssignment heights = assign_heights(tiering);
    for (const auto& [id, h] : heights.entries()) {
        out << "h(" << knot.dga.name(id) << ") = " << to_exact_string(h) << "\n";
    }
    return exit_ok;
}

int cmd_barcode(const std::string& path, std::size_t aug, const std::string& heights, const std::string& render,
                bool color, std::ostream& out) {
    const Barcode barcode = barcode_of(load_knot_file(path), aug, heights);
    if (render.empty()) {
        out << serialize_barcode_file(barcode);
    } else {
        out << render_barcode(barcode, render == "svg" ? RenderFormat::svg : RenderFormat::text, color);
    }
    return exit_ok;
}

int cmd_distance(const std::string& a, const std::string& b, std::ostream& out) {
    const ExtendedRational d = interleaving_distance(load_barcode_file(a), load_barcode_file(b));
    out << (d.is_finite() ? to_exact_string(d.value()) : d.to_string()) << "\n";
    return exit_ok;
}

int cmd_morse(const std::string& path, std::size_t aug, const std::string& heights, std::ostream& out) {
    const KnotData knot = load_knot_file(path);
    const StrongMorseReport report = check_strong_morse(knot.dga, barcode_of(knot, aug, heights));
    out << "MC = " << report.morse_chekanov.to_string() << "\n";
    out << "PC = " << report.poincare_chekanov.to_string() << "\n";
    out << "R = " << report.finite_bars.to_string() << "\n";
    out << "Strong Morse inequality: " << (report.holds ? "HOLDS" : "FAILS") << "\n";
    return report.holds ? exit_ok : exit_input;
}

bool color_enabled(bool allow_color) {
    if (!allow_color) {
        return false;
    }
    const char* env = std::getenv("LEGCH_COLOR");
    return env == nullptr || std::string(env) != "0";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool allow_color) {
    CLI::App app{"Persistent Legendrian contact homology on desk-scale knot diagrams", "legch"};
    app.require_subcommand(1);

    std::string file, file2, heights, render;
    std::size_t aug = 0;

    auto* validate = app.add_subcommand("validate", "Parse and check a knot file");
    validate->add_option("file", file, "Knot file")->required();

    auto* augment = app.add_subcommand("augment", "List augmentations with their indices");
    augment->add_option("file", file, "Knot file")->required();

    auto* linearize = app.add_subcommand("linearize", "Print the linearized differential");
    linearize->add_option("file", file, "Knot file")->required();
    linearize->add_option("--aug", aug, "Augmentation index")->capture_default_str();

    auto* flood_cmd = app.add_subcommand("flood", "Run the flooding algorithm on the area inequalities");
    flood_cmd->add_option("file", file, "Knot file")->required();

    const std::vector<std::string> height_sources{"flood", "file"};
    auto* barcode = app.add_subcommand("barcode", "Compute the barcode (BarcodeFile JSON unless --render)");
    barcode->add_option("file", file, "Knot file")->required();
    barcode->add_option("--aug", aug, "Augmentation index")->capture_default_str();
    barcode->add_option("--heights", heights, "Height source; default: the file's heights, else flooding")
        ->check(CLI::IsMember(height_sources));
    barcode->add_option("--render", render, "Render as a bar chart")->check(CLI::IsMember({"text", "svg"}));

    auto* distance = app.add_subcommand("distance", "Interleaving distance between two barcode files");
    distance->add_option("bc1", file, "Barcode file")->required();
    distance->add_option("bc2", file2, "Barcode file")->required();

    auto* morse = app.add_subcommand("morse", "Check MC - PC = (z+1) R");
    morse->add_option("file", file, "Knot file")->required();
    morse->add_option("--aug", aug, "Augmentation index")->capture_default_str();
    morse->add_option("--heights", heights, "Height source; default: the file's heights, else flooding")
        ->check(CLI::IsMember(height_sources));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_input;
    }

    try {
        if (*validate) {
            return cmd_validate(file, out);
        }
        if (*augment) {
            return cmd_augment(file, out);
        }
        if (*linearize) {
            return cmd_linearize(file, aug, out);
        }
        if (*flood_cmd) {
            return cmd_flood(file, out);
        }
        if (*barcode) {
            return cmd_barcode(file, aug, heights, render, color_enabled(allow_color), out);
        }
        if (*distance) {
            return cmd_distance(file, file2, out);
        }
        if (*morse) {
            return cmd_morse(file, aug, heights, out);
        }
    } catch (const FloodFailure& e) {
        err << "error: " << e.message << "\n";
        return exit_flood;
    } catch (const Error& e) {
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_input;
    }
    err << app.help();
    return exit_input;
}

} // namespace legch
