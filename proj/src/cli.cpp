#include "ttk/cli.hpp"

#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ttk/fixtures.hpp"
#include "ttk/io.hpp"

namespace ttk::cli {

namespace {

using io::json;

struct Options {
    std::vector<std::string> files;
    std::vector<std::string> cones;
    std::string order;
    std::string at;
    unsigned seed = 20240601u;
};

Simplex parse_cone(const std::string& text) {
    Simplex s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            s.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InputError("--cone: '" + text + "' is not a comma-separated list of ray indices");
        }
    }
    return normalize_simplex(s);
}

TorusPoint parse_point(const std::string& text) {
    std::vector<double> xs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            xs.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InputError("--at: '" + tok + "' is not a number");
        }
    }
    if (xs.size() % 2 != 0) throw InputError("--at expects re,im pairs");
    TorusPoint z;
    for (std::size_t k = 0; k < xs.size(); k += 2) z.emplace_back(xs[k], xs[k + 1]);
    return z;
}

void need_files(const Options& o, std::size_t lo, std::size_t hi, const std::string& usage) {
    if (o.files.size() < lo || o.files.size() > hi) throw InputError("usage: " + usage);
}

Simplex cone_or_default(const TopologicalFan& fan, const Options& o) {
    if (o.cones.size() > 1) throw InputError("expected at most one --cone");
    return o.cones.empty() ? fan.top_simplices().front() : parse_cone(o.cones.front());
}

KlyachkoData load_data_with_order(const Options& o, const std::string& path) {
    KlyachkoData d = io::load_data(path);
    if (!o.order.empty()) d.flavor = flavor_from_string(o.order);
    return d;
}

int cmd_validate(const Options& o, json& out) {
    need_files(o, 1, 1, "validate FAN");
    const auto rep = validate_fan(io::load_fan(o.files[0]));
    out = io::to_json(rep);
    return rep.condition1_ok && rep.condition2_ok ? 0 : 1;
}

int cmd_dual(const Options& o, json& out) {
    need_files(o, 1, 1, "dual FAN [--cone I]");
    const auto fan = io::load_fan(o.files[0]);
    std::vector<Simplex> cones;
    for (const auto& c : o.cones) cones.push_back(parse_cone(c));
    if (cones.empty()) cones = fan.top_simplices();
    out = json::array();
    for (const auto& I : cones) {
        json alpha = json::array();
        for (const auto& a : dual_basis(fan, I)) alpha.push_back(io::to_json(a));
        out.push_back({{"cone", io::to_json(I)}, {"alpha", alpha}});
    }
    return 0;
}

int cmd_orbits(const Options& o, json& out) {
    need_files(o, 1, 1, "orbits FAN");
    out = io::to_json(enumerate_orbits(io::load_fan(o.files[0])));
    return 0;
}

int cmd_kernel(const Options& o, json& out) {
    need_files(o, 1, 1, "kernel FAN [--cone I]");
    const auto fan = io::load_fan(o.files[0]);
    const Simplex I = cone_or_default(fan, o);
    out = {{"cone", io::to_json(I)}, {"kernel", io::to_json(kernel_lie_basis(fan, I))}};
    return 0;
}

int cmd_compat(const Options& o, json& out) {
    need_files(o, 2, 2, "compat FAN DATA [--order continuous|smooth]");
    const auto fan = io::load_fan(o.files[0]);
    const auto res = check_compatibility(fan, load_data_with_order(o, o.files[1]));
    out = io::to_json(res);
    return res.compatible ? 0 : 1;
}

int cmd_hom(const Options& o, json& out) {
    need_files(o, 3, 3, "hom FAN E F [--cone I]");
    const auto fan = io::load_fan(o.files[0]);
    const auto E = load_data_with_order(o, o.files[1]);
    const auto F = load_data_with_order(o, o.files[2]);
    const Simplex I = cone_or_default(fan, o);
    out = {{"cone", io::to_json(I)}, {"dim", hom_dimension(fan, E, F, I)}};
    return 0;
}

json complex_matrix_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& z : r) row.push_back({z.real(), z.imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_cocycle(const Options& o, json& out) {
    need_files(o, 2, 2, "cocycle FAN DATA --cone I --cone J [--cone K] [--at ...] [--seed N]");
    const auto fan = io::load_fan(o.files[0]);
    const auto data = load_data_with_order(o, o.files[1]);
    std::vector<Simplex> cones;
    for (const auto& c : o.cones) cones.push_back(parse_cone(c));
    if (cones.size() == 2) {
        const auto f = transition_cocycle(fan, data, cones[0], cones[1]);
        out = {{"I", io::to_json(cones[0])}, {"J", io::to_json(cones[1])}, {"matrix", io::to_json(f)}};
        if (!o.at.empty()) out["value"] = complex_matrix_json(f.evaluate(parse_point(o.at)));
        return 0;
    }
    if (cones.size() != 3) throw InputError("cocycle expects two cones (matrix) or three (identity check)");
    // f_IJ f_JK f_KI = 1 at sampled torus points.
    const auto fIJ = transition_cocycle(fan, data, cones[0], cones[1]);
    const auto fJK = transition_cocycle(fan, data, cones[1], cones[2]);
    const auto fKI = transition_cocycle(fan, data, cones[2], cones[0]);
    std::mt19937 rng(o.seed);
    std::uniform_real_distribution<double> modulus(0.5, 2.0), angle(-3.14159265358979, 3.14159265358979);
    double worst = 0.0;
    for (int sample = 0; sample < 16; ++sample) {
        TorusPoint t;
        for (std::size_t k = 0; k < fan.n(); ++k) t.push_back(std::polar(modulus(rng), angle(rng)));
        const auto p = multiply(multiply(fIJ.evaluate(t), fJK.evaluate(t)), fKI.evaluate(t));
        for (std::size_t r = 0; r < p.size(); ++r)
            for (std::size_t c = 0; c < p.size(); ++c)
                worst = std::max(worst, std::abs(p[r][c] - (r == c ? 1.0 : 0.0)));
    }
    const bool ok = worst <= 1e-9;
    out = {{"cones", {io::to_json(cones[0]), io::to_json(cones[1]), io::to_json(cones[2])}},
           {"samples", 16},
           {"seed", o.seed},
           {"max_error", worst},
           {"ok", ok}};
    return ok ? 0 : 1;
}

int cmd_euler(const Options& o, json& out) {
    need_files(o, 1, 1, "euler FAN [--cone I] [--at re,im,...]");
    const auto fan = io::load_fan(o.files[0]);
    if (o.cones.empty()) {
        const auto rep = verify_euler_sequence(fan);
        out = io::to_json(rep);
        return rep.ok ? 0 : 1;
    }
    const Simplex I = cone_or_default(fan, o);
    const auto rep = verify_euler_cone(fan, I);
    out = io::to_json(rep);
    if (!o.at.empty()) {
        const TorusPoint z = parse_point(o.at);
        if (z.size() != fan.m()) throw InputError("--at needs " + std::to_string(fan.m()) + " complex coordinates");
        out["jacobian"] = jacobian_numeric(fan, I, z);
    }
    return rep.ok ? 0 : 1;
}

int cmd_holo(const Options& o, json& out) {
    need_files(o, 1, 2, "holo FAN [DATA]");
    const auto fan = io::load_fan(o.files[0]);
    const bool diag = is_diag_fan(fan);
    out = {{"diag", diag}, {"toric", nullptr}};
    if (!diag) return 1;
    if (o.files.size() == 1) {
        out["toric"] = io::to_json(to_toric(fan));
        return 0;
    }
    try {
        out["toric"] = io::to_json(to_classical_klyachko(fan, load_data_with_order(o, o.files[1])));
    } catch (const NotHolomorphicError& e) {
        out["holomorphic"] = false;
        out["message"] = e.what();
        return 1;
    }
    out["holomorphic"] = true;
    return 0;
}

int cmd_example(const Options& o, json& out) {
    need_files(o, 1, 1, "example OUTDIR");
    const std::filesystem::path dir(o.files[0]);
    std::filesystem::create_directories(dir);
    const auto fan = fixtures::nontoric_fan();
    json written = json::array();
    auto write = [&](const std::string& name, const json& j) {
        io::write_json_file((dir / name).string(), j);
        written.push_back((dir / name).string());
    };
    write("nontoric.json", io::fan_to_json(fan));
    for (int i = 1; i <= static_cast<int>(fan.m()); ++i)
        write("L" + std::to_string(i) + ".json", io::data_to_json(line_bundle_data(fan, i)));
    out = {{"written", written}};
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Topological toric manifolds and Klyachko data"};
    app.require_subcommand(1);
    Options o;
    using Handler = int (*)(const Options&, json&);
    const std::vector<std::tuple<const char*, const char*, Handler>> verbs = {
        {"validate", "validate a fan", cmd_validate},
        {"dual", "dual bases of maximal cones", cmd_dual},
        {"orbits", "orbit-cone correspondence", cmd_orbits},
        {"kernel", "Lie algebra of Ker lambda", cmd_kernel},
        {"compat", "compatibility of Klyachko data", cmd_compat},
        {"hom", "dimension of the local hom space", cmd_hom},
        {"cocycle", "transition cocycle between charts", cmd_cocycle},
        {"euler", "canonical exact sequence check", cmd_euler},
        {"holo", "holomorphic degeneration", cmd_holo},
        {"example", "write the bundled example files", cmd_example},
    };
    std::map<CLI::App*, Handler> handlers;
    for (const auto& [name, help, fn] : verbs) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("files", o.files, "input files");
        sub->add_option("--cone", o.cones, "comma-separated 1-based ray indices");
        sub->add_option("--order", o.order, "continuous|smooth")->check(CLI::IsMember({"continuous", "smooth"}));
        sub->add_option("--at", o.at, "torus point as re,im,re,im,...");
        sub->add_option("--seed", o.seed, "sampling seed");
        handlers[sub] = fn;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    json result;
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        out << json::object().dump(2) << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        out << json{{"error", e.what()}}.dump(2) << '\n';
        return 2;
    }

    try {
        for (auto* sub : app.get_subcommands()) {
            const int code = handlers.at(sub)(o, result);
            out << result.dump(2) << '\n';
            return code;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        out << json{{"error", e.what()}}.dump(2) << '\n';
        return 2;
    }
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace ttk::cli
