#include "ttk/io.hpp"

#include <fstream>
#include <sstream>

namespace ttk::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) bad(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad(where, std::string("missing key '") + key + "'");
    return *it;
}

Rational rational_from(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const InputError& e) {
        bad(where, e.what());
    }
    bad(where, "expected a rational string or integer");
}

Integer integer_from(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        const Rational q = rational_from(j, where);
        if (q.get_den() == 1) return q.get_num();
    }
    bad(where, "expected an integer");
}

Gauss gauss_from(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_gauss(j.get<std::string>());
        if (j.is_number_integer()) return Gauss(Rational(j.get<long>()));
    } catch (const InputError& e) {
        bad(where, e.what());
    }
    bad(where, "expected a Gaussian rational string");
}

const json& array_of(const json& j, std::size_t len, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    if (len != std::string::npos && j.size() != len)
        bad(where, "expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
    return j;
}

RingElem ring_from(const json& j, const std::string& where) {
    return {rational_from(field(j, "b", where), where + ".b"), rational_from(field(j, "c", where), where + ".c"),
            integer_from(field(j, "v", where), where + ".v")};
}

json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

}  // namespace

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

TopologicalFan fan_from_json(const json& j) {
    const json& nj = field(j, "n", "$");
    if (!nj.is_number_integer() || nj.get<long>() < 1) bad("$.n", "expected a positive integer");
    const auto n = static_cast<std::size_t>(nj.get<long>());
    const json& rays = array_of(field(j, "rays", "$"), std::string::npos, "$.rays");
    if (rays.empty()) bad("$.rays", "no rays");
    std::vector<RVector> betas;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const std::string where = "$.rays[" + std::to_string(i) + "]";
        const json& b = array_of(field(rays[i], "b", where), n, where + ".b");
        const json& c = array_of(field(rays[i], "c", where), n, where + ".c");
        const json& v = array_of(field(rays[i], "v", where), n, where + ".v");
        RVector beta;
        for (std::size_t k = 0; k < n; ++k) {
            const std::string at = "[" + std::to_string(k) + "]";
            beta.emplace_back(rational_from(b[k], where + ".b" + at), rational_from(c[k], where + ".c" + at),
                              integer_from(v[k], where + ".v" + at));
        }
        betas.push_back(std::move(beta));
    }
    const json& ms = array_of(field(j, "maximal_simplices", "$"), std::string::npos, "$.maximal_simplices");
    std::vector<Simplex> simplices;
    for (std::size_t s = 0; s < ms.size(); ++s) {
        const std::string where = "$.maximal_simplices[" + std::to_string(s) + "]";
        Simplex simplex;
        for (const auto& e : array_of(ms[s], std::string::npos, where)) {
            if (!e.is_number_integer()) bad(where, "expected ray indices");
            simplex.push_back(e.get<int>());
        }
        simplices.push_back(std::move(simplex));
    }
    return {n, std::move(betas), std::move(simplices)};
}

KlyachkoData data_from_json(const json& j) {
    KlyachkoData d;
    const json& rj = field(j, "rank", "$");
    if (!rj.is_number_integer() || rj.get<long>() < 0) bad("$.rank", "expected a nonnegative integer");
    d.rank = static_cast<std::size_t>(rj.get<long>());
    const json& fj = field(j, "flavor", "$");
    if (!fj.is_string()) bad("$.flavor", "expected \"continuous\" or \"smooth\"");
    try {
        d.flavor = flavor_from_string(fj.get<std::string>());
    } catch (const InputError& e) {
        bad("$.flavor", e.what());
    }
    const json& rays = field(j, "rays", "$");
    if (!rays.is_object()) bad("$.rays", "expected an object keyed by ray index");
    for (const auto& [key, list] : rays.items()) {
        const std::string where = "$.rays." + key;
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            bad(where, "ray key is not an integer");
        }
        auto& pieces = d.rays[i];
        const json& arr = array_of(list, std::string::npos, where);
        for (std::size_t p = 0; p < arr.size(); ++p) {
            const std::string at = where + "[" + std::to_string(p) + "]";
            const RingElem w = ring_from(field(arr[p], "weight", at), at + ".weight");
            const json& basis = array_of(field(arr[p], "basis", at), std::string::npos, at + ".basis");
            std::vector<std::vector<Gauss>> vs;
            for (std::size_t r = 0; r < basis.size(); ++r) {
                const std::string vat = at + ".basis[" + std::to_string(r) + "]";
                std::vector<Gauss> v;
                for (std::size_t k = 0; k < array_of(basis[r], d.rank, vat).size(); ++k)
                    v.push_back(gauss_from(basis[r][k], vat + "[" + std::to_string(k) + "]"));
                vs.push_back(std::move(v));
            }
            GSubspace s = GSubspace::span(vs, d.rank);
            if (s.dim() != vs.size()) bad(at + ".basis", "basis vectors are linearly dependent");
            pieces.push_back({w, std::move(s)});
        }
    }
    validate_data(d);
    return d;
}

TopologicalFan load_fan(const std::string& path) {
    const json j = read_json_file(path);
    try {
        return fan_from_json(j);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

KlyachkoData load_data(const std::string& path) {
    const json j = read_json_file(path);
    try {
        return data_from_json(j);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot write file");
    out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

json to_json(const RingElem& mu) {
    return {{"b", format_rational(mu.b)}, {"c", format_rational(mu.c)}, {"v", integer_json(mu.v)}};
}

json to_json(const RVector& x) {
    json out = json::array();
    for (const auto& e : x) out.push_back(to_json(e));
    return out;
}

json to_json(const Simplex& s) {
    json out = json::array();
    for (int i : s) out.push_back(i);
    return out;
}

json to_json(const GSubspace& s) {
    json basis = json::array();
    for (const auto& v : s.basis_vectors()) {
        json row = json::array();
        for (const auto& z : v) row.push_back(format_gauss(z));
        basis.push_back(std::move(row));
    }
    return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

json to_json(const QSubspace& s) {
    json basis = json::array();
    for (const auto& v : s.basis_vectors()) {
        json row = json::array();
        for (const auto& q : v) row.push_back(format_rational(q));
        basis.push_back(std::move(row));
    }
    return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

json to_json(const QMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

json fan_to_json(const TopologicalFan& fan) {
    json rays = json::array();
    for (const auto& beta : fan.rays()) {
        json b = json::array(), c = json::array(), v = json::array();
        for (const auto& e : beta) {
            b.push_back(format_rational(e.b));
            c.push_back(format_rational(e.c));
            v.push_back(integer_json(e.v));
        }
        rays.push_back({{"b", b}, {"c", c}, {"v", v}});
    }
    json ms = json::array();
    for (const auto& s : fan.maximal_simplices()) ms.push_back(to_json(s));
    return {{"n", fan.n()}, {"rays", rays}, {"maximal_simplices", ms}};
}

json data_to_json(const KlyachkoData& data) {
    json rays = json::object();
    for (const auto& [i, pieces] : data.rays) {
        json list = json::array();
        for (const auto& p : pieces)
            list.push_back({{"weight", to_json(p.weight)}, {"basis", to_json(p.piece)["basis"]}});
        rays[std::to_string(i)] = std::move(list);
    }
    return {{"rank", data.rank}, {"flavor", to_string(data.flavor)}, {"rays", rays}};
}

json to_json(const ValidationReport& rep) {
    json diags = json::array();
    for (const auto& [where, what] : rep.diagnostics) diags.push_back({{"where", where}, {"message", what}});
    return {{"condition1_ok", rep.condition1_ok},
            {"condition2_ok", rep.condition2_ok},
            {"complete", rep.complete},
            {"nonsingular", rep.nonsingular},
            {"diagnostics", diags}};
}

json to_json(const std::vector<OrbitDescriptor>& orbits) {
    json out = json::array();
    for (const auto& o : orbits) out.push_back({{"simplex", to_json(o.simplex)}, {"dim", o.complex_dimension}});
    return out;
}

json to_json(const Grading& g) {
    json pieces = json::array();
    for (const auto& p : g.pieces) {
        json tuple = json::array();
        for (const auto& w : p.tuple) tuple.push_back(to_json(w));
        pieces.push_back({{"tuple", tuple}, {"character", to_json(p.character)}, {"piece", to_json(p.piece)}});
    }
    return {{"cone", to_json(g.cone)}, {"pieces", pieces}};
}

json to_json(const CompatibilityResult& res) {
    json w = json::array();
    for (const auto& [cone, g] : res.witnesses) w.push_back(to_json(g));
    json failure = nullptr;
    if (res.failure) failure = {{"cone", to_json(res.failure->first)}, {"message", res.failure->second}};
    return {{"compatible", res.compatible}, {"witnesses", w}, {"failure", failure}};
}

json to_json(const CharacterMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (const auto& e = m.at(r, c))
                row.push_back({{"scalar", format_gauss(e->scalar)}, {"exponent", to_json(e->exponent)}});
            else
                row.push_back(nullptr);
        }
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const EulerConeReport& rep) {
    json cases = json::array();
    for (const auto& pc : rep.poset_cases)
        cases.push_back({{"ray", pc.ray},
                         {"regime", pc.regime},
                         {"weight", to_json(pc.weight)},
                         {"kernel_dim", pc.kernel_dim},
                         {"ok", pc.ok}});
    return {{"cone", to_json(rep.cone)}, {"J", to_json(rep.J)},           {"rank", rep.rank},
            {"kernel", to_json(rep.kernel)}, {"poset_cases", cases},    {"ok", rep.ok},
            {"failure", rep.failure.empty() ? json(nullptr) : json(rep.failure)}};
}

json to_json(const EulerReport& rep) {
    json cones = json::array();
    for (const auto& c : rep.cones) cones.push_back(to_json(c));
    return {{"cones", cones}, {"ok", rep.ok}};
}

json to_json(const ClassicalToricData& data) {
    json rays = json::array();
    for (const auto& v : data.rays) {
        json row = json::array();
        for (const auto& x : v) row.push_back(integer_json(x));
        rays.push_back(std::move(row));
    }
    json cones = json::array();
    for (const auto& s : data.maximal_cones) cones.push_back(to_json(s));
    json out = {{"n", data.n}, {"rays", rays}, {"maximal_cones", cones}};
    if (data.filtrations) {
        json f = json::object();
        for (const auto& [i, filt] : *data.filtrations) {
            json jumps = json::array();
            for (const auto& [j, space] : filt.jumps) jumps.push_back({{"j", j}, {"space", to_json(space)}});
            f[std::to_string(i)] = std::move(jumps);
        }
        out["rank"] = data.rank;
        out["filtrations"] = std::move(f);
    }
    return out;
}

}  // namespace ttk::io
