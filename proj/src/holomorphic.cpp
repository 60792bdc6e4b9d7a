#include "ttk/holomorphic.hpp"

#include "ttk/characters.hpp"

namespace ttk {

GSubspace ClassicalFiltration::value(long j, std::size_t rank) const {
    for (const auto& [jump, space] : jumps)
        if (jump >= j) return space;
    return GSubspace::zero(rank);
}

bool is_diag_fan(const TopologicalFan& fan) {
    for (const auto& beta : fan.rays())
        if (!is_holomorphic_char(beta)) return false;
    return true;
}

ClassicalToricData to_toric(const TopologicalFan& fan) {
    if (!is_diag_fan(fan)) throw DegenerationError("fan is not diagonal: some ray has c != 0 or b != v");
    ClassicalToricData out;
    out.n = fan.n();
    for (const auto& beta : fan.rays()) {
        std::vector<Integer> v;
        for (const auto& e : beta) v.push_back(e.v);
        out.rays.push_back(std::move(v));
    }
    out.maximal_cones = fan.maximal_simplices();
    return out;
}

ClassicalToricData to_classical_klyachko(const TopologicalFan& fan, const KlyachkoData& data) {
    ClassicalToricData out = to_toric(fan);
    out.rank = data.rank;
    std::map<int, ClassicalFiltration> filt;
    for (const auto& [i, pieces] : data.rays) {
        ClassicalFiltration f;
        for (const auto& p : pieces) {
            if (!is_diag(p.weight))
                throw NotHolomorphicError("ray " + std::to_string(i) + " carries weight " + to_string(p.weight) +
                                          " outside diag(Z)");
            const long j = p.weight.v.get_si();
            f.jumps.emplace_back(j, filtration_value(data, i, RingElem(j, 0, j)));
        }
        // Lexicographic weight order on diag(Z) is the integer order.
        filt.emplace(i, std::move(f));
    }
    out.filtrations = std::move(filt);
    return out;
}

TopologicalFan lift_fan(const ClassicalToricData& toric) {
    std::vector<RVector> rays;
    for (const auto& v : toric.rays) {
        if (v.size() != toric.n) throw InputError("classical ray of the wrong length");
        RVector beta;
        for (const auto& x : v) beta.emplace_back(Rational(x), 0, x);
        rays.push_back(std::move(beta));
    }
    return {toric.n, std::move(rays), toric.maximal_cones};
}

KlyachkoData lift(const ClassicalToricData& toric) {
    if (!toric.filtrations) throw InputError("classical data has no filtrations");
    KlyachkoData d;
    d.rank = toric.rank;
    d.flavor = Flavor::smooth;
    for (const auto& [i, f] : *toric.filtrations) {
        auto& pieces = d.rays[i];
        for (std::size_t s = 0; s < f.jumps.size(); ++s) {
            const auto& [j, space] = f.jumps[s];
            if (s == 0 && space.dim() != toric.rank)
                throw InputError("filtration of ray " + std::to_string(i) + " does not start at the whole space");
            const GSubspace next = s + 1 < f.jumps.size() ? f.jumps[s + 1].second : GSubspace::zero(toric.rank);
            if (s + 1 < f.jumps.size() && f.jumps[s + 1].first <= j)
                throw InputError("jumps of ray " + std::to_string(i) + " are not increasing");
            pieces.push_back({RingElem(j, 0, j), complement_in(next, space)});
        }
    }
    validate_data(d);
    return d;
}

}  // namespace ttk
