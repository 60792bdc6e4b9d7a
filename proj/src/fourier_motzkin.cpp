#include "ttk/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

#include "ttk/error.hpp"

namespace ttk {

namespace {

// Row a.x >= rhs, stored as a with rhs appended.
using Row = std::vector<Rational>;

void normalize(Row& r) {
    // Scale so the first nonzero coefficient has absolute value 1; keeps the
    // duplicate filter effective.
    for (std::size_t k = 0; k + 1 < r.size(); ++k)
        if (sgn(r[k]) != 0) {
            const Rational s = abs(r[k]);
            for (auto& e : r) e /= s;
            return;
        }
}

struct RowLess {
    bool operator()(const Row& a, const Row& b) const {
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] < b[k]) return true;
            if (b[k] < a[k]) return false;
        }
        return false;
    }
};

}  // namespace

bool feasible(LinearSystem sys) {
    const std::size_t n = sys.vars;
    if (sys.eq.size() != sys.eq_rhs.size() || sys.ge.size() != sys.ge_rhs.size())
        throw DimensionError("feasible: rhs length mismatch");

    std::vector<Row> eqs, ges;
    for (std::size_t r = 0; r < sys.eq.size(); ++r) {
        if (sys.eq[r].size() != n) throw DimensionError("feasible: row length mismatch");
        Row row = sys.eq[r];
        row.push_back(sys.eq_rhs[r]);
        eqs.push_back(std::move(row));
    }
    for (std::size_t r = 0; r < sys.ge.size(); ++r) {
        if (sys.ge[r].size() != n) throw DimensionError("feasible: row length mismatch");
        Row row = sys.ge[r];
        row.push_back(sys.ge_rhs[r]);
        ges.push_back(std::move(row));
    }

    // Substitution: pick x_p from an equality, eliminate it everywhere.
    while (!eqs.empty()) {
        Row e = std::move(eqs.back());
        eqs.pop_back();
        std::size_t p = n;
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(e[k]) != 0) {
                p = k;
                break;
            }
        if (p == n) {
            if (sgn(e[n]) != 0) return false;
            continue;
        }
        auto eliminate = [&](Row& r) {
            if (sgn(r[p]) == 0) return;
            const Rational f = r[p] / e[p];
            for (std::size_t k = 0; k <= n; ++k) r[k] -= f * e[k];
        };
        for (auto& r : eqs) eliminate(r);
        for (auto& r : ges) eliminate(r);
    }

    for (std::size_t var = 0; var < n; ++var) {
        std::vector<Row> pos, neg, rest;
        for (auto& r : ges) {
            const int s = sgn(r[var]);
            (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(r));
        }
        std::set<Row, RowLess> next;
        for (auto& r : rest) {
            normalize(r);
            next.insert(std::move(r));
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                // p/p[var] - q/q[var] cancels var and keeps the direction.
                Row c(n + 1);
                const Rational fp = 1 / p[var];
                const Rational fq = -1 / q[var];
                for (std::size_t k = 0; k <= n; ++k) c[k] = fp * p[k] + fq * q[k];
                c[var] = 0;
                normalize(c);
                next.insert(std::move(c));
            }
        ges.assign(next.begin(), next.end());
    }
    // Only constant rows 0 >= rhs remain.
    return std::all_of(ges.begin(), ges.end(), [n](const Row& r) { return sgn(r[n]) <= 0; });
}

}  // namespace ttk
