#include "modcat/labels.hpp"

#include <map>
#include <stdexcept>

namespace modcat {

MeshCoord mesh_coord(const NakayamaAlgebra& a, const Interval& iv) {
    int row_start = a.n - iv.len + 1;  // top vertex of the leftmost node in the row
    int p = row_start - iv.top;        // position from the left
    return MeshCoord{(iv.len - 1) + 2 * p, iv.len - 1};
}

std::vector<std::pair<Interval, Interval>> ar_quiver_arrows(const NakayamaAlgebra& a) {
    std::vector<std::pair<Interval, Interval>> out;
    for (int t = 1; t <= a.n; ++t) {
        int maxlen = std::min(a.m, a.n - t + 1);
        for (int l = 1; l <= maxlen; ++l) {
            Interval src{t, l};
            Interval up{t - 1, l + 1};
            if (up.valid_in(a)) out.emplace_back(src, up);
            Interval down{t, l - 1};
            if (down.valid_in(a)) out.emplace_back(src, down);
        }
    }
    return out;
}

namespace {

// name grids per mesh row for the nine-vertex, fourth-power algebra;
// rows listed by length, positions left to right
const std::vector<std::vector<std::string>>& name_grid_9_4() {
    static const std::vector<std::vector<std::string>> grid = {
        // length 1
        {"M^1_1", "M^4_2", "M^6_2", "M^3_2", "M^1_3", "H_4", "H_3", "H_1", "M^6_1"},
        // length 2
        {"M^2_1", "M^5_2", "M^2_2", "M^5_3", "M^2_3", "H_5", "H_2", "M^5_1"},
        // length 3
        {"M^3_1", "M^1_2", "M^4_3", "M^6_3", "M^3_3", "H_6", "M^4_1"},
        // length 4
        {"P_1", "P_2", "P_3", "P_4", "P_5", "P_6"},
    };
    return grid;
}

} // namespace

std::vector<std::pair<std::string, Interval>> derived_label_table(const NakayamaAlgebra& a) {
    if (a.n != 9 || a.m != 4)
        throw std::invalid_argument("mesh names are published for the (n,m) = (9,4) algebra only");
    const auto& grid = name_grid_9_4();
    std::vector<std::pair<std::string, Interval>> table;
    for (int len = 1; len <= 4; ++len) {
        const auto& row = grid[len - 1];
        int row_start = a.n - len + 1;
        if (static_cast<int>(row.size()) != row_start)
            throw std::logic_error("name grid row has the wrong width");
        for (int p = 0; p < static_cast<int>(row.size()); ++p)
            table.emplace_back(row[p], Interval{row_start - p, len});
    }

    // validation of the derived assignment against structural facts:
    // the regular module consists of M^1_1, M^2_1, M^3_1 and the P_i,
    // and the mesh source/sink carry M^1_1 / M^6_1
    std::map<std::string, Interval> by_name(table.begin(), table.end());
    for (const auto& nm : {"M^1_1", "M^2_1", "M^3_1", "P_1", "P_2", "P_3", "P_4", "P_5", "P_6"})
        if (!is_projective(a, by_name.at(nm)))
            throw std::logic_error("derived dictionary: regular-module name is not projective");
    int proj_count = 0;
    for (auto& [nm, iv] : table)
        if (is_projective(a, iv)) ++proj_count;
    if (proj_count != a.n) throw std::logic_error("derived dictionary: projective count mismatch");
    if (!(by_name.at("M^1_1") == Interval{a.n, 1}))
        throw std::logic_error("derived dictionary: mesh source mismatch");
    if (!(by_name.at("M^6_1") == Interval{1, 1}))
        throw std::logic_error("derived dictionary: mesh sink mismatch");
    return table;
}

Interval resolve_label(const AlgebraContext& ctx, const std::string& s) {
    if (!s.empty() && s[0] == '(') {
        Interval iv = parse_interval_label(s);
        if (ctx.index_of(iv) < 0)
            throw std::invalid_argument("unknown indecomposable " + s);
        return iv;
    }
    const NakayamaAlgebra& a = ctx.alg();
    if (a.n == 9 && a.m == 4) {
        for (auto& [nm, iv] : derived_label_table(a))
            if (nm == s) return iv;
    }
    throw std::invalid_argument("unknown label " + s +
                                " (mesh names are available for n=9, m=4 only)");
}

std::string display_label(const AlgebraContext& ctx, int index) {
    const NakayamaAlgebra& a = ctx.alg();
    Interval iv = ctx.interval(index);
    if (a.n == 9 && a.m == 4) {
        for (auto& [nm, cand] : derived_label_table(a))
            if (cand == iv) return nm;
    }
    return interval_label(iv);
}

} // namespace modcat
