#include "modcat/algebra.hpp"

#include <cstdio>

namespace modcat {

std::string interval_label(const Interval& iv) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "(%d,%d)", iv.top, iv.len);
    return buf;
}

Interval parse_interval_label(const std::string& s) {
    int t = 0, l = 0;
    if (std::sscanf(s.c_str(), " ( %d , %d )", &t, &l) != 2)
        throw std::invalid_argument("bad interval label: " + s);
    return Interval{t, l};
}

std::string module_label(const ModuleObj& m) {
    if (m.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < m.parts.size(); ++i) {
        if (i) out += "+";
        out += interval_label(m.parts[i]);
    }
    return out;
}

} // namespace modcat
