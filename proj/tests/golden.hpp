#pragma once

#include "catwb/polyparse.hpp"
#include "catwb/rootdata.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

inline std::string golden_text(const std::string& name)
{
    std::ifstream in(std::string(CATWB_SOURCE_DIR) + "/tests/golden/" + name);
    if (!in) throw std::runtime_error("missing golden file " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline catwb::MPoly golden_poly(const std::string& name, const std::map<char, catwb::Rational>& b = {})
{
    return catwb::parse_mpoly(golden_text(name), b);
}

// Rows of a '|'-separated golden table.
inline std::vector<std::vector<std::string>> golden_rows(const std::string& name)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(golden_text(name));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, '|')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

// "I2(a)" -> "I2(5)" for a = 5
inline std::string golden_subst_a(std::string s, int a)
{
    for (size_t p; (p = s.find("(a)")) != std::string::npos;) s.replace(p, 3, "(" + std::to_string(a) + ")");
    return s;
}

// "A1^2;A1" -> [A1xA1, A1]; "\emptyset" -> []
inline std::vector<catwb::RootSystemType> golden_tuple(const std::string& s)
{
    std::vector<catwb::RootSystemType> out;
    if (s == "\\emptyset") return out;
    size_t start = 0;
    for (;;) {
        size_t p = s.find(';', start);
        out.push_back(catwb::RootSystemType::parse(s.substr(start, p - start)));
        if (p == std::string::npos) break;
        start = p + 1;
    }
    return out;
}
