#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "landau/harmonic_map.hpp"

namespace landau {

// Line-oriented mapping-file format:
//
//   harmonic-map v1 N=<int>
//   a <n> <re> <im>
//   b <n> <re> <im>
//
// Only nonzero coefficients are listed. Blank lines and lines starting with
// '#' are ignored after the header.

namespace detail {

inline std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline HarmonicMap read_mapping(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long degree = -1;

    while (std::getline(in, line)) {
        ++lineno;
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        std::istringstream ss(t);
        std::string magic, version, nfield, extra;
        ss >> magic >> version >> nfield;
        if (magic != "harmonic-map" || version != "v1" || nfield.rfind("N=", 0) != 0 || (ss >> extra)) {
            throw parse_error(lineno, "expected header 'harmonic-map v1 N=<int>'");
        }
        try {
            std::size_t used = 0;
            degree = std::stol(nfield.substr(2), &used);
            if (used != nfield.size() - 2) {
                degree = -1;
            }
        } catch (const std::exception&) {
            degree = -1;
        }
        if (degree < 0) {
            throw parse_error(lineno, "truncation degree must be a non-negative integer");
        }
        break;
    }
    if (degree < 0) {
        throw parse_error(lineno, "missing header");
    }

    PowerSeries h(static_cast<std::size_t>(degree));
    PowerSeries g(static_cast<std::size_t>(degree));
    std::set<std::pair<char, long>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        std::istringstream ss(t);
        std::string letter, extra;
        long n = -1;
        double re = 0.0, im = 0.0;
        if (!(ss >> letter >> n >> re >> im) || (ss >> extra)) {
            throw parse_error(lineno, "expected '<a|b> <n> <re> <im>'");
        }
        if (letter != "a" && letter != "b") {
            throw parse_error(lineno, "coefficient letter must be 'a' or 'b'");
        }
        if (n < 0 || n > degree) {
            throw parse_error(lineno, "index " + std::to_string(n) + " outside 0..N");
        }
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw parse_error(lineno, "non-finite coefficient");
        }
        if (!seen.emplace(letter[0], n).second) {
            throw parse_error(lineno, "duplicate coefficient " + letter + " " + std::to_string(n));
        }
        (letter == "a" ? h : g)[static_cast<std::size_t>(n)] = Complex{re, im};
    }
    return HarmonicMap(std::move(h), std::move(g));
}

inline HarmonicMap read_mapping_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    auto f = read_mapping(in);
    f.set_label(path);
    return f;
}

inline void write_mapping(std::ostream& out, const HarmonicMap& f) {
    out << "harmonic-map v1 N=" << f.degree() << '\n';
    if (!f.label().empty()) {
        out << "# " << f.label() << '\n';
    }
    auto emit = [&](char letter, const PowerSeries& s) {
        for (std::size_t n = 0; n < s.size(); ++n) {
            if (s[n] != Complex{}) {
                out << letter << ' ' << n << ' ' << detail::format_real(s[n].real()) << ' '
                    << detail::format_real(s[n].imag()) << '\n';
            }
        }
    };
    emit('a', f.h());
    emit('b', f.g());
}

inline std::string to_mapping_string(const HarmonicMap& f) {
    std::ostringstream out;
    write_mapping(out, f);
    return out.str();
}

}  // namespace landau
