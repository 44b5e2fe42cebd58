#pragma once

// OEIS b-file comparison: a b-file is a plain text listing with one
// "index value" pair per line and '#' comments. Series come from the CLI's
// CSV output (first two numeric columns of each row).

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orbitwords/word.hpp"

namespace orbitwords {

struct SeriesPoint {
    long long index = 0;
    long long value = 0;
};

struct SeriesParseError : std::runtime_error {
    int line;
    SeriesParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

inline std::vector<SeriesPoint> parse_bfile(std::string_view text) {
    std::vector<SeriesPoint> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        bool blank = true;
        for (char c : raw) blank = blank && (c == ' ' || c == '\t' || c == '\r');
        if (blank) continue;
        std::istringstream ls(raw);
        long long idx, val;
        if (!(ls >> idx) || !(ls >> val)) throw SeriesParseError(lineno, "expected 'index value'");
        std::string extra;
        if (ls >> extra) throw SeriesParseError(lineno, "trailing content '" + extra + "'");
        out.push_back({idx, val});
    }
    return out;
}

/// CSV rows whose first two columns are numeric; a non-numeric header row
/// is skipped.
inline std::vector<SeriesPoint> parse_series_csv(std::string_view text) {
    std::vector<SeriesPoint> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (raw.empty()) continue;
        std::istringstream ls(raw);
        std::string c0, c1;
        if (!std::getline(ls, c0, ',')) continue;
        if (!std::getline(ls, c1, ',')) c1 = "";
        try {
            long long idx = std::stoll(c0);
            long long val = std::stoll(c1);
            out.push_back({idx, val});
        } catch (const std::exception&) {
            if (lineno == 1) continue;  // header
            throw SeriesParseError(lineno, "expected two numeric columns");
        }
    }
    return out;
}

struct OeisCompareReport {
    bool comparable = false;  // nonempty overlap
    bool agree = false;
    long long overlap_lo = 0;
    long long overlap_hi = 0;
    std::size_t compared = 0;
    // First disagreement: (series index, series value, b-file value).
    std::optional<SeriesPoint> mismatch_series;
    std::optional<long long> mismatch_bvalue;
};

/// Aligns series index i with b-file index i + offset and compares values
/// over the overlap.
inline OeisCompareReport oeis_compare(const std::vector<SeriesPoint>& series,
                                      const std::vector<SeriesPoint>& bfile, long long offset) {
    OeisCompareReport rep;
    std::map<long long, long long> bmap;
    for (const SeriesPoint& p : bfile) bmap[p.index] = p.value;
    bool first = true;
    for (const SeriesPoint& p : series) {
        auto it = bmap.find(p.index + offset);
        if (it == bmap.end()) continue;
        if (first) {
            rep.overlap_lo = rep.overlap_hi = p.index;
            first = false;
        } else {
            rep.overlap_lo = std::min(rep.overlap_lo, p.index);
            rep.overlap_hi = std::max(rep.overlap_hi, p.index);
        }
        ++rep.compared;
        if (p.value != it->second && !rep.mismatch_series) {
            rep.mismatch_series = p;
            rep.mismatch_bvalue = it->second;
        }
    }
    rep.comparable = rep.compared > 0;
    rep.agree = rep.comparable && !rep.mismatch_series;
    return rep;
}

}  // namespace orbitwords
