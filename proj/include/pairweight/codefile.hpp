#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pairweight/code.hpp"
#include "pairweight/errors.hpp"
#include "pairweight/iso.hpp"

namespace pairweight {

// Text format for a code:
//
//   # comment lines start with '#', blank lines are ignored
//   q <int> [poly c0 c1 ... ce]
//   n <int>
//   k <int>
//   <k rows of n whitespace-separated integers in [0, q)>
//
// Field elements are integer codes (base-p digits for extension fields), so
// files mean exactly the same thing everywhere. The poly clause is allowed
// only for proper prime powers; without it the built-in modulus is used.
// An isomorphism file holds two such blocks separated by a line that is
// exactly "---"; row i of the second block is the image of row i of the
// first.

namespace detail {

struct Line {
    int number = 0;
    std::string text;
};

inline std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t first = raw.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (raw[first] == '#') continue;
        out.push_back({number, raw});
    }
    return out;
}

inline long long parse_int(const std::string& token, int line_no, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw parse_error(line_no, "expected an integer for " + what + ", got '" + token + "'");
    }
}

inline LinearCode parse_block(const std::vector<Line>& lines, size_t begin, size_t end) {
    size_t at = begin;
    auto need = [&](const std::string& what) -> const Line& {
        if (at >= end) {
            int line_no = at > begin ? lines[at - 1].number : (lines.empty() ? 1 : lines.back().number);
            throw parse_error(line_no, "unexpected end of input, expected " + what);
        }
        return lines[at];
    };

    // q line, with optional modulus
    const Line& q_line = need("'q <int>'");
    std::istringstream qs(q_line.text);
    std::string key;
    qs >> key;
    if (key != "q") throw parse_error(q_line.number, "expected 'q <int>', got '" + q_line.text + "'");
    std::string tok;
    if (!(qs >> tok)) throw parse_error(q_line.number, "missing value after 'q'");
    long long q = parse_int(tok, q_line.number, "q");
    std::optional<std::vector<int>> modulus;
    if (qs >> tok) {
        if (tok != "poly")
            throw parse_error(q_line.number, "unexpected token '" + tok + "' after q (only 'poly' is allowed)");
        std::vector<int> coeffs;
        while (qs >> tok) coeffs.push_back(static_cast<int>(parse_int(tok, q_line.number, "poly coefficient")));
        if (coeffs.empty()) throw parse_error(q_line.number, "'poly' without coefficients");
        modulus = std::move(coeffs);
    }
    ++at;

    auto scalar_line = [&](const std::string& name) -> long long {
        const Line& l = need("'" + name + " <int>'");
        std::istringstream ls(l.text);
        std::string k2, v, extra;
        ls >> k2;
        if (k2 != name) throw parse_error(l.number, "expected '" + name + " <int>', got '" + l.text + "'");
        if (!(ls >> v)) throw parse_error(l.number, "missing value after '" + name + "'");
        if (ls >> extra) throw parse_error(l.number, "trailing token '" + extra + "'");
        ++at;
        return parse_int(v, l.number, name);
    };
    long long n = scalar_line("n");
    long long k = scalar_line("k");
    if (n < 2) throw parse_error(lines[at - 2].number, "code length must be at least 2");
    if (k < 1 || k > n) throw parse_error(lines[at - 1].number, "need 1 <= k <= n");

    Field field = [&] {
        try {
            return Field::from_order(q, std::move(modulus));
        } catch (const std::invalid_argument& e) {
            throw parse_error(q_line.number, e.what());
        }
    }();

    FqMatrix gen(static_cast<int>(k), static_cast<int>(n));
    for (int r = 0; r < k; ++r) {
        const Line& l = need("a generator row (" + std::to_string(k) + " expected)");
        std::istringstream ls(l.text);
        std::string t;
        for (int c = 0; c < n; ++c) {
            if (!(ls >> t)) throw parse_error(l.number, "row has fewer than n = " + std::to_string(n) + " entries");
            long long v = parse_int(t, l.number, "matrix entry");
            if (v < 0 || v >= q)
                throw parse_error(l.number, "entry " + std::to_string(v) + " out of range [0, " + std::to_string(q) + ")");
            gen.at(r, static_cast<int>(c)) = static_cast<int>(v);
        }
        if (ls >> t) throw parse_error(l.number, "row has more than n = " + std::to_string(n) + " entries");
        ++at;
    }
    if (at != end) throw parse_error(lines[at].number, "unexpected extra line '" + lines[at].text + "'");

    try {
        return make_code(field, std::move(gen));
    } catch (const std::invalid_argument& e) {
        throw parse_error(lines[begin].number, e.what());
    }
}

}  // namespace detail

inline LinearCode parse_code_file(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw parse_error(1, "empty code file");
    for (const auto& l : lines)
        if (l.text == "---") throw parse_error(l.number, "'---' separator is only valid in an isomorphism file");
    return detail::parse_block(lines, 0, lines.size());
}

inline IsoPair parse_iso_file(const std::string& text) {
    auto lines = detail::content_lines(text);
    size_t sep = lines.size();
    for (size_t i = 0; i < lines.size(); ++i)
        if (lines[i].text == "---") {
            sep = i;
            break;
        }
    if (sep == lines.size()) throw parse_error(1, "isomorphism file needs a '---' separator line");
    for (size_t i = sep + 1; i < lines.size(); ++i)
        if (lines[i].text == "---") throw parse_error(lines[i].number, "more than one '---' separator");
    LinearCode source = detail::parse_block(lines, 0, sep);
    LinearCode target = detail::parse_block(lines, sep + 1, lines.size());
    try {
        return make_iso_pair(std::move(source), std::move(target));
    } catch (const std::invalid_argument& e) {
        throw parse_error(lines[sep].number, e.what());
    }
}

inline std::string format_code_file(const LinearCode& c) {
    std::ostringstream out;
    out << "q " << c.field.q();
    if (c.field.e() > 1) {
        out << " poly";
        for (int coef : c.field.modulus()) out << ' ' << coef;
    }
    out << "\n";
    out << "n " << c.n << "\n";
    out << "k " << c.k << "\n";
    for (int r = 0; r < c.k; ++r) {
        for (int j = 0; j < c.n; ++j) {
            if (j) out << ' ';
            out << c.gen.at(r, j);
        }
        out << "\n";
    }
    return out.str();
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline LinearCode load_code_file(const std::string& path) { return parse_code_file(read_text_file(path)); }

inline IsoPair load_iso_file(const std::string& path) { return parse_iso_file(read_text_file(path)); }

}  // namespace pairweight
