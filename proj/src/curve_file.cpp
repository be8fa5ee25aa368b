#include "hc/curve_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "hc/error.hpp"
#include "hc/text.hpp"
#include "hc/tower.hpp"

namespace hc {

namespace {

struct Entry {
    std::string value;
    SourcePos pos;
};

[[noreturn]] void fail(SourcePos pos, const std::string& msg) {
    throw input_error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + msg);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

unsigned long parse_count(const Entry& e, const char* what) {
    if (e.value.empty() || e.value.find_first_not_of("0123456789") != std::string::npos || e.value.size() > 12)
        fail(e.pos, std::string("expected a positive integer for ") + what);
    unsigned long v = std::stoul(e.value);
    if (v == 0) fail(e.pos, std::string("expected a positive integer for ") + what);
    return v;
}

}  // namespace

CurveFile parse_curve_file(std::string_view text) {
    std::map<std::string, Entry> entries;
    std::map<unsigned, Entry> components;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        std::size_t i = 0;
        while (i < line.size() && is_space(line[i])) ++i;
        if (i == line.size() || line[i] == '#') continue;
        std::size_t key_start = i;
        while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
        std::string key(line.substr(key_start, i - key_start));
        if (key.empty()) fail({line_no, static_cast<int>(key_start) + 1}, "expected a key");
        while (i < line.size() && is_space(line[i])) ++i;
        if (i == line.size() || line[i] != '=') fail({line_no, static_cast<int>(i) + 1}, "expected '='");
        ++i;
        while (i < line.size() && is_space(line[i])) ++i;
        Entry e;
        if (i < line.size() && line[i] == '"') {
            std::size_t close = line.find('"', i + 1);
            if (close == std::string_view::npos) fail({line_no, static_cast<int>(i) + 1}, "unterminated string");
            e.value = std::string(line.substr(i + 1, close - i - 1));
            e.pos = {line_no, static_cast<int>(i) + 2};
            i = close + 1;
        } else {
            std::size_t v = i;
            while (i < line.size() && !is_space(line[i]) && line[i] != '#') ++i;
            e.value = std::string(line.substr(v, i - v));
            e.pos = {line_no, static_cast<int>(v) + 1};
        }
        while (i < line.size() && is_space(line[i])) ++i;
        if (i < line.size() && line[i] != '#') fail({line_no, static_cast<int>(i) + 1}, "unexpected text after value");

        SourcePos key_pos{line_no, static_cast<int>(key_start) + 1};
        if (key.size() > 1 && key[0] == 'x' && key.find_first_not_of("0123456789", 1) == std::string::npos) {
            unsigned idx = static_cast<unsigned>(std::stoul(key.substr(1)));
            if (idx == 0 || !components.emplace(idx, e).second) fail(key_pos, "invalid or repeated component " + key);
        } else if (key == "minpoly" || key == "base" || key == "budget" || key == "primitive_cap") {
            if (!entries.emplace(key, e).second) fail(key_pos, "repeated key " + key);
        } else {
            fail(key_pos, "unknown key " + key);
        }
    }

    CurveFile out;
    std::map<std::string, FieldElement> constants;
    if (auto it = entries.find("base"); it != entries.end()) {
        UPoly m = parse_upoly(it->second.value, "x", {}, it->second.pos);
        out.base = make_extension(nullptr, m.coeffs(), "g");
        constants["g"] = FieldElement::generator(out.base);
    }
    auto mp = entries.find("minpoly");
    if (mp == entries.end()) throw input_error("missing key minpoly");
    UPoly m = parse_upoly(mp->second.value, "x", constants, mp->second.pos);
    out.field = make_extension(out.base, m.coeffs(), "a");
    constants["a"] = FieldElement::generator(out.field);

    if (components.empty()) throw input_error("no components x1, x2, ...");
    unsigned expect = 1;
    for (const auto& [idx, e] : components) {
        if (idx != expect++) throw input_error("components must be numbered x1, x2, ... without gaps");
        out.components.push_back(parse_ratfunc(e.value, "t", constants, e.pos));
    }
    out.phi = Parametrization::from_components(out.components);
    if (auto it = entries.find("budget"); it != entries.end()) out.budget = parse_count(it->second, "budget");
    if (auto it = entries.find("primitive_cap"); it != entries.end())
        out.primitive_cap = static_cast<unsigned>(parse_count(it->second, "primitive_cap"));
    return out;
}

CurveFile load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_curve_file(ss.str());
}

}  // namespace hc
