#pragma once

#include "morsecat/complex.hpp"
#include "morsecat/morse.hpp"
#include "morsecat/strong.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace morsecat {

// External vertex names; ids are positions in sorted name order (numeric
// when every name is an integer, lexicographic otherwise).
struct NameTable {
    std::vector<std::string> names; // id -> name
    std::map<std::string, VertexId> ids;

    const std::string& name(VertexId v) const;
    VertexId id(const std::string& name) const;
    static NameTable build(std::vector<std::string> all_names);
};

struct NamedComplex {
    SimplicialComplex complex;
    NameTable names;
};

// one facet per line, whitespace-separated names, '#' lines are comments
NamedComplex parse_complex_text(std::string_view text,
                                const std::string& origin = "<input>");
NamedComplex parse_complex_file(const std::filesystem::path& path);
std::string serialize_complex(const NamedComplex& nc);

// "a,b,c": external names in id order, comma-joined
std::string simplex_key(const Simplex& s, const NameTable& names);
Simplex parse_simplex_key(const std::string& key, const NameTable& names);

// JSON object mapping simplex keys to "p/q" strings or integers
std::map<Simplex, Rat> parse_morse_values_text(std::string_view text,
                                               const NamedComplex& nc,
                                               const std::string& origin);
std::map<Simplex, Rat>
parse_morse_values_file(const std::filesystem::path& path,
                        const NamedComplex& nc);
// parse + validate, throwing a diagnostic on any rule violation
MorseFunction parse_morse_file(const std::filesystem::path& path,
                               const NamedComplex& nc);
std::string serialize_morse(const MorseFunction& f, const NameTable& names);

// Hasse diagram; gradient pairs drawn as reversed arcs, critical objects
// highlighted, when a scrit report is supplied
std::string export_dot(const NamedComplex& nc, const MorseFunction* f,
                       const ScritReport* rep);

std::string file_digest(const std::filesystem::path& path); // FNV-1a 64, hex
std::string read_file(const std::filesystem::path& path);

} // namespace morsecat
