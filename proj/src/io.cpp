#include "morsecat/io.hpp"

#include "morsecat/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace morsecat {

namespace {

bool all_numeric(const std::vector<std::string>& names) {
    for (const std::string& n : names) {
        if (n.empty())
            return false;
        std::size_t start = n[0] == '-' ? 1 : 0;
        if (start == n.size())
            return false;
        for (std::size_t i = start; i < n.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(n[i])))
                return false;
    }
    return true;
}

long long numeric_value(const std::string& n) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), v);
    if (ec != std::errc() || ptr != n.data() + n.size())
        throw DomainError("vertex name overflows numeric ordering: " + n);
    return v;
}

} // namespace

const std::string& NameTable::name(VertexId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= names.size())
        throw DomainError("unknown vertex id " + std::to_string(v));
    return names[static_cast<std::size_t>(v)];
}

VertexId NameTable::id(const std::string& name) const {
    auto it = ids.find(name);
    if (it == ids.end())
        throw DomainError("unknown vertex '" + name + "'");
    return it->second;
}

NameTable NameTable::build(std::vector<std::string> all_names) {
    std::sort(all_names.begin(), all_names.end());
    all_names.erase(std::unique(all_names.begin(), all_names.end()),
                    all_names.end());
    if (all_numeric(all_names))
        std::sort(all_names.begin(), all_names.end(),
                  [](const std::string& a, const std::string& b) {
                      return numeric_value(a) < numeric_value(b);
                  });
    NameTable t;
    t.names = std::move(all_names);
    for (std::size_t i = 0; i < t.names.size(); ++i)
        t.ids[t.names[i]] = static_cast<VertexId>(i);
    return t;
}

NamedComplex parse_complex_text(std::string_view text,
                                const std::string& origin) {
    std::vector<std::vector<std::string>> facet_names;
    std::vector<int> facet_lines;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#')
            continue;
        auto sorted = tokens;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DomainError(origin + ": duplicate vertex, line " +
                              std::to_string(lineno));
        facet_names.push_back(std::move(tokens));
        facet_lines.push_back(lineno);
    }
    if (facet_names.empty())
        throw DomainError(origin + ": no facets found");

    std::vector<std::string> all;
    for (const auto& f : facet_names)
        all.insert(all.end(), f.begin(), f.end());
    NameTable table = NameTable::build(std::move(all));

    std::vector<std::vector<VertexId>> facets;
    for (const auto& f : facet_names) {
        std::vector<VertexId> ids;
        ids.reserve(f.size());
        for (const std::string& n : f)
            ids.push_back(table.id(n));
        facets.push_back(std::move(ids));
    }
    return {SimplicialComplex::from_vertex_lists(facets), std::move(table)};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot read file: " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

NamedComplex parse_complex_file(const std::filesystem::path& path) {
    return parse_complex_text(read_file(path), path.string());
}

std::string serialize_complex(const NamedComplex& nc) {
    std::string out;
    for (const Simplex& f : nc.complex.facets()) {
        for (std::size_t i = 0; i < f.vertices().size(); ++i) {
            if (i)
                out += ' ';
            out += nc.names.name(f.vertices()[i]);
        }
        out += '\n';
    }
    return out;
}

std::string simplex_key(const Simplex& s, const NameTable& names) {
    std::string out;
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
        if (i)
            out += ',';
        out += names.name(s.vertices()[i]);
    }
    return out;
}

Simplex parse_simplex_key(const std::string& key, const NameTable& names) {
    std::vector<VertexId> ids;
    std::size_t start = 0;
    while (start <= key.size()) {
        std::size_t comma = key.find(',', start);
        std::string part = key.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        if (part.empty())
            throw DomainError("malformed simplex key '" + key + "'");
        ids.push_back(names.id(part));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (ids.empty())
        throw DomainError("malformed simplex key '" + key + "'");
    return Simplex(std::move(ids));
}

std::map<Simplex, Rat> parse_morse_values_text(std::string_view text,
                                               const NamedComplex& nc,
                                               const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(origin + ": " + e.what());
    }
    if (!doc.is_object())
        throw DomainError(origin + ": expected an object of simplex values");

    std::map<Simplex, Rat> values;
    for (const auto& [key, val] : doc.items()) {
        Simplex s = parse_simplex_key(key, nc.names);
        Rat r;
        if (val.is_number_integer())
            r = Rat(val.get<long long>());
        else if (val.is_string())
            r = parse_rational(val.get<std::string>());
        else if (val.is_number_float())
            throw DomainError(origin + ": value for '" + key +
                              "' is a float; use \"p/q\" or an integer");
        else
            throw DomainError(origin + ": value for '" + key +
                              "' must be \"p/q\" or an integer");
        if (!nc.complex.contains(s))
            throw DomainError(origin + ": unknown simplex: " + key);
        if (!values.emplace(s, r).second)
            throw DomainError(origin + ": duplicate simplex: " + key);
    }
    for (const Simplex& s : nc.complex.simplices())
        if (!values.count(s))
            throw DomainError(origin + ": missing simplex value: " +
                              simplex_key(s, nc.names));
    return values;
}

std::map<Simplex, Rat>
parse_morse_values_file(const std::filesystem::path& path,
                        const NamedComplex& nc) {
    return parse_morse_values_text(read_file(path), nc, path.string());
}

MorseFunction parse_morse_file(const std::filesystem::path& path,
                               const NamedComplex& nc) {
    auto raw = parse_morse_values_file(path, nc);
    ValidationResult res = validate_dmf(nc.complex, raw);
    if (!res.ok()) {
        std::string msg = path.string() + ": not a discrete Morse function:";
        for (const MorseViolation& v : res.violations) {
            msg += " [" + v.rule + " at " + simplex_key(v.simplex, nc.names) +
                   "]";
        }
        throw DomainError(msg);
    }
    return *res.function;
}

std::string serialize_morse(const MorseFunction& f, const NameTable& names) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [s, val] : f.values())
        doc[simplex_key(s, names)] = rat_str(val);
    return doc.dump(2) + "\n";
}

namespace {

std::string dot_id(const Simplex& s, const NameTable& names) {
    std::string out = "\"";
    out += simplex_key(s, names);
    out += "\"";
    return out;
}

} // namespace

std::string export_dot(const NamedComplex& nc, const MorseFunction* f,
                       const ScritReport* rep) {
    const SimplicialComplex& K = nc.complex;
    std::ostringstream os;
    os << "digraph hasse {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box, fontsize=10];\n";

    std::set<Simplex> crit_simplices;
    std::set<GradientPair> crit_pairs;
    if (rep) {
        crit_simplices = rep->critical_simplices;
        crit_pairs.insert(rep->critical_pairs.begin(),
                          rep->critical_pairs.end());
    }

    int maxdim = K.dim();
    for (int d = 0; d <= maxdim; ++d) {
        os << "  { rank=same;";
        for (const Simplex& s : K.simplices())
            if (s.dim() == d)
                os << " " << dot_id(s, nc.names) << ";";
        os << " }\n";
    }
    for (const Simplex& s : K.simplices()) {
        os << "  " << dot_id(s, nc.names) << " [label=\""
           << simplex_key(s, nc.names);
        if (f)
            os << "\\n" << rat_str(f->at(s));
        os << "\"";
        if (crit_simplices.count(s))
            os << ", color=red, penwidth=2";
        os << "];\n";
    }
    for (const Simplex& t : K.simplices()) {
        for (const Simplex& s : t.boundary()) {
            if (!K.contains(s))
                continue;
            bool matched = rep && rep->field.has_pair(s, t);
            if (matched) {
                bool critical = crit_pairs.count({s, t}) > 0;
                os << "  " << dot_id(s, nc.names) << " -> "
                   << dot_id(t, nc.names) << " [color="
                   << (critical ? "crimson" : "blue")
                   << ", penwidth=2];\n";
            } else {
                os << "  " << dot_id(t, nc.names) << " -> "
                   << dot_id(s, nc.names) << " [arrowsize=0.5];\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

std::string file_digest(const std::filesystem::path& path) {
    std::string data = read_file(path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace morsecat
