#pragma once

// Plain-text configuration: named generator recipes, named action pairs,
// and suite parameters. Sections are "[generator NAME]", "[action NAME]"
// and "[suite]"; bodies are "key = value" lines; '#' starts a comment.
//
//   [generator myword]
//   type = fixed-point            # fixed-point | morphic-image | periodic | sturmian
//   alphabet = 3
//   rules = 0 -> 012 ; 1 -> 02 ; 2 -> 1
//   seed = 0
//
//   [action swap]
//   alphabet = 3
//   g = (0 2)                     # comma-separated generator list, empty = trivial
//   h = trivial                   # family name, or generated@N (cycles)
//
//   [suite]
//   lmax = 64
//   prefix = 20000

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orbitwords/action.hpp"
#include "orbitwords/generator.hpp"
#include "orbitwords/group.hpp"

namespace orbitwords {

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& msg)
        : std::runtime_error("config line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct GeneratorDef {
    std::string name;
    std::string type;        // fixed-point | morphic-image | periodic | sturmian
    std::string inner_name;  // morphic-image only
    GeneratorSpec spec;
};

struct ActionDef {
    std::string name;
    Alphabet alphabet;
    AlphabetGroup group;
    PositionFamily family;
};

struct SuiteParams {
    std::size_t lmax = 64;
    std::size_t prefix = 20000;
};

struct Config {
    std::vector<GeneratorDef> generators;
    std::vector<ActionDef> actions;
    SuiteParams suite;
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

inline Morphism parse_rules(Alphabet source, Alphabet target, const std::string& text, int line) {
    std::vector<std::string> images(source.size());
    std::vector<bool> have(source.size(), false);
    for (const std::string& rule : split(text, ';')) {
        if (rule.empty()) continue;
        std::size_t arrow = rule.find("->");
        if (arrow == std::string::npos) throw ConfigError(line, "rule '" + rule + "' needs '->'");
        std::string lhs = trim(rule.substr(0, arrow));
        std::string rhs = trim(rule.substr(arrow + 2));
        if (lhs.size() != 1) throw ConfigError(line, "rule left side must be one letter");
        int a = char_to_letter(lhs[0]);
        if (a < 0 || a >= source.size()) throw ConfigError(line, "rule letter outside alphabet");
        if (have[a]) throw ConfigError(line, "duplicate rule for letter " + lhs);
        have[a] = true;
        images[a] = rhs;
    }
    for (int a = 0; a < source.size(); ++a) {
        if (!have[a]) throw ConfigError(line, "missing rule for letter " + std::string(1, letter_to_char(a)));
    }
    try {
        return Morphism::from_rules(source, target, images);
    } catch (const std::exception& e) {
        throw ConfigError(line, e.what());
    }
}

struct RawSection {
    std::string kind;  // generator | action | suite
    std::string name;
    int line = 0;
    std::vector<std::pair<std::string, std::string>> entries;
    std::map<std::string, std::pair<std::string, int>> by_key;

    std::optional<std::string> get(const std::string& key) const {
        auto it = by_key.find(key);
        if (it == by_key.end()) return std::nullopt;
        return it->second.first;
    }
    std::string require(const std::string& key) const {
        auto v = get(key);
        if (!v) throw ConfigError(line, "section [" + kind + " " + name + "] missing key '" + key + "'");
        return *v;
    }
    int key_line(const std::string& key) const {
        auto it = by_key.find(key);
        return it == by_key.end() ? line : it->second.second;
    }
};

}  // namespace detail

/// Builtin action templates instantiated for a word's alphabet.
inline ActionPair builtin_action(const std::string& name, Alphabet a) {
    if (name == "plain") return {AlphabetGroup::trivial(a), PositionFamily::trivial()};
    if (name == "abelian") return {AlphabetGroup::trivial(a), PositionFamily::full_symmetric()};
    if (name == "sym-abelian") return {AlphabetGroup::symmetric(a), PositionFamily::full_symmetric()};
    if (name == "caesar") return {AlphabetGroup::cyclic(a), PositionFamily::trivial()};
    if (name == "rotation") return {AlphabetGroup::trivial(a), PositionFamily::rotation()};
    if (name == "reflection") return {AlphabetGroup::trivial(a), PositionFamily::reversal()};
    if (name == "first-last") return {AlphabetGroup::trivial(a), PositionFamily::first_last_swap()};
    if (name == "swap02") {
        if (a.size() < 3) throw std::invalid_argument("swap02 needs an alphabet with letter 2");
        return {AlphabetGroup::transposition(a, 0, 2), PositionFamily::trivial()};
    }
    throw std::invalid_argument("unknown action '" + name + "'");
}

inline const std::vector<std::string>& builtin_action_names() {
    static const std::vector<std::string> names = {"plain",    "abelian",    "sym-abelian", "caesar",
                                                   "rotation", "reflection", "first-last",  "swap02"};
    return names;
}

inline Config parse_config(std::string_view text) {
    std::vector<detail::RawSection> sections;
    int lineno = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(lineno, "unterminated section header");
            std::string inner = detail::trim(line.substr(1, line.size() - 2));
            std::size_t sp = inner.find(' ');
            detail::RawSection sec;
            sec.kind = sp == std::string::npos ? inner : detail::trim(inner.substr(0, sp));
            sec.name = sp == std::string::npos ? "" : detail::trim(inner.substr(sp + 1));
            sec.line = lineno;
            if (sec.kind != "generator" && sec.kind != "action" && sec.kind != "suite") {
                throw ConfigError(lineno, "unknown section kind '" + sec.kind + "'");
            }
            if (sec.kind != "suite" && sec.name.empty()) {
                throw ConfigError(lineno, "section [" + sec.kind + "] needs a name");
            }
            sections.push_back(std::move(sec));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(lineno, "expected 'key = value'");
        if (sections.empty()) throw ConfigError(lineno, "key outside any section");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(lineno, "empty key");
        auto& sec = sections.back();
        if (sec.by_key.count(key)) throw ConfigError(lineno, "duplicate key '" + key + "'");
        sec.entries.emplace_back(key, value);
        sec.by_key[key] = {value, lineno};
    }

    Config cfg;
    auto parse_size = [](const detail::RawSection& sec, const std::string& key, const std::string& v) {
        try {
            long long n = std::stoll(v);
            if (n < 1) throw std::invalid_argument("must be positive");
            return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
            throw ConfigError(sec.key_line(key), "bad integer for '" + key + "': " + v);
        }
    };

    // Generators may reference earlier generators (or builtins) by name.
    auto resolve_inner = [&](const std::string& name, int line) -> GeneratorSpec {
        for (const GeneratorDef& d : cfg.generators) {
            if (d.name == name) return d.spec;
        }
        for (const auto& [bname, spec] : builtin_generators()) {
            if (bname == name) return spec;
        }
        throw ConfigError(line, "unknown inner generator '" + name + "'");
    };

    for (const auto& sec : sections) {
        if (sec.kind == "generator") {
            for (const GeneratorDef& d : cfg.generators) {
                if (d.name == sec.name) throw ConfigError(sec.line, "duplicate generator name '" + sec.name + "'");
            }
            std::string type = sec.require("type");
            try {
                if (type == "fixed-point") {
                    Alphabet a(static_cast<int>(parse_size(sec, "alphabet", sec.require("alphabet"))));
                    Morphism m = detail::parse_rules(a, a, sec.require("rules"), sec.key_line("rules"));
                    std::string seed = sec.require("seed");
                    int s = seed.size() == 1 ? char_to_letter(seed[0]) : -1;
                    if (s < 0 || s >= a.size()) throw ConfigError(sec.key_line("seed"), "bad seed letter");
                    cfg.generators.push_back(
                        {sec.name, type, "", GeneratorSpec::fixed_point(std::move(m), static_cast<Letter>(s))});
                } else if (type == "morphic-image") {
                    std::string inner = sec.require("inner");
                    GeneratorSpec inner_spec = resolve_inner(inner, sec.key_line("inner"));
                    Alphabet target(static_cast<int>(parse_size(sec, "alphabet", sec.require("alphabet"))));
                    Morphism m = detail::parse_rules(inner_spec.alphabet(), target, sec.require("rules"),
                                                     sec.key_line("rules"));
                    cfg.generators.push_back(
                        {sec.name, type, inner, GeneratorSpec::morphic_image(inner_spec, std::move(m))});
                } else if (type == "periodic") {
                    Alphabet a(static_cast<int>(parse_size(sec, "alphabet", sec.require("alphabet"))));
                    FiniteWord pat = FiniteWord::from_digits(a, sec.require("pattern"));
                    cfg.generators.push_back({sec.name, type, "", GeneratorSpec::periodic(std::move(pat))});
                } else if (type == "sturmian") {
                    std::vector<int> quots;
                    for (const std::string& tok : detail::split(sec.require("quotients"), ' ')) {
                        if (tok.empty()) continue;
                        quots.push_back(std::stoi(tok));
                    }
                    cfg.generators.push_back({sec.name, type, "", GeneratorSpec::sturmian(std::move(quots))});
                } else {
                    throw ConfigError(sec.key_line("type"), "unknown generator type '" + type + "'");
                }
            } catch (const ConfigError&) {
                throw;
            } catch (const std::exception& e) {
                throw ConfigError(sec.line, e.what());
            }
        } else if (sec.kind == "action") {
            for (const ActionDef& d : cfg.actions) {
                if (d.name == sec.name) throw ConfigError(sec.line, "duplicate action name '" + sec.name + "'");
            }
            try {
                Alphabet a(static_cast<int>(parse_size(sec, "alphabet", sec.require("alphabet"))));
                std::vector<AlphabetPerm> gens;
                std::string gtext = sec.get("g").value_or("");
                for (const std::string& tok : detail::split(gtext, ',')) {
                    if (tok.empty()) continue;
                    gens.push_back(AlphabetPerm::parse_cycles(a, tok));
                }
                AlphabetGroup grp = AlphabetGroup::close(a, std::move(gens));
                std::string h = sec.require("h");
                PositionFamily fam = PositionFamily::trivial();
                if (h.rfind("generated@", 0) == 0) {
                    std::string rest = h.substr(std::string("generated@").size());
                    std::size_t sp = rest.find(' ');
                    std::string len_text = sp == std::string::npos ? rest : rest.substr(0, sp);
                    std::size_t len = static_cast<std::size_t>(std::stoull(len_text));
                    std::string cycles = sp == std::string::npos ? "" : detail::trim(rest.substr(sp));
                    std::vector<PositionPerm> pgens;
                    if (!cycles.empty()) pgens.push_back(PositionPerm::parse_cycles(len, cycles));
                    fam = PositionFamily::generated(len, std::move(pgens));
                } else {
                    fam = PositionFamily::symbolic(parse_family_name(h));
                }
                cfg.actions.push_back({sec.name, a, std::move(grp), std::move(fam)});
            } catch (const ConfigError&) {
                throw;
            } catch (const std::exception& e) {
                throw ConfigError(sec.line, e.what());
            }
        } else {  // suite
            if (auto v = sec.get("lmax")) cfg.suite.lmax = parse_size(sec, "lmax", *v);
            if (auto v = sec.get("prefix")) cfg.suite.prefix = parse_size(sec, "prefix", *v);
        }
    }
    return cfg;
}

inline std::string serialize_config(const Config& cfg) {
    std::string out;
    auto rules_text = [](const Morphism& m) {
        std::string s;
        for (int a = 0; a < m.source().size(); ++a) {
            if (a) s += " ; ";
            s += std::string(1, letter_to_char(static_cast<Letter>(a))) + " -> " + m.image(a).to_string();
        }
        return s;
    };
    for (const GeneratorDef& d : cfg.generators) {
        out += "[generator " + d.name + "]\n";
        out += "type = " + d.type + "\n";
        if (const auto* fp = d.spec.get_if<FixedPointSpec>()) {
            out += "alphabet = " + std::to_string(fp->morphism.source().size()) + "\n";
            out += "rules = " + rules_text(fp->morphism) + "\n";
            out += "seed = " + std::string(1, letter_to_char(fp->seed)) + "\n";
        } else if (const auto* mi = d.spec.get_if<MorphicImageSpec>()) {
            out += "inner = " + d.inner_name + "\n";
            out += "alphabet = " + std::to_string(mi->coding.target().size()) + "\n";
            out += "rules = " + rules_text(mi->coding) + "\n";
        } else if (const auto* pe = d.spec.get_if<PeriodicSpec>()) {
            out += "alphabet = " + std::to_string(pe->pattern.alphabet().size()) + "\n";
            out += "pattern = " + pe->pattern.to_string() + "\n";
        } else if (const auto* st = d.spec.get_if<SturmianSpec>()) {
            out += "quotients =";
            for (int q : st->quotients) out += " " + std::to_string(q);
            out += "\n";
        }
        out += "\n";
    }
    for (const ActionDef& d : cfg.actions) {
        out += "[action " + d.name + "]\n";
        out += "alphabet = " + std::to_string(d.alphabet.size()) + "\n";
        std::string g;
        for (std::size_t i = 0; i < d.group.generators().size(); ++i) {
            if (i) g += ", ";
            g += d.group.generators()[i].cycle_notation();
        }
        out += "g = " + g + "\n";
        if (d.family.kind() == PositionFamilyKind::Generated) {
            out += "h = generated@" + std::to_string(d.family.generated_length());
            for (const auto& pg : d.family.generators()) out += " " + pg.cycle_notation();
            out += "\n";
        } else {
            out += "h = " + family_name(d.family.kind()) + "\n";
        }
        out += "\n";
    }
    out += "[suite]\n";
    out += "lmax = " + std::to_string(cfg.suite.lmax) + "\n";
    out += "prefix = " + std::to_string(cfg.suite.prefix) + "\n";
    return out;
}

/// Name environment: config definitions shadow builtins of the same name.
class NameEnv {
public:
    NameEnv() = default;
    explicit NameEnv(Config cfg) : cfg_(std::move(cfg)) {}

    std::optional<GeneratorSpec> find_generator(const std::string& name) const {
        for (const GeneratorDef& d : cfg_.generators) {
            if (d.name == name) return d.spec;
        }
        for (const auto& [bname, spec] : builtin_generators()) {
            if (bname == name) return spec;
        }
        return std::nullopt;
    }

    GeneratorSpec generator(const std::string& name) const {
        auto g = find_generator(name);
        if (!g) throw std::invalid_argument("unknown generator '" + name + "'");
        return *g;
    }

    /// Config actions first (alphabet must match), then builtin templates.
    ActionPair action(const std::string& name, Alphabet a) const {
        for (const ActionDef& d : cfg_.actions) {
            if (d.name == name) {
                if (d.alphabet != a) {
                    throw std::invalid_argument("action '" + name + "' is over a different alphabet");
                }
                return {d.group, d.family};
            }
        }
        return builtin_action(name, a);
    }

    const Config& config() const { return cfg_; }
    const SuiteParams& suite_params() const { return cfg_.suite; }

private:
    Config cfg_;
};

}  // namespace orbitwords
