#include "ccx/specfile.hpp"

#include "ccx/errors.hpp"
#include "ccx/parser.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ccx {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string unquote(std::string v) {
    if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') ||
                          (v.front() == '\'' && v.back() == '\'')))
        return v.substr(1, v.size() - 2);
    return v;
}

struct Entry {
    std::string key;
    std::string value;
    int line;
};

struct Section {
    std::string name;
    bool repeated = false;
    std::vector<Entry> entries;
    std::vector<std::string> bare; // bare identifier lines ([params])
    int line;
};

std::vector<Section> read_sections(const std::string& text, const std::string& origin) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            bool repeated = line.size() > 1 && line[1] == '[';
            const auto close = line.find(repeated ? "]]" : "]");
            if (close == std::string::npos)
                throw ParseError(origin + ":" + std::to_string(lineno) + ": malformed section header",
                                 lineno, 1);
            std::string name = trim(line.substr(repeated ? 2 : 1, close - (repeated ? 2 : 1)));
            sections.push_back({name, repeated, {}, {}, lineno});
            continue;
        }
        if (sections.empty())
            throw ParseError(origin + ":" + std::to_string(lineno) + ": entry outside any section",
                             lineno, 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            for (auto& ident : split_list(line)) sections.back().bare.push_back(ident);
            continue;
        }
        sections.back().entries.push_back(
            {trim(line.substr(0, eq)), unquote(trim(line.substr(eq + 1))), lineno});
    }
    return sections;
}

const Entry* find_entry(const Section& s, const std::string& key) {
    for (const auto& e : s.entries)
        if (e.key == key) return &e;
    return nullptr;
}

std::string require_entry(const Section& s, const std::string& key, const std::string& origin) {
    const Entry* e = find_entry(s, key);
    if (!e)
        throw ParseError(origin + ":" + std::to_string(s.line) + ": [" + s.name +
                             "] is missing '" + key + "'",
                         s.line, 1);
    return e->value;
}

Polynomial parse_value(const std::string& text, const std::string& origin, int line) {
    try {
        return parse_polynomial(text);
    } catch (const ParseError& e) {
        throw ParseError(origin + ":" + std::to_string(line) + ": " + e.what(), e.line, e.col);
    }
}

// Splits a polynomial that is linear over marker symbols (generators or the
// module generator) into per-marker coefficients.
std::vector<Polynomial> split_linear(const Polynomial& p, const std::vector<std::string>& markers,
                                     const std::string& origin, int line,
                                     const std::string& what) {
    std::vector<VarId> mvars;
    mvars.reserve(markers.size());
    for (const auto& m : markers) mvars.push_back(VarId::param(m));
    std::vector<Polynomial> out(markers.size());
    for (const auto& [mono, coeff] : p.terms()) {
        int found = -1;
        Monomial rest;
        for (const auto& [v, e] : mono) {
            bool marker = false;
            for (std::size_t i = 0; i < mvars.size(); ++i) {
                if (v == mvars[i]) {
                    if (found >= 0 || e != 1)
                        throw ParseError(origin + ":" + std::to_string(line) + ": " + what +
                                             " must be linear in the generators",
                                         line, 1);
                    found = static_cast<int>(i);
                    marker = true;
                }
            }
            if (!marker) rest.emplace_back(v, e);
        }
        if (found < 0)
            throw ParseError(origin + ":" + std::to_string(line) + ": " + what +
                                 " has a term with no generator factor",
                             line, 1);
        out[static_cast<std::size_t>(found)].add_term(rest, coeff);
    }
    return out;
}

void check_alphabet(const Polynomial& p, const std::set<std::string>& allowed_params,
                    const std::string& origin, int line) {
    for (const auto& v : p.support()) {
        if (v.kind == VarKind::Param && !allowed_params.count(v.name))
            throw ParseError(origin + ":" + std::to_string(line) + ": unknown identifier '" +
                                 v.name + "' (declare it under [params])",
                             line, 1);
    }
}

} // namespace

SpecFile parse_specfile_text(const std::string& text, const std::string& origin) {
    SpecFile out;
    const auto sections = read_sections(text, origin);

    for (const auto& s : sections)
        if (s.name == "params")
            for (const auto& ident : s.bare) out.params.push_back(ident);
    std::set<std::string> params(out.params.begin(), out.params.end());

    const Section* alg = nullptr;
    const Section* mod = nullptr;
    std::vector<const Section*> brackets;
    for (const auto& s : sections) {
        if (s.name == "algebra") alg = &s;
        else if (s.name == "module") mod = &s;
        else if (s.name == "bracket") brackets.push_back(&s);
        else if (s.name != "params")
            throw ParseError(origin + ":" + std::to_string(s.line) + ": unknown section [" +
                                 s.name + "]",
                             s.line, 1);
    }

    if (alg) {
        ConformalAlgebra A;
        A.name = find_entry(*alg, "name") ? find_entry(*alg, "name")->value : "algebra";
        A.generators = split_list(require_entry(*alg, "generators", origin));
        if (A.generators.empty())
            throw ParseError(origin + ": algebra needs at least one generator", alg->line, 1);
        A.central.assign(A.generators.size(), 0);
        if (const Entry* c = find_entry(*alg, "centrals")) {
            for (const auto& name : split_list(c->value)) {
                int idx = A.gen_index(name);
                if (idx < 0)
                    throw ParseError(origin + ":" + std::to_string(c->line) +
                                         ": unknown central generator " + name,
                                     c->line, 1);
                A.central[static_cast<std::size_t>(idx)] = 1;
            }
        }
        const auto n = A.generators.size();
        A.bracket.assign(n, std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n)));
        for (const Section* b : brackets) {
            const std::string left = require_entry(*b, "left", origin);
            const std::string right = require_entry(*b, "right", origin);
            const int i = A.gen_index(left), j = A.gen_index(right);
            if (i < 0 || j < 0)
                throw ParseError(origin + ":" + std::to_string(b->line) +
                                     ": bracket names unknown generator",
                                 b->line, 1);
            const Entry* v = find_entry(*b, "value");
            const int vline = v ? v->line : b->line;
            Polynomial p = parse_value(require_entry(*b, "value", origin), origin, vline);
            auto coeffs = split_linear(p, A.generators, origin, vline, "bracket value");
            for (std::size_t k = 0; k < n; ++k) {
                check_alphabet(coeffs[k], params, origin, vline);
                for (const auto& var : coeffs[k].support())
                    if (var.kind == VarKind::BracketMu || var.kind == VarKind::Lambda)
                        throw ParseError(origin + ":" + std::to_string(vline) +
                                             ": bracket value may use only D, x and params",
                                         vline, 1);
                A.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][k] =
                    A.central_reduce(static_cast<int>(k), coeffs[k]);
            }
        }
        out.algebra = std::move(A);
    } else if (!brackets.empty()) {
        throw ParseError(origin + ": [[bracket]] without [algebra]", 1, 1);
    }

    if (mod) {
        if (!out.algebra)
            throw ParseError(origin + ": [module] requires an [algebra]", mod->line, 1);
        ConformalModule V;
        V.algebra = *out.algebra;
        V.name = find_entry(*mod, "name") ? find_entry(*mod, "name")->value : "module";
        const std::string partial = require_entry(*mod, "partial", origin);
        if (partial == "D") {
            V.partial_kind = ConformalModule::PartialKind::Free;
        } else {
            V.partial_kind = ConformalModule::PartialKind::Line;
            const Entry* pe = find_entry(*mod, "partial");
            V.partial_scalar = parse_value(partial, origin, pe->line);
            check_alphabet(V.partial_scalar, params, origin, pe->line);
            if (!V.partial_scalar.is_zero() && V.partial_scalar.total_degree() > 0)
                for (const auto& var : V.partial_scalar.support())
                    if (var.kind != VarKind::Param)
                        throw ParseError(origin + ":" + std::to_string(pe->line) +
                                             ": scalar partial action must be a constant or a param",
                                         pe->line, 1);
        }
        V.action.assign(V.algebra.generators.size(), Polynomial());
        for (const auto& e : mod->entries) {
            if (e.key.rfind("action.", 0) != 0) continue;
            const std::string gen = e.key.substr(7);
            const int gi = V.algebra.gen_index(gen);
            if (gi < 0)
                throw ParseError(origin + ":" + std::to_string(e.line) +
                                     ": action for unknown generator " + gen,
                                 e.line, 1);
            Polynomial p = parse_value(e.value, origin, e.line);
            auto coeffs = split_linear(p, {V.generator}, origin, e.line, "module action");
            check_alphabet(coeffs[0], params, origin, e.line);
            V.action[static_cast<std::size_t>(gi)] = coeffs[0];
        }
        out.module = std::move(V);
    }

    return out;
}

SpecFile load_specfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_specfile_text(buf.str(), path);
}

std::string emit_specfile(const ConformalAlgebra& A, const ConformalModule* V,
                          const std::vector<std::string>& params) {
    std::ostringstream os;
    os << "[algebra]\n";
    os << "name = " << A.name << "\n";
    os << "generators = ";
    for (std::size_t i = 0; i < A.generators.size(); ++i)
        os << (i ? ", " : "") << A.generators[i];
    os << "\n";
    bool any_central = false;
    for (char c : A.central) any_central |= c != 0;
    if (any_central) {
        os << "centrals = ";
        bool first = true;
        for (int i = 0; i < A.size(); ++i) {
            if (!A.is_central(i)) continue;
            os << (first ? "" : ", ") << A.generators[static_cast<std::size_t>(i)];
            first = false;
        }
        os << "\n";
    }
    for (int i = 0; i < A.size(); ++i) {
        for (int j = 0; j < A.size(); ++j) {
            std::string value;
            for (int k = 0; k < A.size(); ++k) {
                const Polynomial& p = A.bracket[static_cast<std::size_t>(i)]
                                               [static_cast<std::size_t>(j)]
                                               [static_cast<std::size_t>(k)];
                if (p.is_zero()) continue;
                if (!value.empty()) value += " + ";
                value += "(" + p.to_string() + ")*" + A.generators[static_cast<std::size_t>(k)];
            }
            if (value.empty()) continue;
            os << "\n[[bracket]]\n";
            os << "left = " << A.generators[static_cast<std::size_t>(i)] << "\n";
            os << "right = " << A.generators[static_cast<std::size_t>(j)] << "\n";
            os << "value = " << value << "\n";
        }
    }
    if (V) {
        os << "\n[module]\n";
        os << "name = " << V->name << "\n";
        if (V->partial_kind == ConformalModule::PartialKind::Free)
            os << "partial = D\n";
        else
            os << "partial = " << V->partial_scalar.to_string() << "\n";
        for (int g = 0; g < A.size(); ++g) {
            const Polynomial& p = V->action[static_cast<std::size_t>(g)];
            if (p.is_zero()) continue;
            os << "action." << A.generators[static_cast<std::size_t>(g)] << " = (" << p.to_string()
               << ")*" << V->generator << "\n";
        }
    }
    if (!params.empty()) {
        os << "\n[params]\n";
        for (std::size_t i = 0; i < params.size(); ++i) os << (i ? " " : "") << params[i];
        os << "\n";
    }
    return os.str();
}

} // namespace ccx
