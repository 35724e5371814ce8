#include "sftkit/io.hpp"

#include <fstream>
#include <sstream>

namespace sftkit::io {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

void check_symbol_writable(const std::string& s) {
    if (s.find_first_of(";=\n@") != std::string::npos)
        throw InputError("symbol name not writable in pattern syntax: " + s);
}

struct LineReader {
    std::istream& in;
    std::string line;
    bool has = false;

    bool peek() {
        while (!has) {
            if (!std::getline(in, line)) return false;
            line = trim(line);
            if (!line.empty() && line[0] != '#') has = true;
        }
        return true;
    }
    std::string take() {
        peek();
        has = false;
        return line;
    }
};

}  // namespace

std::string pattern_line(const core::Pattern& p) {
    std::string out;
    for (const auto& [c, s] : p.cells()) {
        check_symbol_writable(s);
        out += '@';
        out += coord_to_string(c);
        out += '=';
        out += s;
        out += ';';
    }
    return out;
}

core::Pattern parse_pattern_line(const std::string& line) {
    std::optional<core::Pattern> p;
    size_t i = 0;
    std::string s = trim(line);
    while (i < s.size()) {
        if (s[i] != '@') throw InputError("pattern cell must start with '@': " + s.substr(i));
        ++i;
        if (i >= s.size() || s[i] != '(') throw InputError("expected '(' in pattern cell");
        size_t close = s.find(')', i);
        if (close == std::string::npos) throw InputError("unterminated coordinate");
        Coord c;
        std::string coords = s.substr(i + 1, close - i - 1);
        std::istringstream cs(coords);
        std::string tok;
        while (std::getline(cs, tok, ',')) {
            try {
                c.push_back(std::stoi(trim(tok)));
            } catch (const std::exception&) {
                throw InputError("bad coordinate: " + tok);
            }
        }
        if (c.empty()) throw InputError("empty coordinate");
        i = close + 1;
        if (i >= s.size() || s[i] != '=') throw InputError("expected '=' in pattern cell");
        ++i;
        size_t semi = s.find(';', i);
        if (semi == std::string::npos) throw InputError("pattern cell must end with ';'");
        std::string sym = s.substr(i, semi - i);
        if (sym.empty()) throw InputError("empty symbol in pattern cell");
        i = semi + 1;
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (!p) p.emplace(static_cast<int>(c.size()));
        p->set(c, sym);
    }
    if (!p) throw InputError("empty pattern line");
    return *p;
}

std::string torus_line(const core::PeriodicConfig& c, const core::Alphabet& alphabet) {
    std::string out = "periods ";
    for (size_t i = 0; i < c.periods().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.periods()[i]);
    }
    out += " | ";
    Coord hi(c.periods().size());
    for (size_t i = 0; i < c.periods().size(); ++i) hi[i] = c.periods()[i] - 1;
    Box domain(zero_coord(c.dim()), hi);
    core::Pattern p(c.dim());
    for (const Coord& z : domain.cells()) p.set(z, alphabet.name(c.at(z)));
    out += pattern_line(p);
    return out;
}

std::string write_sft(const core::SftSpec& spec) {
    std::ostringstream out;
    out << kSftFormatVersion << "\n";
    out << "dim: " << spec.dim() << "\n";
    out << "alphabet:\n";
    for (const auto& s : spec.alphabet().symbols()) out << s << "\n";
    out << "forbid:\n";
    for (const auto& f : spec.forbidden()) out << pattern_line(f) << "\n";
    return out.str();
}

std::string write_wang(const core::WangTileset& tiles) {
    std::ostringstream out;
    out << kSftFormatVersion << "\n";
    out << "wang:\n";
    for (const auto& t : tiles.tiles())
        out << t.north << " " << t.east << " " << t.south << " " << t.west << "\n";
    return out.str();
}

SftDocument parse_sft_document(std::istream& in) {
    LineReader r{in, {}, false};
    if (!r.peek() || r.take() != kSftFormatVersion)
        throw InputError(std::string("expected header '") + kSftFormatVersion + "'");

    SftDocument doc;
    std::optional<int> dim;
    std::vector<std::string> alphabet;
    std::vector<core::Pattern> forbidden;
    std::vector<core::WangTile> wang;
    bool has_sft_sections = false, has_wang = false;

    std::string section;
    while (r.peek()) {
        std::string line = r.take();
        if (line == "alphabet:" || line == "forbid:" || line == "wang:") {
            section = line;
            if (line == "wang:")
                has_wang = true;
            else
                has_sft_sections = true;
            continue;
        }
        if (line.rfind("dim:", 0) == 0) {
            dim = std::stoi(trim(line.substr(4)));
            has_sft_sections = true;
            section.clear();
            continue;
        }
        if (section == "alphabet:") {
            alphabet.push_back(line);
        } else if (section == "forbid:") {
            forbidden.push_back(parse_pattern_line(line));
        } else if (section == "wang:") {
            auto toks = split_ws(line);
            if (toks.size() != 4) throw InputError("wang tile needs exactly N E S W: " + line);
            wang.push_back({toks[0], toks[1], toks[2], toks[3]});
        } else {
            throw InputError("unknown section or stray line: " + line);
        }
    }
    if (has_wang && has_sft_sections) throw InputError("document mixes sft and wang sections");
    if (has_wang) {
        doc.wang = core::WangTileset(std::move(wang));
        return doc;
    }
    if (!dim) throw InputError("missing dim section");
    doc.sft = core::SftSpec(core::Alphabet(std::move(alphabet)), *dim, std::move(forbidden));
    return doc;
}

SftDocument parse_sft_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return parse_sft_document(in);
}

namespace {

void write_alphabet_section(std::ostringstream& out, const char* name, const core::Alphabet& a) {
    out << name << ":\n";
    for (const auto& s : a.symbols()) out << s << "\n";
}

void write_code_body(std::ostringstream& out, const codes::SlidingBlockCode& code) {
    using RK = codes::SlidingBlockCode::RuleKind;
    out << kCodeFormatVersion << "\n";
    out << "dim: " << code.dim() << "\n";
    out << "radius: " << code.radius() << "\n";
    switch (code.kind()) {
        case RK::table: {
            out << "kind: table\n";
            write_alphabet_section(out, "source", code.source());
            write_alphabet_section(out, "target", code.target());
            if (auto fb = code.table_fallback())
                out << "fallback: " << code.target().name(*fb) << "\n";
            out << "table:\n";
            for (const auto& [window, value] : code.table_entries()) {
                for (size_t i = 0; i < window.size(); ++i) {
                    if (i) out << ' ';
                    out << code.source().name(window[i]);
                }
                out << " -> " << code.target().name(value) << "\n";
            }
            break;
        }
        case RK::projection: {
            out << "kind: proj\n";
            write_alphabet_section(out, "source", code.source());
            write_alphabet_section(out, "target", code.target());
            out << "offset: ";
            const Coord& off = code.proj_offset();
            for (size_t i = 0; i < off.size(); ++i) {
                if (i) out << ',';
                out << off[i];
            }
            out << "\n";
            out << "map:\n";
            for (size_t i = 0; i < code.proj_symbol_map().size(); ++i)
                out << code.source().name(static_cast<SymbolId>(i)) << " -> "
                    << code.target().name(code.proj_symbol_map()[i]) << "\n";
            break;
        }
        case RK::composition: {
            out << "kind: compose\n";
            for (const auto& part : code.chain()) {
                out << "begin-part\n";
                write_code_body(out, part);
                out << "end-part\n";
            }
            break;
        }
        case RK::star: {
            out << "kind: star\n";
            const core::SftSpec& spec = code.star_source_spec();
            write_alphabet_section(out, "base-alphabet", spec.alphabet());
            out << "forbid:\n";
            for (const auto& f : spec.forbidden()) out << pattern_line(f) << "\n";
            out << "begin-part\n";
            write_code_body(out, code.star_inner());
            out << "end-part\n";
            break;
        }
    }
}

codes::SlidingBlockCode parse_code_lines(LineReader& r);

// read one nested part between begin-part/end-part
codes::SlidingBlockCode parse_part(LineReader& r) {
    if (!r.peek() || r.take() != "begin-part") throw InputError("expected begin-part");
    codes::SlidingBlockCode code = parse_code_lines(r);
    if (!r.peek() || r.take() != "end-part") throw InputError("expected end-part");
    return code;
}

codes::SlidingBlockCode parse_code_lines(LineReader& r) {
    if (!r.peek() || r.take() != kCodeFormatVersion)
        throw InputError(std::string("expected header '") + kCodeFormatVersion + "'");
    std::optional<int> dim, radius;
    std::string kind;

    auto read_kv = [&](const std::string& line, const char* key) -> std::optional<std::string> {
        std::string prefix = std::string(key) + ":";
        if (line.rfind(prefix, 0) == 0) return trim(line.substr(prefix.size()));
        return std::nullopt;
    };

    while (r.peek()) {
        if (auto v = read_kv(r.line, "dim")) {
            dim = std::stoi(*v);
            r.take();
        } else if (auto v2 = read_kv(r.line, "radius")) {
            radius = std::stoi(*v2);
            r.take();
        } else if (auto v3 = read_kv(r.line, "kind")) {
            kind = *v3;
            r.take();
            break;
        } else {
            throw InputError("unknown line in code header: " + r.line);
        }
    }
    if (!dim || !radius || kind.empty()) throw InputError("incomplete code header");

    auto read_alphabet = [&](const char* name) {
        if (!r.peek() || r.take() != std::string(name) + ":")
            throw InputError(std::string("expected section ") + name);
        std::vector<std::string> symbols;
        while (r.peek()) {
            // section ends at the next known keyword
            const std::string& l = r.line;
            if (l == "table:" || l == "map:" || l == "forbid:" || l == "begin-part" ||
                l == "end-part" || l.rfind("offset:", 0) == 0 || l.rfind("fallback:", 0) == 0 ||
                l == "target:" || l == "source:")
                break;
            symbols.push_back(r.take());
        }
        return core::Alphabet(std::move(symbols));
    };

    if (kind == "table") {
        core::Alphabet source = read_alphabet("source");
        core::Alphabet target = read_alphabet("target");
        std::optional<SymbolId> fallback;
        if (r.peek() && r.line.rfind("fallback:", 0) == 0)
            fallback = target.require(trim(r.take().substr(9)));
        if (!r.peek() || r.take() != "table:") throw InputError("expected table section");
        std::vector<std::pair<std::vector<SymbolId>, SymbolId>> entries;
        while (r.peek() && r.line != "end-part") {
            std::string line = r.take();
            size_t arrow = line.rfind(" -> ");
            if (arrow == std::string::npos) throw InputError("bad table line: " + line);
            auto window_tokens = split_ws(line.substr(0, arrow));
            std::vector<SymbolId> window;
            for (const auto& t : window_tokens) window.push_back(source.require(t));
            entries.emplace_back(std::move(window), target.require(trim(line.substr(arrow + 4))));
        }
        return codes::SlidingBlockCode::table(std::move(source), std::move(target), *dim, *radius,
                                              std::move(entries), fallback);
    }
    if (kind == "proj") {
        core::Alphabet source = read_alphabet("source");
        core::Alphabet target = read_alphabet("target");
        if (!r.peek() || r.line.rfind("offset:", 0) != 0) throw InputError("expected offset");
        std::string off_str = trim(r.take().substr(7));
        Coord offset;
        std::istringstream os(off_str);
        std::string tok;
        while (std::getline(os, tok, ',')) offset.push_back(std::stoi(trim(tok)));
        if (!r.peek() || r.take() != "map:") throw InputError("expected map section");
        std::vector<SymbolId> map(static_cast<size_t>(source.size()), kUnassigned);
        while (r.peek() && r.line != "end-part") {
            std::string line = r.take();
            size_t arrow = line.rfind(" -> ");
            if (arrow == std::string::npos) throw InputError("bad map line: " + line);
            SymbolId s = source.require(trim(line.substr(0, arrow)));
            map[static_cast<size_t>(s)] = target.require(trim(line.substr(arrow + 4)));
        }
        for (SymbolId v : map)
            if (v == kUnassigned) throw InputError("projection map not total");
        return codes::SlidingBlockCode::projection(std::move(source), std::move(target), *dim, *radius,
                                                   std::move(offset), std::move(map));
    }
    if (kind == "compose") {
        std::vector<codes::SlidingBlockCode> parts;
        while (r.peek() && r.line == "begin-part") parts.push_back(parse_part(r));
        if (parts.empty()) throw InputError("compose needs at least one part");
        codes::SlidingBlockCode result = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) result = codes::compose(parts[i], result);
        return result;
    }
    if (kind == "star") {
        core::Alphabet base = read_alphabet("base-alphabet");
        if (!r.peek() || r.take() != "forbid:") throw InputError("expected forbid section");
        std::vector<core::Pattern> forbidden;
        while (r.peek() && r.line != "begin-part") forbidden.push_back(parse_pattern_line(r.take()));
        codes::SlidingBlockCode inner = parse_part(r);
        core::SftSpec spec(std::move(base), *dim, std::move(forbidden));
        return codes::star_augment(inner, spec);
    }
    throw InputError("unknown code kind: " + kind);
}

}  // namespace

std::string write_code(const codes::SlidingBlockCode& code) {
    std::ostringstream out;
    write_code_body(out, code);
    return out.str();
}

codes::SlidingBlockCode parse_code(std::istream& in) {
    LineReader r{in, {}, false};
    return parse_code_lines(r);
}

codes::SlidingBlockCode parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return parse_code(in);
}

tm::TuringMachine parse_tm(std::istream& in) {
    LineReader r{in, {}, false};
    if (!r.peek() || r.take() != kTmFormatVersion)
        throw InputError(std::string("expected header '") + kTmFormatVersion + "'");

    std::vector<std::string> states;
    std::string blank, init;
    std::set<std::string> halt;
    std::map<std::pair<std::string, std::string>, tm::Transition> delta;
    std::vector<std::string> tape;
    auto add_tape = [&](const std::string& s) {
        if (std::find(tape.begin(), tape.end(), s) == tape.end()) tape.push_back(s);
    };

    std::string section;
    while (r.peek()) {
        std::string line = r.take();
        if (line == "states:" || line == "halt:" || line == "delta:") {
            section = line;
            continue;
        }
        if (line.rfind("blank:", 0) == 0) {
            blank = trim(line.substr(6));
            section.clear();
            continue;
        }
        if (line.rfind("init:", 0) == 0) {
            init = trim(line.substr(5));
            section.clear();
            continue;
        }
        if (section == "states:") {
            states.push_back(line);
        } else if (section == "halt:") {
            halt.insert(line);
        } else if (section == "delta:") {
            // q,a -> q',a',L|R
            size_t arrow = line.find("->");
            if (arrow == std::string::npos) throw InputError("bad delta line: " + line);
            auto parse_pair = [&](const std::string& s, size_t want) {
                std::vector<std::string> parts;
                std::istringstream ps(s);
                std::string tok;
                while (std::getline(ps, tok, ',')) parts.push_back(trim(tok));
                if (parts.size() != want) throw InputError("bad delta line: " + line);
                return parts;
            };
            auto lhs = parse_pair(trim(line.substr(0, arrow)), 2);
            auto rhs = parse_pair(trim(line.substr(arrow + 2)), 3);
            tm::Transition t;
            t.next_state = rhs[0];
            t.write = rhs[1];
            if (rhs[2] == "L")
                t.move = tm::Move::left;
            else if (rhs[2] == "R")
                t.move = tm::Move::right;
            else
                throw InputError("bad move in delta line: " + line);
            add_tape(lhs[1]);
            add_tape(t.write);
            if (!delta.emplace(std::make_pair(lhs[0], lhs[1]), t).second)
                throw InputError("duplicate delta entry: " + line);
        } else {
            throw InputError("unknown section or stray line: " + line);
        }
    }
    if (blank.empty()) throw InputError("missing blank section");
    if (init.empty()) throw InputError("missing init section");
    // blank first in the tape alphabet, then first-appearance order
    std::vector<std::string> tape_final{blank};
    for (const auto& s : tape)
        if (s != blank) tape_final.push_back(s);
    return tm::TuringMachine(std::move(states), std::move(tape_final), blank, init, std::move(halt),
                             std::move(delta));
}

tm::TuringMachine parse_tm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return parse_tm(in);
}

}  // namespace sftkit::io
