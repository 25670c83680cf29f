#include "golod/ideal_io.hpp"

#include <cctype>
#include <sstream>

#include "golod/errors.hpp"

namespace golod {

namespace {

[[noreturn]] void fail(int line, int col, const std::string& msg) {
    throw Error(errc::parse,
                "parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + msg);
}

struct LineScanner {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_space() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= s.size();
    }
    int col() const { return static_cast<int>(pos) + 1; }
    char peek() { return s[pos]; }
    bool accept(char c) {
        skip_space();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string identifier() {
        skip_space();
        size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
        }
        if (start == pos) fail(line, col(), "expected an identifier");
        return s.substr(start, pos - start);
    }
    long integer() {
        skip_space();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail(line, col(), "expected an integer");
        return std::stol(s.substr(start, pos - start));
    }
};

Monomial parse_monomial(LineScanner& sc, const RingContext& ctx) {
    Multidegree e(static_cast<size_t>(ctx.var_count()), 0);
    for (;;) {
        int at = sc.col();
        std::string name = sc.identifier();
        auto idx = ctx.index_of(name);
        if (!idx) fail(sc.line, at, "unknown variable '" + name + "'");
        long exp = 1;
        if (sc.accept('^')) {
            int eat = sc.col();
            exp = sc.integer();
            if (exp < 0) fail(sc.line, eat, "negative exponent");
        }
        e[static_cast<size_t>(*idx)] += static_cast<Expo>(exp);
        if (!sc.accept('*')) break;
    }
    Monomial m(std::move(e));
    if (m.is_unit()) fail(sc.line, sc.col(), "generator reduces to the unit monomial 1");
    return m;
}

}  // namespace

const MonomialIdeal& IdealDocument::single() const {
    if (ideals.size() != 1)
        throw Error(errc::usage, "this command needs a document with exactly one gens: line");
    return ideals[0];
}

IdealDocument parse_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::optional<RingContext> ctx;
    std::vector<std::vector<Monomial>> gens_lines;
    std::map<std::string, std::string> metadata;

    while (std::getline(in, raw)) {
        ++line;
        // strip comments
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string trimmed = raw;
        size_t a = trimmed.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t colon = trimmed.find(':');
        if (colon == std::string::npos) fail(line, 1, "expected 'key: value'");
        std::string key = trimmed.substr(a, colon - a);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        std::string value = trimmed.substr(colon + 1);

        if (key == "ring") {
            if (ctx) fail(line, 1, "duplicate ring declaration");
            LineScanner sc{value, line};
            std::vector<std::string> names;
            for (;;) {
                names.push_back(sc.identifier());
                if (!sc.accept(',')) break;
            }
            if (!sc.done()) fail(line, sc.col(), "unexpected trailing text");
            try {
                ctx.emplace(names);
            } catch (const Error& e) {
                fail(line, 1, e.what());
            }
        } else if (key == "gens") {
            if (!ctx) fail(line, 1, "gens: before ring:");
            LineScanner sc{value, line};
            std::vector<Monomial> gens;
            if (!sc.done()) {
                for (;;) {
                    gens.push_back(parse_monomial(sc, *ctx));
                    if (!sc.accept(',')) break;
                }
                if (!sc.done()) fail(line, sc.col(), "unexpected trailing text");
            }
            gens_lines.push_back(std::move(gens));
        } else {
            size_t b = value.find_first_not_of(" \t");
            size_t e = value.find_last_not_of(" \t\r");
            metadata[key] = b == std::string::npos ? "" : value.substr(b, e - b + 1);
        }
    }
    if (!ctx) throw Error(errc::parse, "parse error: missing ring: declaration");
    if (gens_lines.empty()) throw Error(errc::parse, "parse error: missing gens: line");
    IdealDocument doc{*ctx, {}, std::move(metadata)};
    for (auto& gens : gens_lines) doc.ideals.emplace_back(*ctx, std::move(gens));
    return doc;
}

std::string monomial_str(const RingContext& ctx, const Monomial& m) { return m.str(ctx); }

std::string serialize_ideal(const IdealDocument& doc) {
    std::string out = "ring: ";
    for (int i = 0; i < doc.ctx.var_count(); ++i) {
        if (i) out += ", ";
        out += doc.ctx.name(i);
    }
    out += "\n";
    for (const auto& I : doc.ideals) {
        out += "gens:";
        bool first = true;
        for (const auto& g : I.gens()) {
            out += first ? " " : ", ";
            out += g.str(doc.ctx);
            first = false;
        }
        out += "\n";
    }
    for (const auto& [k, v] : doc.metadata) out += k + ": " + v + "\n";
    return out;
}

}  // namespace golod
