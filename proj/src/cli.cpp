#include "golod/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "golod/errors.hpp"
#include "golod/golod_checks.hpp"
#include "golod/ideal_io.hpp"
#include "golod/koszul.hpp"
#include "golod/newton.hpp"
#include "golod/resolution.hpp"
#include "golod/series.hpp"

namespace golod::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string command;
    std::string input = "-";
    int64_t characteristic = 32003;
    bool modified = false;
    bool witness = false;
    bool json = false;
    long box_cap = 2000000;
    uint64_t seed = 0;
    std::optional<int> p, q, max_i, max_h, max_deg, max_n, nmax;
};

const char* kUsage =
    "usage: golodkit <command> [file] [flags]\n"
    "commands:\n"
    "  check-strongly-golod | check-lcm-strongly-golod | check-pair | check-tuple\n"
    "  check-weakly-golod | strong-gcd | polarize | derivative | closure\n"
    "  integral-closure | rational-power --p P --q Q | homology --max-i K\n"
    "  betti-s | poincare --max-h H [--max-deg D] | serre --max-n N\n"
    "  golod-series --max-h H [--max-deg D] | ratliff-rush --nmax N\n"
    "flags: --char <0|prime> --modified --witness --json --box-cap N --seed N\n"
    "file defaults to '-' (stdin); see README for the document grammar\n";

Options parse_args(const std::vector<std::string>& args) {
    Options o;
    if (args.empty()) throw Error(errc::usage, std::string("missing command\n") + kUsage);
    o.command = args[0];
    if (o.command == "help" || o.command == "--help" || o.command == "-h") {
        o.command = "help";
        return o;
    }
    size_t k = 1;
    auto next_value = [&](const std::string& flag) -> std::string {
        if (k + 1 >= args.size()) throw Error(errc::usage, flag + " needs a value");
        return args[++k];
    };
    bool have_positional = false;
    for (; k < args.size(); ++k) {
        const std::string& a = args[k];
        if (a == "--char")
            o.characteristic = std::stoll(next_value(a));
        else if (a == "--modified")
            o.modified = true;
        else if (a == "--witness")
            o.witness = true;
        else if (a == "--json")
            o.json = true;
        else if (a == "--box-cap")
            o.box_cap = std::stol(next_value(a));
        else if (a == "--seed")
            o.seed = std::stoull(next_value(a));
        else if (a == "--p")
            o.p = std::stoi(next_value(a));
        else if (a == "--q")
            o.q = std::stoi(next_value(a));
        else if (a == "--max-i")
            o.max_i = std::stoi(next_value(a));
        else if (a == "--max-h")
            o.max_h = std::stoi(next_value(a));
        else if (a == "--max-deg")
            o.max_deg = std::stoi(next_value(a));
        else if (a == "--max-n")
            o.max_n = std::stoi(next_value(a));
        else if (a == "--nmax")
            o.nmax = std::stoi(next_value(a));
        else if (!a.empty() && a[0] == '-' && a != "-")
            throw Error(errc::usage, "unknown flag " + a);
        else if (!have_positional) {
            o.input = a;
            have_positional = true;
        } else {
            throw Error(errc::usage, "unexpected argument " + a);
        }
    }
    return o;
}

FieldSpec field_of(const Options& o) {
    return o.characteristic == 0 ? FieldSpec::rationals() : FieldSpec::prime(o.characteristic);
}

std::string gens_str(const RingContext& ctx, const MonomialIdeal& I) {
    std::string out;
    for (const auto& g : I.gens()) {
        if (!out.empty()) out += ", ";
        out += g.str(ctx);
    }
    return out.empty() ? "(zero ideal)" : out;
}

Json gens_json(const RingContext& ctx, const MonomialIdeal& I) {
    Json a = Json::array();
    for (const auto& g : I.gens()) a.push_back(g.str(ctx));
    return a;
}

Json series_json(const TruncatedSeries& s) {
    Json a = Json::array();
    for (int i = 0; i <= s.order(); ++i) a.push_back(s[i].str());
    return a;
}

std::string series_str(const TruncatedSeries& s) {
    std::string out;
    for (int i = 0; i <= s.order(); ++i) {
        if (i) out += " ";
        out += s[i].str();
    }
    return out;
}

std::string multidegree_str(const RingContext& ctx, const Multidegree& m) {
    return Monomial(m).str(ctx);
}

struct Report {
    Json json;
    std::string human;
    int exit_code = 0;
    std::string status = "ok";
};

Json witness_json(const RingContext& ctx, const DerivativeProductWitness& w) {
    return Json{{"u", w.u.str(ctx)},
                {"i", ctx.name(w.i)},
                {"v", w.v.str(ctx)},
                {"j", ctx.name(w.j)},
                {"offending", w.offending.str(ctx)}};
}

std::string witness_str(const RingContext& ctx, const DerivativeProductWitness& w) {
    return "u=" + w.u.str(ctx) + " i=" + ctx.name(w.i) + " v=" + w.v.str(ctx) +
           " j=" + ctx.name(w.j) + " offending=" + w.offending.str(ctx);
}

Json class_json(const RingContext& ctx, const HomologyClass& c) {
    return Json{{"hom_degree", c.hom_degree},
                {"multidegree", multidegree_str(ctx, c.multidegree)},
                {"representative", c.representative.str(ctx)}};
}

Report run_command(const Options& o, const IdealDocument& doc) {
    Report rep;
    const RingContext& ctx = doc.ctx;
    FieldSpec f = field_of(o);
    std::ostringstream hs;
    Json& result = rep.json;

    auto golod_report = [&](const GolodReport& g, const char* what) {
        result["verdict"] = g.verdict;
        hs << what << ": " << (g.verdict ? "true" : "false") << "\n";
        if (g.product_witness) {
            result["witness"] = witness_json(ctx, *g.product_witness);
            hs << "witness: " << witness_str(ctx, *g.product_witness) << "\n";
        }
        if (g.colon_witness) {
            result["witness"] = Json{{"ideal_index", g.colon_witness->which},
                                     {"offending", g.colon_witness->offending.str(ctx)}};
            hs << "witness: ideal_index=" << g.colon_witness->which
               << " offending=" << g.colon_witness->offending.str(ctx) << "\n";
        }
        rep.exit_code = g.verdict ? 0 : 1;
    };

    if (o.command == "check-strongly-golod") {
        golod_report(is_strongly_golod(doc.single(), o.modified), "strongly-golod");
    } else if (o.command == "check-lcm-strongly-golod") {
        golod_report(is_lcm_strongly_golod(doc.single(), o.modified), "lcm-strongly-golod");
    } else if (o.command == "check-pair") {
        if (doc.ideals.size() != 2)
            throw Error(errc::usage, "check-pair needs exactly two gens: lines");
        golod_report(is_strongly_golod_pair(doc.ideals[0], doc.ideals[1]), "strongly-golod-pair");
    } else if (o.command == "check-tuple") {
        golod_report(is_strongly_golod_tuple(doc.ideals), "strongly-golod-tuple");
    } else if (o.command == "check-weakly-golod") {
        WeakGolodReport g = is_weakly_golod(doc.single(), f);
        result["verdict"] = g.verdict;
        hs << "weakly-golod: " << (g.verdict ? "true" : "false") << "\n";
        if (g.witness) {
            result["witness"] = Json{{"first", class_json(ctx, g.witness->first)},
                                     {"second", class_json(ctx, g.witness->second)},
                                     {"product", class_json(ctx, *g.witness_product)}};
            hs << "witness: [" << g.witness->first.representative.str(ctx) << "] * ["
               << g.witness->second.representative.str(ctx) << "] != 0 in multidegree "
               << multidegree_str(ctx, g.witness_product->multidegree) << "\n";
        }
        rep.exit_code = g.verdict ? 0 : 1;
    } else if (o.command == "strong-gcd") {
        auto order = strong_gcd_order(doc.single());
        result["order_exists"] = order.has_value();
        if (order) {
            Json a = Json::array();
            std::string line;
            for (const auto& m : *order) {
                a.push_back(m.str(ctx));
                if (!line.empty()) line += " < ";
                line += m.str(ctx);
            }
            result["order"] = a;
            hs << "strong-gcd order: " << line << "\n";
        } else {
            hs << "strong-gcd order: none\n";
        }
        rep.exit_code = order ? 0 : 1;
    } else if (o.command == "polarize") {
        auto [pctx, pideal] = polarize(doc.single());
        Json names = Json::array();
        std::string ring_line;
        for (const auto& n : pctx.names()) {
            names.push_back(n);
            if (!ring_line.empty()) ring_line += ", ";
            ring_line += n;
        }
        result["ring"] = names;
        result["gens"] = gens_json(pctx, pideal);
        hs << "ring: " << ring_line << "\n" << "gens: " << gens_str(pctx, pideal) << "\n";
    } else if (o.command == "derivative") {
        MonomialIdeal d = derivative_ideal(doc.single());
        result["gens"] = gens_json(ctx, d);
        hs << "gens: " << gens_str(ctx, d) << "\n";
    } else if (o.command == "closure") {
        MonomialIdeal c = strongly_golod_closure(doc.single());
        result["gens"] = gens_json(ctx, c);
        hs << "gens: " << gens_str(ctx, c) << "\n";
    } else if (o.command == "integral-closure") {
        MonomialIdeal c = integral_closure(doc.single(), o.box_cap);
        result["gens"] = gens_json(ctx, c);
        hs << "gens: " << gens_str(ctx, c) << "\n";
    } else if (o.command == "rational-power") {
        if (!o.p || !o.q) throw Error(errc::usage, "rational-power needs --p and --q");
        MonomialIdeal c = rational_power(doc.single(), *o.p, *o.q, o.box_cap);
        result["gens"] = gens_json(ctx, c);
        hs << "gens: " << gens_str(ctx, c) << "\n";
    } else if (o.command == "homology") {
        int max_i = o.max_i.value_or(ctx.var_count());
        HomologyTable t = homology_table(doc.single(), max_i, f);
        if (t.clamped()) {
            result["clamped_to"] = t.max_i();
            hs << "note: max-i clamped to " << t.max_i() << " (the variable count)\n";
        }
        Json dims = Json::object();
        for (const auto& [i, d] : t.dims()) {
            dims["H" + std::to_string(i)] = d.str();
            hs << "dim H_" << i << " = " << d.str() << "\n";
        }
        result["dims"] = dims;
        if (o.witness) {
            Json cls = Json::array();
            for (const auto& c : t.classes()) cls.push_back(class_json(ctx, c));
            result["classes"] = cls;
            for (const auto& c : t.classes())
                hs << "H_" << c.hom_degree << "[" << multidegree_str(ctx, c.multidegree)
                   << "] basis " << c.basis_index << ": " << c.representative.str(ctx) << "\n";
        }
    } else if (o.command == "betti-s") {
        BettiTable t = betti_over_S(doc.single(), f);
        Json graded = Json::array();
        for (const auto& [key, v] : t.entries()) {
            graded.push_back(Json{{"i", key.first}, {"degree", key.second}, {"beta", v.str()}});
            hs << "beta_{" << key.first << "," << key.second << "} = " << v.str() << "\n";
        }
        result["graded"] = graded;
        Json totals = Json::array();
        std::string line;
        for (int i = 0; i <= t.max_index(); ++i) {
            totals.push_back(t.total(i).str());
            if (!line.empty()) line += " ";
            line += t.total(i).str();
        }
        result["totals"] = totals;
        hs << "totals: " << line << "\n";
    } else if (o.command == "poincare") {
        if (!o.max_h) throw Error(errc::usage, "poincare needs --max-h");
        PoincareResult r = poincare_truncation(doc.single(), *o.max_h, o.max_deg, f);
        result["coefficients"] = series_json(r.series);
        result["certified_through"] = r.certified_through;
        hs << "poincare: " << series_str(r.series) << "\n";
        if (!r.fully_certified())
            hs << "truncation-limited: certified through t^" << r.certified_through << " only\n";
    } else if (o.command == "serre") {
        if (!o.max_n) throw Error(errc::usage, "serre needs --max-n");
        TruncatedSeries s = serre_bound(doc.single(), *o.max_n, f);
        result["coefficients"] = series_json(s);
        hs << "serre-bound: " << series_str(s) << "\n";
    } else if (o.command == "golod-series") {
        if (!o.max_h) throw Error(errc::usage, "golod-series needs --max-h");
        PoincareResult r = poincare_truncation(doc.single(), *o.max_h, o.max_deg, f);
        TruncatedSeries bound = serre_bound(doc.single(), *o.max_h, f);
        auto dev = first_deviation(r.series, bound);
        result["poincare"] = series_json(r.series);
        result["serre_bound"] = series_json(bound);
        result["certified_through"] = r.certified_through;
        hs << "poincare:    " << series_str(r.series) << "\n";
        hs << "serre-bound: " << series_str(bound) << "\n";
        if (!r.fully_certified())
            hs << "truncation-limited: certified through t^" << r.certified_through << " only\n";
        if (dev) {
            result["first_deviation"] = *dev;
            if (*dev > r.certified_through) {
                // An uncertified coefficient only undercounts, so a deviation
                // there may be a truncation artifact.
                result["deviation_certified"] = false;
                hs << "first-deviation: " << *dev
                   << " (beyond the certified window; raise --max-deg)\n";
                rep.exit_code = 2;
                rep.status = "truncation-limited";
            } else {
                result["deviation_certified"] = true;
                hs << "first-deviation: " << *dev << " (not Golod)\n";
                rep.exit_code = 1;
            }
        } else {
            result["first_deviation"] = nullptr;
            hs << "first-deviation: none within the window\n";
        }
    } else if (o.command == "ratliff-rush") {
        if (doc.ideals.size() != 2)
            throw Error(errc::usage, "ratliff-rush needs exactly two gens: lines");
        RatliffRushResult r =
            generalized_ratliff_rush(doc.ideals[0], doc.ideals[1], o.nmax.value_or(10));
        result["gens"] = gens_json(ctx, r.ideal);
        hs << "gens: " << gens_str(ctx, r.ideal) << "\n";
        if (r.stabilized_at) {
            result["stabilized_at"] = *r.stabilized_at;
            hs << "stabilized-at: " << *r.stabilized_at << "\n";
        } else {
            result["stabilized_at"] = nullptr;
            result["status"] = "unstabilized";
            hs << "status: unstabilized within nmax\n";
            rep.exit_code = 1;
        }
    } else {
        throw Error(errc::usage, "unknown command '" + o.command + "'\n" + kUsage);
    }

    rep.human = hs.str();
    return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    auto started = std::chrono::steady_clock::now();
    Options o;
    Json envelope;
    try {
        o = parse_args(args);
        if (o.command == "help") {
            out << kUsage;
            return 0;
        }
        std::string text;
        if (o.input == "-") {
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        } else {
            std::ifstream file(o.input);
            if (!file) throw Error(errc::usage, "cannot open input file '" + o.input + "'");
            std::ostringstream ss;
            ss << file.rdbuf();
            text = ss.str();
        }
        IdealDocument doc = parse_ideal(text);

        envelope["schema"] = 1;
        envelope["command"] = o.command;
        envelope["config"] = Json{{"char", o.characteristic}, {"modified", o.modified},
                                  {"witness", o.witness},     {"box_cap", o.box_cap},
                                  {"seed", o.seed}};
        auto put_opt = [&](const char* key, const std::optional<int>& v) {
            if (v) envelope["config"][key] = *v;
        };
        put_opt("p", o.p);
        put_opt("q", o.q);
        put_opt("max_i", o.max_i);
        put_opt("max_h", o.max_h);
        put_opt("max_deg", o.max_deg);
        put_opt("max_n", o.max_n);
        put_opt("nmax", o.nmax);
        Json ideals = Json::array();
        for (const auto& I : doc.ideals) ideals.push_back(gens_json(doc.ctx, I));
        Json names = Json::array();
        for (const auto& nm : doc.ctx.names()) names.push_back(nm);
        envelope["input"] = Json{{"ring", names}, {"ideals", ideals}};
        if (auto it = doc.metadata.find("name"); it != doc.metadata.end())
            envelope["input"]["name"] = it->second;

        Report rep = run_command(o, doc);
        envelope["status"] = rep.status;
        envelope["result"] = rep.json;
        if (o.json)
            out << envelope.dump(2) << "\n";
        else
            out << rep.human;
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        err << "# elapsed_ms: " << elapsed << "\n";
        return rep.exit_code;
    } catch (const Error& e) {
        if (o.json) {
            Json fail{{"schema", 1},
                      {"command", o.command},
                      {"status", "error"},
                      {"error", Json{{"code", e.code()}, {"message", e.what()}}}};
            out << fail.dump(2) << "\n";
        }
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace golod::cli
