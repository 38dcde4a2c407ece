#include "dinv/cli.hpp"

#include "dinv/alexander.hpp"
#include "dinv/brcover.hpp"
#include "dinv/cache.hpp"
#include "dinv/cfk.hpp"
#include "dinv/errors.hpp"
#include "dinv/lens.hpp"
#include "dinv/metabolizer.hpp"
#include "dinv/obstruction.hpp"
#include "dinv/surgery.hpp"
#include "dinv/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace dinv::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr long sweep_guard = 1000000;

struct Global {
    std::string format; // "tsv" or "json"; obstruct defaults to json
    ResultCache cache;
    bool format_given = false;
};

LSpaceKnotModel parse_knot_arg(const std::string& text) {
    if (text == "unknot") return unknot();
    const std::string prefix = "torus:";
    if (text.rfind(prefix, 0) == 0) {
        auto rest = text.substr(prefix.size());
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw ParseError("torus knot description needs two parameters, got '" + text + "'");
        Int a = parse_int(rest.substr(0, comma));
        Int b = parse_int(rest.substr(comma + 1));
        auto la = to_int64(a);
        auto lb = to_int64(b);
        if (!la || !lb) throw TooLargeError("torus knot parameters out of range in '" + text + "'");
        return torus_knot(*la, *lb);
    }
    throw ParseError("unknown knot description '" + text + "' (expected 'torus:A,B' or 'unknot')");
}

BifilteredComplex parse_complex_arg(const std::string& text) {
    if (text == "unknot") return unknot_complex();
    const std::string prefix = "staircase:";
    if (text.rfind(prefix, 0) == 0) {
        Int n = parse_int(text.substr(prefix.size()));
        auto ln = to_int64(n);
        if (!ln || *ln > 1000)
            throw TooLargeError("staircase parameter out of range in '" + text + "'");
        return staircase(*ln);
    }
    throw ParseError("unknown complex description '" + text
                     + "' (expected 'staircase:N' or 'unknot')");
}

std::string canonical_combo(const LinearCombination& c) {
    std::ostringstream os;
    for (const auto& [p, np] : c.terms)
        os << (np >= 0 ? "+" : "") << np << "*K" << p;
    if (c.terms.empty()) os << "0";
    return os.str();
}

Rational cached_d_lens(Global& g, const Int& p, const Int& q, const Int& i) {
    LensSpace l(p, q);
    std::string key = "dlens:p=" + to_string(l.p) + ",q=" + to_string(l.q)
                    + ",i=" + to_string(i);
    std::string value =
        g.cache.remember(key, [&] { return d_lens(p, q, i).str(); });
    return Rational::parse(value);
}

Rational cached_d_surgery(Global& g, const SurgeryDescription& s, const Int& label) {
    std::string key = "dsurgery:knot=" + s.knot.name + ",slope=" + s.slope.fraction_string()
                    + ",label=" + to_string(label);
    std::string value = g.cache.remember(key, [&] { return d_surgery(s, label).str(); });
    return Rational::parse(value);
}

void emit_json(std::ostream& out, const ordered_json& j) {
    out << j.dump(2) << "\n";
}

int run_dlens(Global& g, std::ostream& out, const std::string& p_text,
              const std::string& q_text, const std::string& label_text, bool all) {
    Int p = parse_int(p_text);
    Int q = parse_int(q_text);
    if (all == !label_text.empty())
        throw ParseError("dlens needs exactly one of --label or --all");
    std::vector<std::pair<Int, Rational>> rows;
    if (all) {
        if (p > sweep_guard)
            throw TooLargeError("--all sweep refused for p > " + std::to_string(sweep_guard));
        for (Int i = 0; i < p; ++i) rows.emplace_back(i, cached_d_lens(g, p, q, i));
    } else {
        Int i = parse_int(label_text);
        rows.emplace_back(i, cached_d_lens(g, p, q, i));
    }
    if (g.format == "json") {
        ordered_json j;
        j["command"] = "dlens";
        j["p"] = to_string(p);
        j["q"] = to_string(q);
        j["values"] = ordered_json::array();
        for (const auto& [i, d] : rows)
            j["values"].push_back({{"label", to_string(i)}, {"d", d.str()}});
        emit_json(out, j);
    } else {
        for (const auto& [i, d] : rows) out << to_string(i) << "\t" << d.str() << "\n";
    }
    return 0;
}

int run_dsurgery(Global& g, std::ostream& out, const std::string& knot_arg,
                 const std::string& slope_text, const std::string& label_text, bool all) {
    LSpaceKnotModel knot = parse_knot_arg(knot_arg);
    Rational slope = Rational::parse(slope_text);
    SurgeryDescription s(std::move(knot), slope);
    if (all == !label_text.empty())
        throw ParseError("dsurgery needs exactly one of --label or --all");
    std::vector<std::pair<Int, Rational>> rows;
    if (all) {
        if (slope.num() > sweep_guard)
            throw TooLargeError("--all sweep refused for p > " + std::to_string(sweep_guard));
        for (Int i = 0; i < slope.num(); ++i) rows.emplace_back(i, cached_d_surgery(g, s, i));
    } else {
        Int i = parse_int(label_text);
        rows.emplace_back(i, cached_d_surgery(g, s, i));
    }
    if (g.format == "json") {
        ordered_json j;
        j["command"] = "dsurgery";
        j["knot"] = s.knot.name;
        j["slope"] = s.slope.str();
        j["values"] = ordered_json::array();
        for (const auto& [i, d] : rows)
            j["values"].push_back({{"label", to_string(i)}, {"d", d.str()}});
        emit_json(out, j);
    } else {
        for (const auto& [i, d] : rows) out << to_string(i) << "\t" << d.str() << "\n";
    }
    return 0;
}

int run_torsion(Global& g, std::ostream& out, const std::string& knot_arg) {
    LSpaceKnotModel knot = parse_knot_arg(knot_arg);
    auto table = torsion_table(knot);
    if (g.format == "json") {
        ordered_json j;
        j["command"] = "torsion";
        j["knot"] = knot.name;
        j["alexander"] = knot.alexander.pretty();
        j["machine"] = knot.alexander.machine();
        j["genus"] = knot.genus;
        j["torsion"] = ordered_json::array();
        for (const auto& [i, t] : table)
            j["torsion"].push_back({{"i", i}, {"t", to_string(t)}});
        emit_json(out, j);
    } else {
        out << "knot\t" << knot.name << "\n";
        out << "alexander\t" << knot.alexander.pretty() << "\n";
        out << "machine\t" << knot.alexander.machine() << "\n";
        out << "genus\t" << knot.genus << "\n";
        for (const auto& [i, t] : table) out << "torsion\t" << i << "\t" << to_string(t) << "\n";
    }
    return 0;
}

int run_sigma(Global& g, std::ostream& out, long p, bool table) {
    KpModel m(p);
    auto raw = raw_metabolizer_labels(m);
    auto shifted = metabolizer_labels(m);

    struct Row {
        long k;
        Int raw, ik, fl, torsion;
        Rational d;
    };
    std::vector<Row> rows;
    std::vector<long> negative;
    for (long k = 0; k <= 2 * p; ++k) {
        Row r;
        r.k = k;
        r.raw = raw[static_cast<std::size_t>(k)];
        r.ik = shifted[static_cast<std::size_t>(k)];
        r.fl = floor_index(m, k);
        r.torsion = torsion_coefficient(m.surgery.knot, r.fl);
        r.d = cached_d_surgery(g, m.surgery, mod_floor(r.ik, m.order));
        if (r.d.sign() < 0) negative.push_back(k);
        rows.push_back(std::move(r));
    }

    if (g.format == "json") {
        ordered_json j;
        j["command"] = "sigma";
        j["p"] = p;
        j["order"] = to_string(m.order);
        j["slope"] = m.surgery.slope.str();
        j["surrogate"] = m.surgery.knot.name;
        j["negative_indices"] = negative;
        if (table) {
            j["rows"] = ordered_json::array();
            for (const auto& r : rows)
                j["rows"].push_back({{"k", r.k},
                                     {"raw", to_string(r.raw)},
                                     {"ik", to_string(r.ik)},
                                     {"floor", to_string(r.fl)},
                                     {"torsion", to_string(r.torsion)},
                                     {"d", r.d.str()}});
        }
        emit_json(out, j);
    } else if (table) {
        out << "# k\traw\tik\tfloor\ttorsion\td\n";
        for (const auto& r : rows)
            out << r.k << "\t" << to_string(r.raw) << "\t" << to_string(r.ik) << "\t"
                << to_string(r.fl) << "\t" << to_string(r.torsion) << "\t" << r.d.str() << "\n";
    } else {
        out << "p\t" << p << "\n";
        out << "order\t" << to_string(m.order) << "\n";
        out << "slope\t" << m.surgery.slope.str() << "\n";
        std::ostringstream neg;
        for (std::size_t i = 0; i < negative.size(); ++i) neg << (i ? "," : "") << negative[i];
        out << "negative_indices\t" << neg.str() << "\n";
    }
    return 0;
}

ordered_json report_to_json(const std::string& combo_text, const ObstructionReport& r) {
    ordered_json j;
    j["command"] = "obstruct";
    j["combo"] = combo_text;
    j["alexander_one"] = r.alexander_one_summand;
    j["obstructed"] = r.obstructed;
    j["mirrored"] = r.mirrored;
    if (r.obstructed) {
        j["q"] = r.q;
        j["witness_element"] = to_string(r.witness_element);
        j["witness_index"] = r.witness_index;
        j["witness_label"] = to_string(r.witness_label);
        j["d_witness"] = r.witness_d.str();
    }
    j["total_d"] = r.total_d.str();
    j["summands"] = ordered_json::array();
    for (const auto& s : r.summands)
        j["summands"].push_back({{"p", s.p},
                                 {"coefficient", s.coefficient},
                                 {"group_order", to_string(s.group_order)},
                                 {"label", to_string(s.label)},
                                 {"d_original", s.d_original.str()},
                                 {"d_normalized", s.d_normalized.str()}});
    j["narrative"] = r.narrative;
    j["scope"] = r.scope;
    return j;
}

int run_obstruct(Global& g, std::ostream& out, const std::string& combo_text,
                 bool alexander_one) {
    LinearCombination c = parse_combination(combo_text);
    c.alexander_one_summand = alexander_one;
    std::string key = "obstruct:combo=" + canonical_combo(c) + ",alexone="
                    + (alexander_one ? "1" : "0");
    std::string value = g.cache.remember(key, [&] {
        return report_to_json(canonical_combo(c), witness(c)).dump();
    });
    ordered_json j = ordered_json::parse(value);
    bool obstructed = j.at("obstructed").get<bool>();
    if (!g.format_given || g.format == "json") {
        emit_json(out, j);
    } else {
        for (const auto& [k, v] : j.items()) {
            if (k == "summands") {
                for (const auto& s : v)
                    out << "summand\t" << s.at("p").get<long>() << "\t"
                        << s.at("coefficient").get<long>() << "\t"
                        << s.at("group_order").get<std::string>() << "\t"
                        << s.at("label").get<std::string>() << "\t"
                        << s.at("d_original").get<std::string>() << "\t"
                        << s.at("d_normalized").get<std::string>() << "\n";
            } else if (k == "narrative") {
                for (const auto& line : v)
                    out << "narrative\t" << line.get<std::string>() << "\n";
            } else if (v.is_string()) {
                out << k << "\t" << v.get<std::string>() << "\n";
            } else {
                out << k << "\t" << v.dump() << "\n";
            }
        }
    }
    return obstructed ? 0 : 2;
}

void emit_complex_text(std::ostream& out, const BifilteredComplex& x) {
    out << x.to_text();
}

ordered_json complex_to_json(const BifilteredComplex& x) {
    ordered_json j;
    j["generators"] = ordered_json::array();
    for (const auto& gen : x.generators())
        j["generators"].push_back({{"name", gen.name},
                                   {"i", gen.fi},
                                   {"j", gen.fj},
                                   {"grading", gen.grading}});
    j["arrows"] = ordered_json::array();
    for (std::size_t from = 0; from < x.size(); ++from)
        for (std::size_t to : x.differential()[from])
            j["arrows"].push_back({{"from", x.generator(from).name},
                                   {"to", x.generator(to).name},
                                   {"power", x.u_power(from, to)}});
    return j;
}

int run_cfk_tensor(Global& g, std::ostream& out, const std::string& a_arg,
                   const std::string& b_arg, bool split, const std::string& compare_arg) {
    BifilteredComplex a = parse_complex_arg(a_arg);
    BifilteredComplex b = parse_complex_arg(b_arg);
    BifilteredComplex t = tensor(a, b);

    std::optional<SplitResult> sr;
    bool recombines = false;
    if (split || !compare_arg.empty()) {
        sr = split_summands(t);
        recombines = split_recombines(t, *sr);
    }
    std::optional<bool> equal;
    if (!compare_arg.empty()) equal = equal_up_to_acyclic(t, parse_complex_arg(compare_arg));

    if (g.format == "json") {
        ordered_json j;
        j["command"] = "cfk";
        j["a"] = a_arg;
        j["b"] = b_arg;
        j["tensor"] = complex_to_json(t);
        if (sr) {
            j["split"] = ordered_json::object();
            j["split"]["summands"] = ordered_json::array();
            for (const auto& s : sr->summands) {
                ordered_json js = complex_to_json(s);
                js["acyclic"] = is_acyclic(s);
                j["split"]["summands"].push_back(std::move(js));
            }
            j["split"]["moves"] = sr->moves.size();
            j["split"]["recombines"] = recombines;
        }
        if (equal) {
            j["compare"] = {{"with", compare_arg}, {"equal_up_to_acyclic", *equal}};
        }
        emit_json(out, j);
    } else {
        out << "# tensor of " << a_arg << " and " << b_arg << ": " << t.size()
            << " generators, " << t.arrow_count() << " arrows\n";
        emit_complex_text(out, t);
        if (sr) {
            for (std::size_t i = 0; i < sr->summands.size(); ++i) {
                const auto& s = sr->summands[i];
                out << "# summand " << i << ": " << s.size() << " generators, acyclic "
                    << (is_acyclic(s) ? "yes" : "no") << "\n";
                emit_complex_text(out, s);
            }
            out << "recombines\t" << (recombines ? "true" : "false") << "\n";
        }
        if (equal)
            out << "compare\t" << compare_arg << "\t" << (*equal ? "true" : "false") << "\n";
    }
    if (sr && !recombines) return 2;
    if (equal && !*equal) return 2;
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact d-invariant calculator for rational surgeries and branched covers"};
    app.fallthrough(true);
    app.require_subcommand(0, 1);

    Global g;
    std::string format;
    std::string cache_path;
    app.add_option("--format", format, "output format: tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--cache", cache_path, "flat-file result cache path");
    bool want_version = false;
    app.add_flag("--version", want_version, "print the version tag");

    // dlens
    std::string dl_p, dl_q, dl_label;
    bool dl_all = false;
    auto* dlens_cmd = app.add_subcommand("dlens", "d-invariants of p/q surgery on the unknot");
    dlens_cmd->add_option("--p", dl_p, "order parameter p")->required();
    dlens_cmd->add_option("--q", dl_q, "coefficient q, coprime to p")->required();
    dlens_cmd->add_option("--label", dl_label, "single spin-c label");
    dlens_cmd->add_flag("--all", dl_all, "sweep every label in [0, p)");

    // dsurgery
    std::string ds_knot, ds_slope, ds_label;
    bool ds_all = false;
    auto* dsurgery_cmd =
        app.add_subcommand("dsurgery", "d-invariants of p/q surgery on an L-space knot");
    dsurgery_cmd->add_option("--knot", ds_knot, "knot description, e.g. torus:2,5")->required();
    dsurgery_cmd->add_option("--slope", ds_slope, "surgery slope P/Q")->required();
    dsurgery_cmd->add_option("--label", ds_label, "single spin-c label");
    dsurgery_cmd->add_flag("--all", ds_all, "sweep every label in [0, p)");

    // torsion
    std::string to_knot;
    auto* torsion_cmd =
        app.add_subcommand("torsion", "Alexander polynomial and torsion coefficients");
    torsion_cmd->add_option("--knot", to_knot, "knot description, e.g. torus:2,5")->required();

    // sigma
    long sg_p = 0;
    bool sg_table = false;
    auto* sigma_cmd =
        app.add_subcommand("sigma", "correction terms of the double branched cover model");
    sigma_cmd->add_option("--p", sg_p, "family parameter p (2p+1 must be prime)")->required();
    sigma_cmd->add_flag("--table", sg_table, "print the full k-indexed table");

    // obstruct
    std::string ob_combo;
    bool ob_alexander_one = false;
    auto* obstruct_cmd =
        app.add_subcommand("obstruct", "certify a combination as obstructed");
    obstruct_cmd->add_option("--combo", ob_combo, "combination, e.g. \"1*K3 + 2*K5 - 1*K8\"")
        ->required();
    obstruct_cmd->add_flag("--alexander-one", ob_alexander_one,
                           "append a summand with Alexander polynomial 1");

    // cfk tensor
    std::string cf_a, cf_b, cf_compare;
    bool cf_split = false;
    auto* cfk_cmd = app.add_subcommand("cfk", "bifiltered complex toolkit");
    auto* tensor_cmd = cfk_cmd->add_subcommand("tensor", "tensor two complexes");
    tensor_cmd->add_option("--a", cf_a, "left factor, e.g. staircase:1")->required();
    tensor_cmd->add_option("--b", cf_b, "right factor")->required();
    tensor_cmd->add_flag("--split", cf_split, "split the result into summands");
    tensor_cmd->add_option("--compare", cf_compare, "compare up to acyclic summands");
    cfk_cmd->require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("dinv");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (want_version) {
            out << version_tag << "\n";
            return 0;
        }
        if (app.get_subcommands().empty()) {
            out << app.help();
            return 0;
        }

        g.format_given = !format.empty();
        g.format = format.empty() ? "tsv" : format;
        const char* env_cache = std::getenv("DINV_CACHE");
        if (cache_path.empty() && env_cache != nullptr) cache_path = env_cache;
        if (!cache_path.empty()) g.cache = ResultCache(cache_path);

        int code = 0;
        if (dlens_cmd->parsed())
            code = run_dlens(g, out, dl_p, dl_q, dl_label, dl_all);
        else if (dsurgery_cmd->parsed())
            code = run_dsurgery(g, out, ds_knot, ds_slope, ds_label, ds_all);
        else if (torsion_cmd->parsed())
            code = run_torsion(g, out, to_knot);
        else if (sigma_cmd->parsed())
            code = run_sigma(g, out, sg_p, sg_table);
        else if (obstruct_cmd->parsed())
            code = run_obstruct(g, out, ob_combo, ob_alexander_one);
        else if (cfk_cmd->parsed())
            code = run_cfk_tensor(g, out, cf_a, cf_b, cf_split, cf_compare);

        for (const auto& w : g.cache.warnings()) err << "cache\twarning\t" << w << "\n";
        if (g.cache.enabled())
            err << "cache\thits\t" << g.cache.hits() << "\tstores\t" << g.cache.stores()
                << "\n";
        return code;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << version_tag << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error\tusage\t" << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error\t" << e.kind() << "\t" << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error\tinternal\t" << e.what() << "\n";
        return 1;
    }
}

} // namespace dinv::cli
