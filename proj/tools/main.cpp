#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "rrc/ideal_text.hpp"
#include "rrc/monomial_closure.hpp"
#include "rrc/staircase_svg.hpp"
#include "rrc/suite.hpp"
#include "rrc/valuation_closure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// --ideal @path reads the ideal text from a file.
std::string load_arg(const std::string& v) {
    if (v.empty() || v[0] != '@') return v;
    std::ifstream in(v.substr(1));
    if (!in) throw std::invalid_argument("cannot open file '" + v.substr(1) + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

struct CommonFlags {
    bool json = false;
    bool quiet = false;
};

void emit(const CommonFlags& flags, const nlohmann::json& doc, const std::string& human) {
    if (!flags.quiet && !human.empty()) std::cout << human;
    if (flags.json) std::cout << doc.dump(2) << "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
    out << content;
}

struct PolyArgs {
    std::string vars;
    std::string ideal;
    std::string other;
    int k = 0;
    int nmax = 16;
    int window = 3;
    std::string svg;
    std::string op;
    CommonFlags flags;
};

int run_poly(const PolyArgs& a) {
    auto vars = rrc::parse_var_list(a.vars);
    rrc::MonomialIdeal input = rrc::parse_poly_ideal(vars, load_arg(a.ideal));

    rrc::ClosureConfig cfg;
    cfg.n_max = a.nmax;
    cfg.window = a.window;

    nlohmann::json doc{{"universe", "poly"},
                       {"op", a.op},
                       {"inputs",
                        {{"vars", a.vars}, {"ideal", rrc::format_poly_ideal(vars, input)}}},
                       {"result", nullptr},
                       {"certified", true},
                       {"warnings", nlohmann::json::array()}};
    std::ostringstream human;
    human << "input:  " << rrc::format_poly_ideal(vars, input) << "\n";

    std::optional<rrc::MonomialIdeal> result_ideal;
    auto need_other = [&]() {
        if (a.other.empty())
            throw std::invalid_argument("op '" + a.op + "' needs --other");
        rrc::MonomialIdeal j = rrc::parse_poly_ideal(vars, load_arg(a.other));
        doc["inputs"]["other"] = rrc::format_poly_ideal(vars, j);
        human << "other:  " << rrc::format_poly_ideal(vars, j) << "\n";
        return j;
    };

    if (a.op == "rr" || a.op == "chain") {
        rrc::ClosureResult res = rrc::rr_closure(input, cfg);
        result_ideal = res.closure;
        doc["certified"] = res.report.certified;
        nlohmann::json chain = nlohmann::json::array();
        for (std::size_t n = 0; n < res.report.terms.size(); ++n)
            chain.push_back({{"n", n + 1},
                             {"term", rrc::format_poly_ideal(vars, res.report.terms[n])}});
        doc["chain"] = chain;
        for (const auto& w : res.report.warnings) doc["warnings"].push_back(w);

        if (a.op == "chain")
            for (std::size_t n = 0; n < res.report.terms.size(); ++n)
                human << "n=" << n + 1 << ":    "
                      << rrc::format_poly_ideal(vars, res.report.terms[n]) << "\n";
        human << "rr:     " << rrc::format_poly_ideal(vars, res.closure) << "\n";
        if (res.report.certified) {
            human << "status: certified (chain stabilized at n="
                  << *res.report.stabilized_at << ", oracle agrees)\n";
        } else {
            human << "status: UNCERTIFIED";
            for (const auto& w : res.report.warnings) human << " - " << w;
            human << "\n";
        }
    } else if (a.op == "ic") {
        result_ideal = rrc::integral_closure_2v(input);
        human << "ic:     " << rrc::format_poly_ideal(vars, *result_ideal) << "\n";
    } else if (a.op == "colon") {
        result_ideal = rrc::colon(input, need_other());
        human << "colon:  " << rrc::format_poly_ideal(vars, *result_ideal) << "\n";
    } else if (a.op == "mult") {
        result_ideal = rrc::multiply(input, need_other());
        human << "mult:   " << rrc::format_poly_ideal(vars, *result_ideal) << "\n";
    } else if (a.op == "power") {
        if (a.k < 1) throw std::invalid_argument("op 'power' needs --k >= 1");
        doc["inputs"]["k"] = a.k;
        result_ideal = rrc::power(input, a.k);
        human << "power:  " << rrc::format_poly_ideal(vars, *result_ideal) << "\n";
    } else if (a.op == "stable") {
        bool s = rrc::is_stable(input);
        doc["result"] = s ? "true" : "false";
        human << "stable: " << (s ? "true" : "false") << "\n";
    } else if (a.op == "lstable") {
        rrc::LStableVerdict v = rrc::is_l_stable(input, cfg);
        doc["result"] = v.holds ? "true" : "false";
        if (v.holds && v.capped) {
            doc["warnings"].push_back("verdict capped at n_max=" + std::to_string(cfg.n_max));
            human << "lstable: true (capped at n_max=" << cfg.n_max << ")\n";
        } else {
            human << "lstable: " << (v.holds ? "true" : "false") << "\n";
        }
    } else if (a.op == "reduction") {
        auto n = rrc::is_reduction_of(input, need_other(), cfg);
        doc["result"] = n ? "n=" + std::to_string(*n) : "none";
        human << "reduction: " << (n ? "n=" + std::to_string(*n) : "none") << "\n";
    }

    if (result_ideal) doc["result"] = rrc::format_poly_ideal(vars, *result_ideal);

    if (!a.svg.empty()) {
        if (!result_ideal)
            throw std::invalid_argument("--svg needs an op that produces an ideal");
        if (input.nvars() != 2)
            throw std::invalid_argument("--svg supports two-variable ideals only");
        write_file(a.svg, rrc::staircase_svg(vars, input, *result_ideal));
    }

    emit(a.flags, doc, human.str());
    return kExitOk;
}

struct ValArgs {
    std::string group;
    std::string ideal;
    std::string op;
    CommonFlags flags;
};

int run_val(const ValArgs& a) {
    rrc::ValueGroup g = rrc::parse_group(a.group);
    rrc::CutIdeal input = rrc::parse_cut(g, load_arg(a.ideal));

    nlohmann::json doc{{"universe", "val"},
                       {"op", a.op},
                       {"inputs", {{"group", a.group}, {"ideal", rrc::format_cut(input)}}},
                       {"result", nullptr},
                       {"certified", true},
                       {"warnings", nlohmann::json::array()}};
    std::ostringstream human;
    human << "group:  " << rrc::format_group(g) << "\n";
    human << "input:  " << rrc::format_cut(input) << "\n";

    // rr / prime / idempotent act on ideals of V: a cut reaching outside the
    // non-negative cone is read as the ideal it generates there.
    auto ideal_part = [&]() {
        rrc::CutIdeal i = cut_meet(input, unit_cut(g));
        if (i != input) {
            doc["warnings"].push_back("input read as its ideal part inside V");
            human << "note:   input read as its ideal part inside V\n";
        }
        return i;
    };

    std::optional<rrc::CutIdeal> result_cut;
    if (a.op == "rr") {
        result_cut = rrc::rr_closed_form(ideal_part());
    } else if (a.op == "hat") {
        result_cut = rrc::rr_hat(input);
    } else if (a.op == "v") {
        result_cut = rrc::v_closure(input);
        human << "divisorial: " << (rrc::is_divisorial(input) ? "yes" : "no") << "\n";
    } else if (a.op == "inverse") {
        result_cut = rrc::cut_inverse(input);
    } else if (a.op == "trace") {
        result_cut = rrc::trace(input);
    } else if (a.op == "prime") {
        auto p = rrc::is_prime(ideal_part());
        doc["result"] = p ? "prime level=" + std::to_string(p->level) : "not prime";
        human << "prime:  " << doc["result"].get<std::string>() << "\n";
    } else if (a.op == "idempotent") {
        bool idem = rrc::is_idempotent(ideal_part());
        doc["result"] = idem ? "true" : "false";
        human << "idempotent: " << doc["result"].get<std::string>() << "\n";
    }

    if (result_cut) {
        doc["result"] = rrc::format_cut(*result_cut);
        human << a.op << ":     " << rrc::format_cut(*result_cut) << "\n";
    }

    emit(a.flags, doc, human.str());
    return kExitOk;
}

struct VerifyArgs {
    std::uint64_t seed = 42;
    int cases = 200;
    std::vector<std::string> groups;
    CommonFlags flags;
};

int run_verify(const VerifyArgs& a) {
    rrc::GeneratorConfig cfg = rrc::GeneratorConfig::defaults();
    cfg.seed = a.seed;
    cfg.cases = a.cases;
    if (!a.groups.empty()) {
        cfg.valuation.groups.clear();
        for (const auto& gtext : a.groups)
            cfg.valuation.groups.push_back(rrc::parse_group(gtext));
    }
    rrc::SuiteReport rep = rrc::run_paper_suite(cfg);
    emit(a.flags, rrc::report_to_json(rep), rrc::report_to_text(rep));
    return rep.pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ratliff-Rush closure calculator for monomial ideals and "
                 "valuation cut ideals"};
    app.require_subcommand(1);

    PolyArgs pa;
    CLI::App* poly = app.add_subcommand("poly", "operations on monomial ideals");
    poly->add_option("--vars", pa.vars, "comma-separated variable names")->required();
    poly->add_option("--ideal", pa.ideal, "generators, or @file")->required();
    poly->add_option("--other", pa.other, "second ideal for colon/mult/reduction");
    poly->add_option("--k", pa.k, "exponent for power");
    poly->add_option("--nmax", pa.nmax, "chain length cap");
    poly->add_option("--window", pa.window, "stabilization window");
    poly->add_option("--svg", pa.svg, "write a staircase plot to this path");
    poly->add_flag("--json", pa.flags.json, "emit the structured document");
    poly->add_flag("--quiet", pa.flags.quiet, "suppress human-readable output");
    poly->add_option("op", pa.op, "operation")
        ->required()
        ->check(CLI::IsMember({"rr", "chain", "ic", "colon", "mult", "power", "stable",
                               "lstable", "reduction"}));

    ValArgs va;
    CLI::App* val = app.add_subcommand("val", "operations on valuation cut ideals");
    val->add_option("--group", va.group, "value group, e.g. lex(Q,Z)")->required();
    val->add_option("--ideal", va.ideal, "cut, e.g. 'gt m=1 rho=1', or @file")->required();
    val->add_flag("--json", va.flags.json, "emit the structured document");
    val->add_flag("--quiet", va.flags.quiet, "suppress human-readable output");
    val->add_option("op", va.op, "operation")
        ->required()
        ->check(CLI::IsMember({"rr", "hat", "v", "inverse", "trace", "prime", "idempotent"}));

    VerifyArgs va2;
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--seed", va2.seed, "generator seed");
    verify->add_option("--cases", va2.cases, "random cases per check");
    verify->add_option("--group", va2.groups, "restrict to these value groups");
    verify->add_flag("--json", va2.flags.json, "emit the structured report");
    verify->add_flag("--quiet", va2.flags.quiet, "suppress human-readable output");

    try {
        app.parse(argc, argv);
        if (poly->parsed()) return run_poly(pa);
        if (val->parsed()) return run_val(va);
        return run_verify(va2);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const rrc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
