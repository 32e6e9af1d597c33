#include "pwftap_cli/cli.hpp"

#include "report.hpp"

#include "pwftap/aggregator.hpp"
#include "pwftap/detectors.hpp"
#include "pwftap/errors.hpp"
#include "pwftap/hedging.hpp"
#include "pwftap/market_io.hpp"
#include "pwftap/measures.hpp"
#include "pwftap/partition.hpp"
#include "pwftap/payoff_expr.hpp"
#include "pwftap/random_market.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace pwftap::cli {

namespace {

struct Options {
    std::string market_path;
    std::string option_names;
    bool options_given = false;
    std::string payoff;
    std::string hedge_set = "efficient";
    std::string measure_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
};

struct CommandOutput {
    Json result;
    std::string summary;
};

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) names.push_back(item);
    }
    return names;
}

OptionSelection resolve_options(const MarketModel& market, const Options& opts) {
    if (!opts.options_given) return market.all_options();
    return market.select_options(split_names(opts.option_names));
}

std::string set_summary(const MarketModel& market, const ScenarioSet& set) {
    std::string out = "{";
    for (ScenarioIndex w : set.members()) out += (out.size() > 1 ? ", " : "") + market.scenario_id(w);
    return out + "}";
}

Payoff resolve_payoff(const MarketModel& market, const std::string& spec) {
    if (spec.empty()) throw InputError("--payoff is required");
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return load_payoff(read_text_file(spec), market);
    return PayoffExpression::parse(spec).evaluate(market);
}

Json scheme_trace(const MarketModel& market, const SchemeResult& r) {
    Json a = Json::array();
    Json a_star = Json::array();
    for (const auto& s : r.A) a.push_back(s.size());
    for (const auto& s : r.A_star) a_star.push_back(s.size());
    return Json{{"beta", r.beta}, {"success", r.success}, {"A_sizes", std::move(a)}, {"A_star_sizes", std::move(a_star)},
                {"final_efficient_set", set_json(market, r.final_efficient_set())}};
}

CommandOutput cmd_ftap(const MarketModel& market, const OptionSelection& sel) {
    SchemeResult scheme = run_partition_scheme(market, sel);
    CalibratedMeasureProblem problem(market, sel);
    std::optional<FiniteMeasure> member = problem.find_member();
    ArbitrageFinding strong = detect_strong(market, sel, scheme.filtration);
    const ScenarioSet oracle = efficient_set_oracle(problem);

    const bool agree = scheme.success == member.has_value() && member.has_value() == !strong.found;
    if (!agree) throw InvariantBreach("scheme success, measure feasibility and strong arbitrage disagree");
    if (scheme.success && !(scheme.final_efficient_set() == oracle)) {
        throw InvariantBreach("scheme efficient set differs from the measure oracle");
    }
    const std::string verdict = scheme.success ? "no arbitrage" : "arbitrage";
    Json result{{"verdict", verdict},
                {"efficient_set", set_json(market, oracle)},
                {"scheme", scheme_trace(market, scheme)},
                {"measure_polytope_feasible", member.has_value()},
                {"strong_arbitrage", finding_json(market, strong)},
                {"equivalence_holds", agree}};
    if (member) result["calibrated_measure"] = measure_json(market, *member);
    std::ostringstream s;
    s << "ftap: " << verdict << "; efficient set " << set_summary(market, oracle) << " (" << oracle.size() << " of "
      << market.omega().size() << "); beta " << scheme.beta;
    if (strong.found) s << "; strong arbitrage with epsilon " << to_string(strong.epsilon);
    return {std::move(result), s.str()};
}

CommandOutput cmd_price(const MarketModel& market, const OptionSelection& sel, const Options& opts) {
    if (opts.hedge_set != "efficient" && opts.hedge_set != "omega") {
        throw InputError("--hedge-set must be 'efficient' or 'omega'");
    }
    const Payoff g = resolve_payoff(market, opts.payoff);
    DualityReport rep = duality_report(market, sel, g);
    const SuperhedgeResult& chosen = opts.hedge_set == "efficient" ? rep.primal : rep.primal_on_omega;
    Json result{{"payoff", payoff_json(market, g)},
                {"hedge_set", opts.hedge_set},
                {"efficient_set", set_json(market, rep.efficient_set)},
                {"price", extended_json(chosen.value)},
                {"primal_on_efficient_set", extended_json(rep.primal.value)},
                {"primal_on_omega", extended_json(rep.primal_on_omega.value)},
                {"dual", extended_json(rep.dual.value)},
                {"gap_zero_on_efficient_set", rep.gap_zero},
                {"gap_on_omega", rep.gap_on_omega},
                {"summary", rep.summary}};
    if (chosen.strategy) result["strategy"] = strategy_json(market, *chosen.strategy);
    if (rep.dual.maximiser) result["dual_maximiser"] = measure_json(market, *rep.dual.maximiser);
    if (!rep.gap_zero) throw InvariantBreach("pricing-hedging duality fails on the efficient set: " + rep.summary);
    std::ostringstream s;
    s << "price: " << chosen.value.to_string() << " on " << opts.hedge_set << "; dual " << rep.dual.value.to_string()
      << "; " << rep.summary;
    return {std::move(result), s.str()};
}

CommandOutput cmd_partition(const MarketModel& market, const OptionSelection& sel) {
    SchemeResult r = run_partition_scheme(market, sel);
    Json alphas = Json::array();
    for (const auto& a : r.alphas) alphas.push_back(vector_json(a));
    Json a = Json::array();
    Json a_star = Json::array();
    for (const auto& s : r.A) a.push_back(set_json(market, s));
    for (const auto& s : r.A_star) a_star.push_back(set_json(market, s));
    Json result{{"beta", r.beta},
                {"success", r.success},
                {"alphas", std::move(alphas)},
                {"A", std::move(a)},
                {"A_star", std::move(a_star)},
                {"combined_payoff", payoff_json(market, r.combined_payoff)},
                {"combined_strategy", strategy_json(market, r.combined)},
                {"filtration", filtration_json(market, *r.filtration)}};
    std::ostringstream s;
    s << "partition: beta " << r.beta << ", " << (r.success ? "successful" : "not successful") << "; A*_beta "
      << set_summary(market, r.final_efficient_set());
    return {std::move(result), s.str()};
}

CommandOutput cmd_dmw(const MarketModel& market, const Options& opts) {
    if (opts.measure_path.empty()) throw InputError("--measure is required");
    const FiniteMeasure p = load_measure(read_text_file(opts.measure_path), market);
    DmwReport r = dmw_analysis(market, p);
    if (!r.agree || !r.agree_dominated) throw InvariantBreach("DMW equivalences disagree");
    Json result{{"measure", measure_json(market, p)},
                {"U", set_json(market, r.U)},
                {"U_star", set_json(market, r.U_star)},
                {"omega_P", set_json(market, r.omega_P)},
                {"omega_P_star", set_json(market, r.omega_P_star)},
                {"no_classical_arbitrage", r.no_classical_arbitrage},
                {"full_mass_on_efficient", r.full_mass_on_efficient},
                {"equivalent_measure_exists", r.equivalent_measure_exists},
                {"agree", r.agree},
                {"no_strong_arbitrage_on_omega_P", r.no_strong_arbitrage_on_omega_P},
                {"dominated_measure_exists", r.dominated_measure_exists},
                {"agree_dominated", r.agree_dominated}};
    if (r.classical_arbitrage) result["classical_arbitrage"] = strategy_json(market, *r.classical_arbitrage);
    if (r.equivalent_measure) result["equivalent_measure"] = measure_json(market, *r.equivalent_measure);
    std::ostringstream s;
    s << "dmw: agree=" << (r.agree ? "true" : "false") << "; no arbitrage " << r.no_classical_arbitrage
      << ", P((Omega^P)*) = 1 " << r.full_mass_on_efficient << ", equivalent martingale measure "
      << r.equivalent_measure_exists;
    return {std::move(result), s.str()};
}

CommandOutput cmd_check(const MarketModel& market, const OptionSelection& sel, std::uint64_t seed) {
    const auto phi = market.option_payoffs(sel);
    Json checks = Json::object();
    bool all = true;
    auto record = [&](const char* name, bool ok) {
        checks[name] = ok;
        all &= ok;
    };
    record("round_trip", load_market(serialize_market(market)).data() == market.data());

    AggregatorResult agg = build_aggregator(market);
    const ScenarioSet dyn_oracle = efficient_set_oracle(market, {});
    record("aggregator_matches_oracle", agg.efficient_set() == dyn_oracle);
    bool zero_set = is_predictable(market, agg.H_star, *agg.filtration);
    const Payoff gain = strategy_payoff_vector(market, {}, agg.H_star);
    for (ScenarioIndex w : market.omega().members()) {
        zero_set &= sgn(gain[w]) >= 0 && (sgn(gain[w]) == 0) == agg.efficient_set().contains(w);
    }
    record("aggregator_zero_set", zero_set);

    SchemeResult scheme = run_partition_scheme(market, sel);
    CalibratedMeasureProblem problem(market, sel);
    const ScenarioSet oracle = efficient_set_oracle(problem);
    const bool feasible = problem.find_member().has_value();
    const bool strong = detect_strong(market, sel, scheme.filtration).found;
    record("ftap_triangle", scheme.success == feasible && feasible == !strong);
    record("scheme_matches_oracle", scheme.success ? scheme.final_efficient_set() == oracle : oracle.empty());
    auto natural = std::make_shared<const FiltrationPartition>(natural_filtration(market));
    record("one_point_criterion", detect_one_point(market, sel, natural).found == !(oracle == market.omega()));

    const Payoff g = random_payoff(seed, market.num_scenarios());
    DualityReport rep = duality_report(market, sel, g);
    record("duality", rep.gap_zero);
    bool variational = true;
    for (std::size_t n = 0; n < sel.size(); ++n) variational &= variational_identity_check(market, sel, g, n).equal;
    record("variational_identity", variational);
    record("completed_filtration_refines_scheme",
           !feasible || completed_filtration(problem).refines(*scheme.filtration));

    Json result{{"seed", seed}, {"checks", std::move(checks)}, {"all_hold", all}};
    std::ostringstream s;
    s << "check: " << (all ? "all invariants hold" : "INVARIANT VIOLATED");
    if (!all) {
        for (auto it = result["checks"].begin(); it != result["checks"].end(); ++it) {
            if (!it.value().get<bool>()) s << " [" << it.key() << "]";
        }
    }
    return {std::move(result), s.str()};
}

void write_report(const std::string& path, const Json& doc) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << doc.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pointwise arbitrage pricing on finite scenario markets", "pwftap"};
    app.require_subcommand(1);
    Options opts;

    auto add_market = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--market", opts.market_path, "market file");
        if (required) o->required();
    };
    auto add_options = [&](CLI::App* sub) {
        sub->add_option("--options", opts.option_names, "comma-separated option names (default: all)");
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opts.out_path, "path of the JSON report"); };

    auto* ftap = app.add_subcommand("ftap", "arbitrage verdict, efficient set and scheme trace");
    add_market(ftap, true);
    add_options(ftap);
    add_out(ftap);

    auto* price = app.add_subcommand("price", "superhedging price and dual value");
    add_market(price, true);
    add_options(price);
    add_out(price);
    price->add_option("--payoff", opts.payoff, "payoff expression or payoff file")->required();
    price->add_option("--hedge-set", opts.hedge_set, "efficient or omega")
        ->check(CLI::IsMember({"efficient", "omega"}));

    auto* partition = app.add_subcommand("partition", "pathspace partition scheme");
    add_market(partition, true);
    add_options(partition);
    add_out(partition);

    auto* dmw = app.add_subcommand("dmw", "classical FTAP bridge for a reference measure");
    add_market(dmw, true);
    add_out(dmw);
    dmw->add_option("--measure", opts.measure_path, "measure file")->required();

    auto* check = app.add_subcommand("check", "run the invariant suite on a market");
    add_market(check, false);
    add_options(check);
    add_out(check);
    check->add_option("--seed", opts.seed, "seed of a generated market (without --market) and of the test payoff");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "pwftap: " << e.what() << "\n";
        return exit_input_error;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    for (auto* s : {ftap, price, partition, check}) {
        if (s == sub && s->count("--options") > 0) opts.options_given = true;
    }

    try {
        std::optional<MarketModel> market;
        if (!opts.market_path.empty()) {
            market = load_market_file(opts.market_path);
        } else if (opts.seed) {
            market = random_market(*opts.seed);
        } else {
            throw InputError("--market or --seed is required");
        }
        const OptionSelection sel = command == "dmw" ? OptionSelection{} : resolve_options(*market, opts);

        CommandOutput result;
        if (command == "ftap") result = cmd_ftap(*market, sel);
        else if (command == "price") result = cmd_price(*market, sel, opts);
        else if (command == "partition") result = cmd_partition(*market, sel);
        else if (command == "dmw") result = cmd_dmw(*market, opts);
        else result = cmd_check(*market, sel, opts.seed.value_or(1));

        int status = exit_ok;
        if (command == "check" && !result.result["all_hold"].get<bool>()) status = exit_invariant_breach;

        Json doc{{"command", command}, {"market", market_digest(*market, sel)}, {"result", std::move(result.result)},
                 {"exit_status", status}};
        if (!opts.out_path.empty()) write_report(opts.out_path, doc);
        out << result.summary << "\n";
        return status;
    } catch (const InputError& e) {
        err << "pwftap: input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "pwftap: internal invariant breach: " << e.what() << "\n";
        return exit_invariant_breach;
    }
}

}  // namespace pwftap::cli
