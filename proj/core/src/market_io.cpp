#include "pwftap/market_io.hpp"

#include "pwftap/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace pwftap {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        throw ParseError(line_column(text, byte), "malformed document");
    }
}

void reject_unknown(const json& object, const std::set<std::string>& allowed, const std::string& path) {
    for (auto it = object.begin(); it != object.end(); ++it) {
        if (!allowed.contains(it.key())) throw ParseError(path + "." + it.key(), "unknown field");
    }
}

const json& require_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    return j;
}

const json& require_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected a list");
    return j;
}

Rational read_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rational(std::to_string(j.get<std::uint64_t>()))
                                      : Rational(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(path, e.what());
        }
    }
    if (j.is_number_float()) throw ParseError(path, "floating-point literal; write the rational as a \"p/q\" string");
    throw ParseError(path, "expected a rational");
}

std::size_t read_count(const json& j, const std::string& path) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
        throw ParseError(path, "expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

std::string read_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path, "expected a string");
    return j.get<std::string>();
}

std::vector<std::vector<Rational>> read_matrix(const json& j, const std::string& path) {
    require_array(j, path);
    std::vector<std::vector<Rational>> out;
    for (std::size_t t = 0; t < j.size(); ++t) {
        std::string row_path = path + "[" + std::to_string(t) + "]";
        require_array(j[t], row_path);
        std::vector<Rational> row;
        for (std::size_t a = 0; a < j[t].size(); ++a) {
            row.push_back(read_rational(j[t][a], row_path + "[" + std::to_string(a) + "]"));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Payoff read_scenario_map(const json& j, const MarketData& data, const std::string& path, bool require_all) {
    require_object(j, path);
    Payoff out(data.scenarios.size());
    std::vector<bool> seen(data.scenarios.size(), false);
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t w = data.scenarios.size();
        for (std::size_t i = 0; i < data.scenarios.size(); ++i) {
            if (data.scenarios[i].id == it.key()) {
                w = i;
                break;
            }
        }
        if (w == data.scenarios.size()) throw ParseError(path + "." + it.key(), "unknown scenario id");
        out[w] = read_rational(it.value(), path + "." + it.key());
        seen[w] = true;
    }
    if (require_all) {
        for (std::size_t w = 0; w < seen.size(); ++w) {
            if (!seen[w]) {
                throw ValidationError(path + ": missing entry for scenario '" + data.scenarios[w].id + "'");
            }
        }
    }
    return out;
}

ordered_json matrix_json(const std::vector<std::vector<Rational>>& m) {
    ordered_json out = ordered_json::array();
    for (const auto& row : m) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

MarketModel load_market(std::string_view text) {
    json doc = parse_document(text);
    require_object(doc, "$");
    reject_unknown(doc, {"T", "d", "d_factors", "scenarios", "omega", "options"}, "$");
    for (const char* key : {"T", "d", "scenarios"}) {
        if (!doc.contains(key)) throw ParseError(std::string("$.") + key, "missing required field");
    }

    MarketData data;
    data.horizon = read_count(doc["T"], "$.T");
    data.num_assets = read_count(doc["d"], "$.d");
    data.num_factors = doc.contains("d_factors") ? read_count(doc["d_factors"], "$.d_factors") : 0;

    const json& scenarios = require_array(doc["scenarios"], "$.scenarios");
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        std::string path = "$.scenarios[" + std::to_string(i) + "]";
        const json& s = require_object(scenarios[i], path);
        reject_unknown(s, {"id", "S", "Y"}, path);
        if (!s.contains("id")) throw ParseError(path + ".id", "missing required field");
        if (!s.contains("S")) throw ParseError(path + ".S", "missing required field");
        ScenarioPath scenario;
        scenario.id = read_string(s["id"], path + ".id");
        scenario.prices = read_matrix(s["S"], path + ".S");
        if (s.contains("Y")) {
            scenario.factors = read_matrix(s["Y"], path + ".Y");
        } else if (data.num_factors == 0) {
            scenario.factors.assign(data.horizon + 1, {});
        } else {
            throw ParseError(path + ".Y", "missing required field (d_factors > 0)");
        }
        data.scenarios.push_back(std::move(scenario));
    }

    if (doc.contains("omega")) {
        const json& omega = require_array(doc["omega"], "$.omega");
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < omega.size(); ++i) {
            ids.push_back(read_string(omega[i], "$.omega[" + std::to_string(i) + "]"));
        }
        data.omega = std::move(ids);
    }

    if (doc.contains("options")) {
        const json& options = require_array(doc["options"], "$.options");
        for (std::size_t i = 0; i < options.size(); ++i) {
            std::string path = "$.options[" + std::to_string(i) + "]";
            const json& o = require_object(options[i], path);
            reject_unknown(o, {"name", "payoff"}, path);
            if (!o.contains("name")) throw ParseError(path + ".name", "missing required field");
            if (!o.contains("payoff")) throw ParseError(path + ".payoff", "missing required field");
            Option option;
            option.name = read_string(o["name"], path + ".name");
            option.payoff = read_scenario_map(o["payoff"], data, path + ".payoff", /*require_all=*/true);
            data.options.push_back(std::move(option));
        }
    }
    return MarketModel::create(std::move(data));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

MarketModel load_market_file(const std::string& path) {
    return load_market(read_text_file(path));
}

std::string serialize_market(const MarketModel& market) {
    const MarketData& data = market.data();
    ordered_json doc;
    doc["T"] = data.horizon;
    doc["d"] = data.num_assets;
    doc["d_factors"] = data.num_factors;
    ordered_json scenarios = ordered_json::array();
    for (const auto& s : data.scenarios) {
        ordered_json entry;
        entry["id"] = s.id;
        entry["S"] = matrix_json(s.prices);
        entry["Y"] = matrix_json(s.factors);
        scenarios.push_back(std::move(entry));
    }
    doc["scenarios"] = std::move(scenarios);
    if (data.omega) doc["omega"] = *data.omega;
    ordered_json options = ordered_json::array();
    for (const auto& o : data.options) {
        ordered_json payoff = ordered_json::object();
        for (std::size_t w = 0; w < o.payoff.size(); ++w) payoff[data.scenarios[w].id] = to_string(o.payoff[w]);
        options.push_back(ordered_json{{"name", o.name}, {"payoff", std::move(payoff)}});
    }
    doc["options"] = std::move(options);
    return doc.dump(2) + "\n";
}

FiniteMeasure load_measure(std::string_view text, const MarketModel& market) {
    json doc = parse_document(text);
    require_object(doc, "$");
    reject_unknown(doc, {"weights"}, "$");
    if (!doc.contains("weights")) throw ParseError("$.weights", "missing required field");
    Payoff weights = read_scenario_map(doc["weights"], market.data(), "$.weights", /*require_all=*/false);
    return FiniteMeasure(std::move(weights));
}

Payoff load_payoff(std::string_view text, const MarketModel& market) {
    json doc = parse_document(text);
    require_object(doc, "$");
    reject_unknown(doc, {"payoff"}, "$");
    if (!doc.contains("payoff")) throw ParseError("$.payoff", "missing required field");
    return read_scenario_map(doc["payoff"], market.data(), "$.payoff", /*require_all=*/true);
}

}  // namespace pwftap
