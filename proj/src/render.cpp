#include "starsym/render.hpp"

#include "starsym/generators.hpp"
#include "starsym/normalform.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <iomanip>

namespace starsym {

namespace {

using nlohmann::json;

enum class Format { text, json_fmt, csv };

Format parse_format(const std::string& format) {
    if (format == "text") return Format::text;
    if (format == "json") return Format::json_fmt;
    if (format == "csv") return Format::csv;
    throw invalid_input("invalid-range: format must be text, json or csv");
}

json params_json(const StarParams& p) {
    return json{{"s", p.s}, {"c", p.c}, {"m", p.m}, {"delta", p.delta}};
}

std::string exponent_tuple(const FMonomial& M) {
    std::string out = "[";
    for (std::size_t j = 0; j < M.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(M[j]);
    }
    return out + "]";
}

}  // namespace

std::string factored_form(const FMonomial& M) {
    std::string out;
    for (const FormSubset& layer : normal_form(M)) {
        out += "(";
        bool first = true;
        for (int j : layer.indices()) {
            if (!first) out += " ";
            out += "F" + std::to_string(j);
            first = false;
        }
        out += ")";
    }
    return out;
}

std::string render_generators(const StarParams& params,
                              const std::vector<FMonomial>& gens, bool module_only,
                              const std::string& format) {
    switch (parse_format(format)) {
        case Format::text: {
            std::ostringstream out;
            for (const FMonomial& g : gens)
                out << exponent_tuple(g) << "\t" << factored_form(g) << "\n";
            return out.str();
        }
        case Format::json_fmt: {
            json doc;
            doc["schema"] = "starsym/1";
            doc["command"] = "gens";
            doc["params"] = params_json(params);
            doc["params"]["module"] = module_only;
            doc["count"] = std::to_string(gens.size());
            doc["generators"] = json::array();
            for (const FMonomial& g : gens) {
                long long d = fdegree(g);
                doc["generators"].push_back(
                    json{{"exponents", g},
                         {"fdegree", d},
                         {"degree", d * params.delta},
                         {"factored", factored_form(g)}});
            }
            return doc.dump(2) + "\n";
        }
        case Format::csv: {
            std::ostringstream out;
            out << "exponents,fdegree,degree,factored\n";
            for (const FMonomial& g : gens) {
                std::string exps;
                for (std::size_t j = 0; j < g.size(); ++j) {
                    if (j) exps += " ";
                    exps += std::to_string(g[j]);
                }
                long long d = fdegree(g);
                out << exps << "," << d << "," << d * params.delta << ","
                    << factored_form(g) << "\n";
            }
            return out.str();
        }
    }
    throw check_failure("unreachable format");
}

std::string render_invariants(const StarParams& params, const std::string& format) {
    Format fmt = parse_format(format);
    params.validate();
    const Int mu_val = mu(params);
    const Int sdefect_val = sdefect(params);
    const long long reg = regularity(params);
    const int t_min = (params.m + params.c - 1) / params.c;
    struct Row {
        int t;
        long long degree;
        Int count;
    };
    std::vector<Row> rows;
    for (int t = t_min; t <= params.m; ++t) {
        long long fdeg = static_cast<long long>(t) * (params.s - params.c) + params.m;
        rows.push_back({t, fdeg * params.delta, count_generators_in_degree(params, t)});
    }
    switch (fmt) {
        case Format::text: {
            std::ostringstream out;
            out << "s          " << params.s << "\n";
            out << "c          " << params.c << "\n";
            out << "m          " << params.m << "\n";
            out << "delta      " << params.delta << "\n";
            out << "mu         " << mu_val << "\n";
            out << "sdefect    " << sdefect_val << "\n";
            out << "regularity " << reg << "\n";
            for (const Row& row : rows)
                out << "degree t=" << row.t << " deg=" << row.degree << " count="
                    << row.count << "\n";
            return out.str();
        }
        case Format::json_fmt: {
            json doc;
            doc["schema"] = "starsym/1";
            doc["command"] = "invariants";
            doc["params"] = params_json(params);
            doc["mu"] = mu_val.str();
            doc["sdefect"] = sdefect_val.str();
            doc["regularity"] = reg;
            doc["degrees"] = json::array();
            for (const Row& row : rows)
                doc["degrees"].push_back(
                    json{{"t", row.t}, {"degree", row.degree}, {"count", row.count.str()}});
            return doc.dump(2) + "\n";
        }
        case Format::csv: {
            std::ostringstream out;
            out << "key,value\n";
            out << "s," << params.s << "\n";
            out << "c," << params.c << "\n";
            out << "m," << params.m << "\n";
            out << "delta," << params.delta << "\n";
            out << "mu," << mu_val << "\n";
            out << "sdefect," << sdefect_val << "\n";
            out << "regularity," << reg << "\n";
            for (const Row& row : rows)
                out << "count_t" << row.t << "," << row.count << "\n";
            return out.str();
        }
    }
    throw check_failure("unreachable format");
}

std::string render_betti(const BettiTable& table, const std::string& format) {
    Format fmt = parse_format(format);
    switch (fmt) {
        case Format::text: {
            // Columns are homological degrees, rows are j - i, zero printed as
            // a dot; the layout of the usual Betti table displays.
            int max_i = 0;
            std::set<long long> row_set;
            for (const auto& [key, value] : table.entries) {
                max_i = std::max(max_i, key.first);
                row_set.insert(key.second - key.first);
            }
            std::map<std::pair<int, long long>, std::string> text;
            std::size_t width = 1;
            for (const auto& [key, value] : table.entries) {
                std::string v = value.str();
                width = std::max(width, v.size());
                text[key] = std::move(v);
            }
            std::size_t label = 1;
            for (long long row : row_set)
                label = std::max(label, std::to_string(row).size());
            std::ostringstream out;
            out << std::setw(static_cast<int>(label) + 1) << " ";
            for (int i = 0; i <= max_i; ++i)
                out << " " << std::setw(static_cast<int>(width)) << i;
            out << "\n";
            for (long long row : row_set) {
                out << std::setw(static_cast<int>(label)) << row << ":";
                for (int i = 0; i <= max_i; ++i) {
                    auto it = text.find({i, row + i});
                    out << " "
                        << std::setw(static_cast<int>(width))
                        << (it == text.end() ? "." : it->second);
                }
                out << "\n";
            }
            return out.str();
        }
        case Format::json_fmt: {
            json doc;
            doc["schema"] = "starsym/1";
            doc["command"] = "betti";
            if (table.params) {
                doc["params"] = params_json(*table.params);
                doc["regularity"] = regularity(*table.params);
                doc["koszul_stranded"] = is_koszul_stranded(table);
            }
            doc["entries"] = json::array();
            for (const auto& [key, value] : table.entries)
                doc["entries"].push_back(json{{"i", key.first},
                                              {"j", key.second},
                                              {"row", key.second - key.first},
                                              {"beta", value.str()}});
            return doc.dump(2) + "\n";
        }
        case Format::csv: {
            std::ostringstream out;
            out << "i,j,row,beta\n";
            for (const auto& [key, value] : table.entries)
                out << key.first << "," << key.second << ","
                    << key.second - key.first << "," << value << "\n";
            return out.str();
        }
    }
    throw check_failure("unreachable format");
}

}  // namespace starsym
