#include "sct/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "sct/arcs.hpp"
#include "sct/chartable.hpp"
#include "sct/laurent.hpp"
#include "sct/sequences.hpp"

namespace sct {

namespace {

using nlohmann::ordered_json;

constexpr int partitions_ceiling = 10;
constexpr int table_ceiling = 7;
constexpr int seq_ceiling = 12;

struct CliConfig {
    int n = 0;
    int max_n = 0;
    std::string kind;
    std::string format = "pretty";
    std::optional<long long> q_eval;
    std::string route = "enumerate";
    std::string name;
    bool stats = false;
    bool allow_large = false;
    std::vector<std::string> checks;
    std::string output;
};

int write_output(const CliConfig& cfg, const std::string& text, std::ostream& out,
                 std::ostream& err, int status) {
    if (cfg.output.empty()) {
        out << text;
        return status;
    }
    std::ofstream file(cfg.output);
    if (!file) {
        err << "error: cannot open " << cfg.output << " for writing\n";
        return 2;
    }
    file << text;
    return status;
}

std::string csv_quote(const std::string& s) {
    std::string quoted = "\"";
    for (char c : s)
        quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    quoted += "\"";
    return quoted;
}

std::string key_to_string(const IntPartitionKey& key) {
    std::string s = "[";
    for (size_t i = 0; i < key.size(); ++i) {
        if (i > 0)
            s += ",";
        s += std::to_string(key[i]);
    }
    return s + "]";
}

bool ceiling_ok(const CliConfig& cfg, int value, int ceiling, const std::string& what,
                std::ostream& err) {
    if (value <= ceiling || cfg.allow_large)
        return true;
    err << "error: " << what << "=" << value << " exceeds the built-in ceiling of "
        << ceiling << "; pass --allow-large to override\n";
    return false;
}

int run_partitions(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!ceiling_ok(cfg, cfg.n, partitions_ceiling, "n", err))
        return 2;
    const std::vector<ArcSet> order = enumerate_arc_sets(cfg.n);
    std::ostringstream body;
    if (cfg.format == "pretty") {
        for (size_t i = 0; i < order.size(); ++i) {
            body << i << ": " << order[i].str();
            if (cfg.stats)
                body << "  arcs=" << arc_count(order[i]) << " dim=" << dim_stat(order[i])
                     << " dimv=" << key_to_string(dimv(order[i]))
                     << " rnode=" << key_to_string(rnode(order[i]));
            body << "\n";
        }
    } else if (cfg.format == "csv") {
        body << (cfg.stats ? "index,key,arcs,dim,dimv,rnode" : "index,key") << "\n";
        for (size_t i = 0; i < order.size(); ++i) {
            body << i << "," << csv_quote(order[i].str());
            if (cfg.stats)
                body << "," << arc_count(order[i]) << "," << dim_stat(order[i]) << ","
                     << csv_quote(key_to_string(dimv(order[i]))) << ","
                     << csv_quote(key_to_string(rnode(order[i])));
            body << "\n";
        }
    } else {
        ordered_json rows = ordered_json::array();
        for (size_t i = 0; i < order.size(); ++i) {
            ordered_json row;
            row["index"] = i;
            row["key"] = order[i].str();
            if (cfg.stats) {
                row["arcs"] = arc_count(order[i]);
                row["dim"] = dim_stat(order[i]);
                row["dimv"] = dimv(order[i]);
                row["rnode"] = rnode(order[i]);
            }
            rows.push_back(std::move(row));
        }
        body << rows.dump(2) << "\n";
    }
    return write_output(cfg, body.str(), out, err, 0);
}

int run_table(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!ceiling_ok(cfg, cfg.n, table_ceiling, "n", err))
        return 2;
    const BasisMatrix m = build_matrix(cfg.n, matrix_kind_from_string(cfg.kind));
    const size_t sz = m.order.size();

    std::vector<std::vector<std::string>> cells;
    if (cfg.q_eval) {
        const mpq_class q0(static_cast<long>(*cfg.q_eval));
        cells.assign(sz, {});
        for (size_t r = 0; r < sz; ++r)
            for (const LaurentPoly& e : m.entries[r])
                cells[r].push_back(lp_eval(e, q0).get_str());
    } else {
        cells.assign(sz, {});
        for (size_t r = 0; r < sz; ++r)
            for (const LaurentPoly& e : m.entries[r])
                cells[r].push_back(lp_to_string(e));
    }

    std::ostringstream body;
    if (cfg.format == "csv") {
        body << to_string(m.kind);
        if (cfg.q_eval)
            body << " at q=" << *cfg.q_eval;
        for (const ArcSet& col : m.order)
            body << "," << csv_quote(col.str());
        body << "\n";
        for (size_t r = 0; r < sz; ++r) {
            body << csv_quote(m.order[r].str());
            for (const std::string& cell : cells[r])
                body << "," << cell;
            body << "\n";
        }
    } else if (cfg.format == "json") {
        if (cfg.q_eval) {
            ordered_json j;
            j["n"] = m.n;
            j["kind"] = to_string(m.kind);
            j["q"] = *cfg.q_eval;
            ordered_json order = ordered_json::array();
            for (const ArcSet& s : m.order)
                order.push_back(s.str());
            j["order"] = std::move(order);
            j["entries"] = cells;
            body << j.dump(2) << "\n";
        } else {
            body << matrix_to_json(m).dump(2) << "\n";
        }
    } else {
        std::string corner = to_string(m.kind);
        if (cfg.q_eval)
            corner += " at q=" + std::to_string(*cfg.q_eval);
        std::vector<size_t> width(sz + 1, corner.size());
        for (size_t c = 0; c < sz; ++c)
            width[c + 1] = m.order[c].str().size();
        for (size_t r = 0; r < sz; ++r) {
            width[0] = std::max(width[0], m.order[r].str().size());
            for (size_t c = 0; c < sz; ++c)
                width[c + 1] = std::max(width[c + 1], cells[r][c].size());
        }
        auto pad = [&](const std::string& s, size_t w) {
            return s + std::string(w - s.size(), ' ');
        };
        body << pad(corner, width[0]);
        for (size_t c = 0; c < sz; ++c)
            body << "  " << pad(m.order[c].str(), width[c + 1]);
        body << "\n";
        for (size_t r = 0; r < sz; ++r) {
            body << pad(m.order[r].str(), width[0]);
            for (size_t c = 0; c < sz; ++c)
                body << "  " << pad(cells[r][c], width[c + 1]);
            body << "\n";
        }
    }
    return write_output(cfg, body.str(), out, err, 0);
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!ceiling_ok(cfg, cfg.n, table_ceiling, "n", err))
        return 2;
    const VerifyReport rep = verify_decomposition(cfg.n);
    const std::vector<SeqCheck> seq_checks =
        cfg.n >= 1 ? reconcile_sequences(cfg.n) : std::vector<SeqCheck>{};

    ordered_json checks = ordered_json::array();
    std::vector<std::string> names;
    std::vector<bool> passed;
    for (const CheckResult& c : rep.checks) {
        ordered_json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        if (c.counterexample) {
            j["counterexample"] = {{"row", c.counterexample->row_key},
                                   {"col", c.counterexample->col_key},
                                   {"expected", c.counterexample->expected},
                                   {"actual", c.counterexample->actual}};
        }
        checks.push_back(std::move(j));
        names.push_back(c.name);
        passed.push_back(c.passed);
    }
    for (const SeqCheck& c : seq_checks) {
        ordered_json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["detail"] = c.detail;
        checks.push_back(std::move(j));
        names.push_back(c.name);
        passed.push_back(c.passed);
    }

    std::vector<bool> selected(names.size(), true);
    if (!cfg.checks.empty()) {
        selected.assign(names.size(), false);
        for (const std::string& want : cfg.checks) {
            bool found = false;
            for (size_t i = 0; i < names.size(); ++i)
                if (names[i] == want) {
                    selected[i] = true;
                    found = true;
                }
            if (!found) {
                err << "error: unknown check name: " << want << "\n";
                return 2;
            }
        }
        ordered_json filtered = ordered_json::array();
        for (size_t i = 0; i < names.size(); ++i)
            if (selected[i])
                filtered.push_back(checks[i]);
        checks = std::move(filtered);
    }

    bool all_passed = true;
    for (size_t i = 0; i < names.size(); ++i)
        if (selected[i] && !passed[i])
            all_passed = false;

    ordered_json j;
    j["n"] = cfg.n;
    j["all_passed"] = all_passed;
    j["checks"] = std::move(checks);
    return write_output(cfg, j.dump(2) + "\n", out, err, all_passed ? 0 : 1);
}

int run_det(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!ceiling_ok(cfg, cfg.n, table_ceiling, "n", err))
        return 2;
    const LaurentPoly product = determinant(cfg.n);
    const LaurentPoly formula = determinant_formula(cfg.n);
    const bool symbolic_ok = product == formula;

    const long long q0 = cfg.q_eval.value_or(2);
    const mpz_class numeric = table_determinant_at(cfg.n, mpz_class(static_cast<long>(q0)));
    const mpq_class evaluated = lp_eval(product, mpq_class(static_cast<long>(q0)));
    const bool numeric_ok = evaluated == mpq_class(numeric);

    std::ostringstream body;
    if (cfg.format == "json") {
        ordered_json j;
        j["n"] = cfg.n;
        j["determinant"] = lp_to_string(product);
        j["formula"] = lp_to_string(formula);
        j["symbolic_match"] = symbolic_ok;
        j["q"] = q0;
        j["determinant_at_q"] = evaluated.get_str();
        j["table_determinant_at_q"] = numeric.get_str();
        j["numeric_match"] = numeric_ok;
        body << j.dump(2) << "\n";
    } else {
        body << "det(n=" << cfg.n << ") = " << lp_to_string(product) << "\n";
        body << "closed form = " << lp_to_string(formula) << "\n";
        body << "symbolic match: " << (symbolic_ok ? "yes" : "no") << "\n";
        body << "numeric at q=" << q0 << ": " << evaluated.get_str() << " vs "
             << numeric.get_str() << " -> " << (numeric_ok ? "match" : "MISMATCH")
             << "\n";
    }
    return write_output(cfg, body.str(), out, err, symbolic_ok && numeric_ok ? 0 : 1);
}

struct SeqRow {
    std::vector<int> subscript;  // n, or (n, k), or (n, k, j)
    std::optional<mpz_class> enumerate;
    std::optional<mpz_class> formula;
};

int run_seq(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const bool touches_enumeration =
        cfg.name == "arcs" || cfg.name == "dim" || cfg.name == "nst" ||
        (cfg.name == "b3" && cfg.route != "formula");
    if (touches_enumeration && !ceiling_ok(cfg, cfg.max_n, seq_ceiling, "max-n", err))
        return 2;

    const bool want_enum = cfg.route != "formula";
    const bool want_formula = cfg.route != "enumerate";
    std::vector<SeqRow> rows;

    if (cfg.name == "bell") {
        for (int n = 0; n <= cfg.max_n; ++n)
            rows.push_back({{n}, bell(n), std::nullopt});
    } else if (cfg.name == "aitken") {
        if (cfg.max_n >= 1) {
            const AitkenTable table = aitken(cfg.max_n);
            for (int n = 1; n <= cfg.max_n; ++n)
                for (int k = 1; k <= n; ++k)
                    rows.push_back({{n, k}, table.at(n, k), std::nullopt});
        }
    } else if (cfg.name == "b3") {
        std::optional<NestTable> rec;
        if (want_formula && cfg.max_n >= 3)
            rec = b3_recursion(cfg.max_n);
        for (int n = 3; n <= cfg.max_n; ++n) {
            const auto counts = want_enum ? b3_count_table(n)
                                          : std::vector<std::vector<mpz_class>>{};
            for (int j = 1; j <= n - 2; ++j)
                for (int k = j + 1; k <= n - 1; ++k) {
                    SeqRow row{{n, k, j}, std::nullopt, std::nullopt};
                    if (want_enum)
                        row.enumerate = counts[k][j];
                    if (want_formula)
                        row.formula = rec->at(n, k, j);
                    rows.push_back(std::move(row));
                }
        }
    } else {
        mpz_class (*fn)(int, SeqRoute) = cfg.name == "arcs"  ? arcs_seq
                                         : cfg.name == "dim" ? dim_seq
                                                             : nst_seq;
        for (int n = 1; n <= cfg.max_n; ++n) {
            SeqRow row{{n}, std::nullopt, std::nullopt};
            if (want_enum)
                row.enumerate = fn(n, SeqRoute::enumerate);
            if (want_formula)
                row.formula = fn(n, SeqRoute::formula);
            rows.push_back(std::move(row));
        }
    }

    const bool both = want_enum && want_formula && cfg.name != "bell" &&
                      cfg.name != "aitken";
    auto value_of = [&](const SeqRow& r) { return r.enumerate ? *r.enumerate : *r.formula; };
    auto subscript_csv = [](const SeqRow& r) {
        std::string s;
        for (size_t i = 0; i < r.subscript.size(); ++i)
            s += (i > 0 ? "," : "") + std::to_string(r.subscript[i]);
        return s;
    };

    std::ostringstream body;
    if (cfg.format == "csv") {
        const char* head = cfg.name == "aitken" ? "n,k" : cfg.name == "b3" ? "n,k,j" : "n";
        body << head << (both ? ",enumerate,formula,match" : ",value") << "\n";
        for (const SeqRow& r : rows) {
            body << subscript_csv(r);
            if (both)
                body << "," << r.enumerate->get_str() << "," << r.formula->get_str()
                     << "," << (*r.enumerate == *r.formula ? "true" : "false");
            else
                body << "," << value_of(r).get_str();
            body << "\n";
        }
    } else if (cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const SeqRow& r : rows) {
            ordered_json j;
            j["n"] = r.subscript[0];
            if (r.subscript.size() > 1)
                j["k"] = r.subscript[1];
            if (r.subscript.size() > 2)
                j["j"] = r.subscript[2];
            if (both) {
                j["enumerate"] = r.enumerate->get_str();
                j["formula"] = r.formula->get_str();
                j["match"] = *r.enumerate == *r.formula;
            } else {
                j["value"] = value_of(r).get_str();
            }
            arr.push_back(std::move(j));
        }
        body << arr.dump(2) << "\n";
    } else if (cfg.name == "aitken") {
        int current = 0;
        for (const SeqRow& r : rows) {
            if (r.subscript[0] != current) {
                if (current != 0)
                    body << "\n";
                current = r.subscript[0];
            } else {
                body << " ";
            }
            body << value_of(r).get_str();
        }
        if (current != 0)
            body << "\n";
    } else {
        for (const SeqRow& r : rows) {
            body << cfg.name << "(" << subscript_csv(r) << ")";
            if (both)
                body << ": enumerate=" << r.enumerate->get_str()
                     << " formula=" << r.formula->get_str() << " match="
                     << (*r.enumerate == *r.formula ? "true" : "false");
            else
                body << " = " << value_of(r).get_str();
            body << "\n";
        }
    }
    return write_output(cfg, body.str(), out, err, 0);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Exact supercharacter tables of the finite unitriangular groups"};
    app.name("sct");
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"pretty", "csv", "json"};
    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--output", cfg.output, "Write to a file instead of stdout");
        sub->add_flag("--allow-large", cfg.allow_large, "Lift the built-in size ceilings");
        if (with_format)
            sub->add_option("--format", cfg.format, "Output format")
                ->check(CLI::IsMember(formats))
                ->capture_default_str();
    };

    CLI::App* partitions =
        app.add_subcommand("partitions", "List set partitions of [n] in the canonical order");
    partitions->add_option("-n,--n", cfg.n, "Number of nodes")
        ->required()
        ->check(CLI::NonNegativeNumber);
    partitions->add_flag("--stats", cfg.stats, "Include arc count, dim, dimv and rnode");
    add_common(partitions);

    CLI::App* table = app.add_subcommand("table", "Print a basis-change table");
    table->add_option("-n,--n", cfg.n, "Number of nodes")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table->add_option("--kind", cfg.kind, "Which table to build")
        ->required()
        ->check(CLI::IsMember({"chi-kappa", "rho-kappa", "kappa-rho", "chi-rho"}));
    table->add_option("--q", cfg.q_eval, "Evaluate entries at this integer value of q");
    add_common(table);

    CLI::App* verify =
        app.add_subcommand("verify", "Run the decomposition and sequence checks");
    verify->add_option("-n,--n", cfg.n, "Number of nodes")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--checks", cfg.checks, "Comma-separated subset of checks to run")
        ->delimiter(',');
    add_common(verify, false);

    CLI::App* det = app.add_subcommand("det", "Determinant of the supercharacter table");
    det->add_option("-n,--n", cfg.n, "Number of nodes")
        ->required()
        ->check(CLI::NonNegativeNumber);
    det->add_option("--q", cfg.q_eval, "Integer value of q for the numeric cross-check");
    det->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"pretty", "json"}))
        ->capture_default_str();
    det->add_option("--output", cfg.output, "Write to a file instead of stdout");
    det->add_flag("--allow-large", cfg.allow_large, "Lift the built-in size ceilings");

    CLI::App* seq = app.add_subcommand("seq", "Statistic sequences and counting tables");
    seq->add_option("--name", cfg.name, "Which sequence to print")
        ->required()
        ->check(CLI::IsMember({"arcs", "dim", "nst", "bell", "aitken", "b3"}));
    seq->add_option("--max-n", cfg.max_n, "Largest n to include")
        ->required()
        ->check(CLI::NonNegativeNumber);
    seq->add_option("--route", cfg.route, "Evaluation route")
        ->check(CLI::IsMember({"enumerate", "formula", "both"}))
        ->capture_default_str();
    add_common(seq);

    try {
        std::vector<const char*> argv;
        argv.push_back("sct");
        for (const std::string& a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(partitions))
            return run_partitions(cfg, out, err);
        if (app.got_subcommand(table))
            return run_table(cfg, out, err);
        if (app.got_subcommand(verify))
            return run_verify(cfg, out, err);
        if (app.got_subcommand(det))
            return run_det(cfg, out, err);
        return run_seq(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace sct
