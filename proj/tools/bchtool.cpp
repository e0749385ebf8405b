// Command-line front end: single dimension/Bose queries, coset inspection,
// parameter tables, and the exhaustive verification sweeps.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bch/bose.hpp"
#include "bch/nonnarrow.hpp"
#include "bch/reference.hpp"
#include "bch/verify.hpp"

namespace {

using bch::Int;
using json = nlohmann::ordered_json;

constexpr int kExitBadParams = 1;
constexpr int kExitMismatch = 2;

// JSON number when it fits a 64-bit signed, decimal string beyond.
json json_int(Int v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
    return bch::to_string(v);
}

struct CodeArgs {
    std::string q = "3", m = "4", lambda = "1";

    bch::BchParams params() const {
        return bch::make_params(bch::parse_int(q), bch::parse_int(m), bch::parse_int(lambda));
    }
};

void add_code_flags(CLI::App* cmd, CodeArgs& args) {
    cmd->add_option("--q", args.q, "field size (prime power)")->required();
    cmd->add_option("--m", args.m, "extension degree")->required();
    cmd->add_option("--lambda", args.lambda, "divisor of q-1; length is (q^m-1)/lambda");
}

void print_record(const json& record, const std::string& format) {
    if (format == "json") {
        std::cout << record.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : record.items()) {
        std::cout << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    }
}

std::string csv_field(const json& value) {
    std::string s = value.is_string() ? value.get<std::string>() : value.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

int run_dim_or_bose(const CodeArgs& code, const std::string& delta_s, const std::string& b_s,
                    bool oracle, const std::string& format, bool want_bose) {
    bch::BchParams p = code.params();
    Int delta = bch::parse_int(delta_s);
    Int b = bch::parse_int(b_s);
    json record;
    record["q"] = json_int(p.q);
    record["m"] = json_int(p.m);
    record["lambda"] = json_int(p.lambda);
    record["n"] = json_int(p.n);
    record["delta"] = json_int(delta);
    record["b"] = json_int(b);
    Int value = 0;
    if (oracle) {
        value = want_bose ? bch::bose_oracle(p, delta, b) : bch::dimension_oracle(p, delta, b);
    } else if (b == 1) {
        value = want_bose ? bch::bose_distance(p, delta) : bch::dimension(p, delta);
    } else {
        value = want_bose ? bch::nonnarrow_bose(p, delta, b) : bch::nonnarrow_dimension(p, delta, b);
    }
    record[want_bose ? "bose" : "dim"] = json_int(value);
    record["method"] = oracle ? "oracle" : "closed-form";
    print_record(record, format);
    return 0;
}

int run_table(const CodeArgs& code, const std::string& dmin_s, const std::string& dmax_s,
              const std::string& format) {
    bch::BchParams p = code.params();
    Int dmin = bch::parse_int(dmin_s);
    Int dmax = bch::parse_int(dmax_s);
    Int dim_top = bch::delta_max_dimension(p);
    Int bose_top = bch::delta_max_bose(p);
    if (dmin < 2 || dmin > dmax || dmax > dim_top) {
        std::cerr << "table: delta range must lie in [2, " << dim_top
                  << "] (proven dimension range for these parameters)\n";
        return kExitBadParams;
    }
    if (format == "csv") std::cout << "q,m,lambda,n,delta,dim,bose,merged_with\n";
    for (Int delta = dmin; delta <= dmax; ++delta) {
        json row;
        row["q"] = json_int(p.q);
        row["m"] = json_int(p.m);
        row["lambda"] = json_int(p.lambda);
        row["n"] = json_int(p.n);
        row["delta"] = json_int(delta);
        row["dim"] = json_int(bch::dimension(p, delta));
        json bose;  // null when delta is past the proven Bose range
        json merged;
        if (delta <= bose_top) {
            Int db = bch::bose_distance(p, delta);
            bose = json_int(db);
            if (delta % p.q == 0)
                merged = bch::to_string(delta) + "--" + bch::to_string(db);
        }
        row["bose"] = bose;
        row["merged_with"] = merged;
        if (format == "csv") {
            std::string out;
            bool first = true;
            for (const auto& [key, value] : row.items()) {
                (void)key;
                if (!first) out += ",";
                first = false;
                if (!value.is_null()) out += csv_field(value);
            }
            std::cout << out << "\n";
        } else {
            if (merged.is_null()) row.erase("merged_with");
            std::cout << row.dump() << "\n";
        }
    }
    return 0;
}

int run_coset(const std::string& q_s, const std::string& n_s, const std::string& a_s,
              const std::string& format) {
    Int q = bch::parse_int(q_s);
    Int n = bch::parse_int(n_s);
    Int a = bch::parse_int(a_s);
    bch::CosetSummary summary = bch::coset(a, n, q);
    json record;
    record["q"] = json_int(q);
    record["n"] = json_int(n);
    record["a"] = json_int(a);
    record["leader"] = json_int(summary.leader);
    record["size"] = json_int(summary.size);
    json members = json::array();
    for (Int x : summary.members) members.push_back(json_int(x));
    record["members"] = members;
    print_record(record, format);
    return 0;
}

int report_mismatches(const std::vector<std::string>& bad, const std::string& what) {
    if (bad.empty()) {
        std::cout << what << ": ok, zero mismatches\n";
        return 0;
    }
    for (const std::string& line : bad) std::cout << line << "\n";
    std::cout << what << ": " << bad.size() << " mismatch(es)\n";
    return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimension and Bose distance of BCH codes of length (q^m-1)/lambda"};
    app.require_subcommand(1);

    CodeArgs dim_code, bose_code, table_code;
    std::string dim_delta, dim_b = "1", dim_format = "json";
    bool dim_oracle = false;
    CLI::App* dim = app.add_subcommand("dim", "dimension of one code");
    add_code_flags(dim, dim_code);
    dim->add_option("--delta", dim_delta, "designed distance")->required();
    dim->add_option("--b", dim_b, "starting exponent (1 = narrow sense)");
    dim->add_flag("--oracle", dim_oracle, "use the brute-force coset oracle");
    dim->add_option("--format", dim_format)->check(CLI::IsMember({"json", "text"}));

    std::string bose_delta, bose_b = "1", bose_format = "json";
    bool bose_oracle_flag = false;
    CLI::App* bose = app.add_subcommand("bose", "Bose distance of one code");
    add_code_flags(bose, bose_code);
    bose->add_option("--delta", bose_delta, "designed distance")->required();
    bose->add_option("--b", bose_b, "starting exponent (1 = narrow sense)");
    bose->add_flag("--oracle", bose_oracle_flag, "use the brute-force coset oracle");
    bose->add_option("--format", bose_format)->check(CLI::IsMember({"json", "text"}));

    std::string coset_q, coset_n, coset_a, coset_format = "text";
    CLI::App* coset_cmd = app.add_subcommand("coset", "q-cyclotomic coset of a modulo n");
    coset_cmd->add_option("--q", coset_q)->required();
    coset_cmd->add_option("--n", coset_n)->required();
    coset_cmd->add_option("--a", coset_a)->required();
    coset_cmd->add_option("--format", coset_format)->check(CLI::IsMember({"json", "text"}));

    std::string table_dmin, table_dmax, table_format = "csv";
    CLI::App* table = app.add_subcommand("table", "dimension/Bose table over a delta range");
    add_code_flags(table, table_code);
    table->add_option("--delta-min", table_dmin)->required();
    table->add_option("--delta-max", table_dmax)->required();
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

    std::string vq_max = "9", vm_min = "4", vm_max = "8", vn_limit = "1048576";
    int v_parallel = 0;
    CLI::App* verify = app.add_subcommand("verify", "closed forms vs oracle over a parameter grid");
    verify->add_option("--q-max", vq_max, "largest field size to sweep");
    verify->add_option("--m-min", vm_min, "smallest extension degree");
    verify->add_option("--m-max", vm_max, "largest extension degree");
    verify->add_option("--modulus-limit", vn_limit, "keep q^m-1 at or below this");
    verify->add_option("--parallel", v_parallel, "worker threads (default: BCH_PARALLEL or hardware)");

    std::string lemmas_grid = "full";
    int l_parallel = 0;
    CLI::App* lemmas = app.add_subcommand("lemmas", "floor-sum identities, band structure, counts");
    lemmas->add_option("--grid", lemmas_grid)->check(CLI::IsMember({"small", "full"}));
    lemmas->add_option("--parallel", l_parallel, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dim->parsed())
            return run_dim_or_bose(dim_code, dim_delta, dim_b, dim_oracle, dim_format, false);
        if (bose->parsed())
            return run_dim_or_bose(bose_code, bose_delta, bose_b, bose_oracle_flag, bose_format, true);
        if (coset_cmd->parsed()) return run_coset(coset_q, coset_n, coset_a, coset_format);
        if (table->parsed()) return run_table(table_code, table_dmin, table_dmax, table_format);
        if (verify->parsed()) {
            bch::Grid grid;
            grid.q_max = bch::parse_int(vq_max);
            grid.m_min = bch::parse_int(vm_min);
            grid.m_max = bch::parse_int(vm_max);
            grid.modulus_limit = bch::parse_int(vn_limit);
            if (grid.m_min < 4) {
                std::cerr << "verify: the theorems need m >= 4\n";
                return kExitBadParams;
            }
            int workers = bch::resolve_workers(v_parallel);
            std::vector<std::string> bad = bch::verify_dimension_bose(grid, workers);
            auto more = bch::verify_fast_paths(grid, workers);
            bad.insert(bad.end(), more.begin(), more.end());
            more = bch::verify_nonnarrow(grid, workers);
            bad.insert(bad.end(), more.begin(), more.end());
            return report_mismatches(bad, "verify");
        }
        if (lemmas->parsed()) {
            bool full = lemmas_grid == "full";
            int workers = bch::resolve_workers(l_parallel);
            std::vector<std::string> bad = bch::verify_lemmas(full, workers);
            auto more = bch::verify_structure(workers);
            bad.insert(bad.end(), more.begin(), more.end());
            bch::Grid grid;
            grid.modulus_limit = full ? (Int(1) << 16) : (Int(1) << 12);
            more = bch::verify_assertions(grid, workers);
            bad.insert(bad.end(), more.begin(), more.end());
            return report_mismatches(bad, "lemmas");
        }
    } catch (const bch::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return kExitBadParams;
}
