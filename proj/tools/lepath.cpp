#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lepath/equality.hpp"
#include "lepath/json_io.hpp"
#include "lepath/path_calc.hpp"
#include "lepath/scan.hpp"
#include "lepath/stats.hpp"

namespace {

using namespace lepath;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitInput = 3;

void emit(const ordered_json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write: " + out_path);
        out << text;
    }
}

ordered_json instance_json(const Poset& p, int x, int y) {
    ordered_json j;
    j["poset"] = poset_hash_hex(p);
    j["n"] = p.size();
    j["x"] = x;
    if (y != 0) j["y"] = y;
    return j;
}

int cmd_stats(const std::string& file, int x, int y, bool with_q, bool with_mq,
              const std::string& out_path) {
    PosetDocument doc = load_poset_document(file);
    Poset p = poset_of_document(doc);
    if ((with_q || with_mq) && !doc.chains)
        throw std::invalid_argument("q statistics need a chain partition in the input file");

    ordered_json j;
    j["instance"] = instance_json(p, x, y);
    if (y == 0) {
        j["tables"]["N"] = dist_json(n_dist(p, x));
        if (with_q) j["tables"]["N_q"] = dist_json(n_q_dist(p, *doc.chains, x));
        if (with_mq) j["tables"]["N_mq"] = dist_json(n_mq_dist(p, *doc.chains, x));
    } else {
        j["tables"]["F"] = dist_json(f_dist(p, x, y));
        if (with_q) j["tables"]["F_q"] = dist_json(f_q_dist(p, *doc.chains, x, y));
        if (with_mq) j["tables"]["F_mq"] = dist_json(f_mq_dist(p, *doc.chains, x, y));
    }
    emit(j, out_path);
    return kExitOk;
}

template <class V>
ordered_json verdicts_json(const CheckReport<V>& rep) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, holds] : rep.holds) {
        ordered_json row;
        row["holds"] = holds;
        if constexpr (std::is_same_v<V, mpz_class>)
            row["difference"] = rep.differences.at(k).get_str();
        else
            row["difference"] = to_json(rep.differences.at(k));
        j[std::to_string(k)] = std::move(row);
    }
    return j;
}

int cmd_check(const std::string& file, int x, int y, const std::string& which,
              const std::string& out_path) {
    PosetDocument doc = load_poset_document(file);
    Poset p = poset_of_document(doc);
    auto need_chains = [&]() -> const ChainPartition& {
        if (!doc.chains)
            throw std::invalid_argument("this check needs a chain partition in the input file");
        return *doc.chains;
    };

    ordered_json j;
    j["instance"] = instance_json(p, x, y);
    j["which"] = which;
    bool all_hold = true;

    if (which == "stanley") {
        auto rep = check_stanley(p, x);
        j["verdicts"] = verdicts_json(rep);
        all_hold = rep.all_hold;
    } else if (which == "ks") {
        if (y == 0) throw std::invalid_argument("ks check needs --y");
        auto rep = check_ks(p, x, y);
        j["verdicts"] = verdicts_json(rep);
        all_hold = rep.all_hold;
    } else if (which == "q-stanley") {
        auto rep = check_q_stanley(p, need_chains(), x);
        j["verdicts"] = verdicts_json(rep);
        all_hold = rep.all_hold;
    } else if (which == "q-ks") {
        if (y == 0) throw std::invalid_argument("q-ks check needs --y");
        auto rep = check_q_ks(p, need_chains(), x, y);
        j["verdicts"] = verdicts_json(rep);
        all_hold = rep.all_hold;
    } else if (which == "equality") {
        const ChainPartition& cp = need_chains();
        ordered_json rows = ordered_json::object();
        int n = p.size();
        for (int k = 1; k <= n - 1; ++k) {
            EqualityReport er = y == 0 ? stanley_equality_conditions(p, cp, x, k)
                                       : ks_equality_conditions(p, cp, x, y, k);
            ordered_json row;
            row["applicable"] = er.applicable;
            for (const auto& [c, v] : er.conds) row[std::string(1, c)] = v;
            if (er.conds.at('d')) row["epsilon"] = er.epsilon;
            row["consistent"] = er.consistent;
            rows[std::to_string(k)] = std::move(row);
            if (er.applicable && !er.consistent) all_hold = false;
        }
        j["conditions"] = std::move(rows);
    } else {
        throw std::invalid_argument("unknown check: " + which);
    }
    j["ok"] = all_hold;
    emit(j, out_path);
    return all_hold ? kExitOk : kExitViolation;
}

int cmd_scan(const std::string& mode, const std::string& suite, int max_n, int region_ab,
             int max_a, int max_b, uint64_t seed, int count, int rand_n, int rand_a, int rand_b,
             double density, bool timing, const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    ScanReport rep;
    if (mode == "exhaustive") {
        if (suite == "conjecture") {
            if (max_n > 9)
                throw std::invalid_argument(
                    "exhaustive poset scans support n <= 9; try --max-n 7");
            PosetSweepOptions o;
            o.max_n = max_n;
            o.vanishing = o.conjecture = o.plain_lc = true;
            rep = sweep_posets(o);
        } else if (suite == "drive") {
            if (max_n > 9)
                throw std::invalid_argument(
                    "exhaustive poset scans support n <= 9; try --max-n 7");
            PosetSweepOptions o;
            o.max_n = max_n;
            o.drive = true;
            rep = sweep_posets(o);
        } else if (suite == "regions" || suite == "sterm" || suite == "multivariate") {
            if (region_ab > 12)
                throw std::invalid_argument(
                    "exhaustive region scans support a+b <= 12; try --region-ab 8");
            RegionSweepOptions o;
            o.max_ab = region_ab;
            if (suite == "regions") o.qks = o.thm16 = o.thm17 = o.bijection = true;
            if (suite == "sterm") o.sterm = true;
            if (suite == "multivariate") o.multivariate = true;
            rep = sweep_regions(o);
        } else if (suite == "kappa") {
            rep = sweep_kappa(max_a, max_b);
        } else if (suite == "crisscross") {
            rep = sweep_crisscross(max_a, max_b);
        } else if (suite == "lgv") {
            rep = sweep_lgv(max_a, max_b);
        } else {
            throw std::invalid_argument("unknown suite: " + suite);
        }
    } else if (mode == "random") {
        if (suite == "conjecture") {
            if (rand_n > 10)
                throw std::invalid_argument("random poset scans support n <= 10");
            rep = sweep_random_posets(seed, count, rand_n,
                                      (uint32_t)(density * 65536.0));
        } else if (suite == "regions") {
            if (rand_a + rand_b > 16)
                throw std::invalid_argument("random region scans support a+b <= 16");
            rep = sweep_random_regions(seed, count, rand_a, rand_b);
        } else {
            throw std::invalid_argument("unknown random suite: " + suite);
        }
    } else {
        throw std::invalid_argument("unknown mode: " + mode);
    }
    if (timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "scan took " << ms << " ms\n";
    }
    emit(report_json(rep), out_path);
    return rep.ok() ? kExitOk : kExitViolation;
}

int cmd_region(const std::string& file, const std::string& overlay,
               const std::string& out_path) {
    PosetDocument doc = load_poset_document(file);
    Poset p = poset_of_document(doc);
    ChainPartition cp;
    if (doc.chains) {
        cp = *doc.chains;
    } else {
        auto found = p.width2_partition();
        if (!found) throw std::invalid_argument("width > 2: no region exists");
        cp = *found;
    }
    Region r = region_of(p, cp);
    std::string text;
    if (!overlay.empty()) {
        std::vector<int> ranks(p.size() + 1, 0);
        std::stringstream ss(overlay);
        std::string item;
        int t = 0;
        while (std::getline(ss, item, ',')) {
            int u = std::stoi(item);
            p.check_ids(u);
            ranks[u] = ++t;
        }
        if (t != p.size())
            throw std::invalid_argument("overlay must list every element once, in rank order");
        LinearExtension L(ranks);
        if (!L.respects(p)) throw std::invalid_argument("overlay is not a linear extension");
        NEPath path = path_of_extension(p, cp, L);
        text = ascii_art(r, &path);
    } else {
        text = ascii_art(r);
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear-extension statistics, lattice-path counting and inequality checks"};
    app.require_subcommand(1);

    std::string file, out_path, overlay;
    int x = 0, y = 0;
    bool with_q = false, with_mq = false;

    auto* stats = app.add_subcommand("stats", "N/F distributions and their q-analogues");
    stats->add_option("file", file, "poset JSON document")->required();
    stats->add_option("--x", x, "element id for L(x)")->required();
    stats->add_option("--y", y, "second element for F statistics");
    stats->add_flag("--q", with_q, "include q-weighted tables");
    stats->add_flag("--mq", with_mq, "include multivariate tables");
    stats->add_option("-o,--out", out_path, "write the report to a file");

    std::string which = "stanley";
    auto* check = app.add_subcommand("check", "log-concavity and equality-condition checks");
    check->add_option("file", file, "poset JSON document")->required();
    check->add_option("--x", x, "element id")->required();
    check->add_option("--y", y, "second element id");
    check->add_option("--which", which, "stanley|ks|q-stanley|q-ks|equality")->required();
    check->add_option("-o,--out", out_path, "write the report to a file");

    std::string mode = "exhaustive", suite = "conjecture";
    int max_n = 6, region_ab = 8, max_a = 3, max_b = 3;
    uint64_t seed = 1;
    int count = 100, rand_n = 7, rand_a = 4, rand_b = 4;
    double density = 0.5;
    bool timing = false;
    auto* scan = app.add_subcommand("scan", "exhaustive / randomized verification sweeps");
    scan->add_option("--mode", mode, "exhaustive|random");
    scan->add_option("--suite", suite,
                     "conjecture|drive|regions|sterm|multivariate|kappa|crisscross|lgv");
    scan->add_option("--max-n", max_n, "poset size bound for exhaustive scans");
    scan->add_option("--region-ab", region_ab, "a+b bound for exhaustive region scans");
    scan->add_option("--max-a", max_a, "a bound for lemma sweeps");
    scan->add_option("--max-b", max_b, "b bound for lemma sweeps");
    scan->add_option("--seed", seed, "random seed");
    scan->add_option("--count", count, "number of random instances");
    scan->add_option("--n", rand_n, "random poset size");
    scan->add_option("--a", rand_a, "random region width");
    scan->add_option("--b", rand_b, "random region height");
    scan->add_option("--density", density, "random relation density in [0,1]");
    scan->add_flag("--timing", timing, "print wall time to stderr");
    scan->add_option("-o,--out", out_path, "write the report to a file");

    auto* region = app.add_subcommand("region", "ASCII rendering of the staircase region");
    region->add_option("file", file, "poset JSON document")->required();
    region->add_option("--overlay", overlay,
                       "comma-separated element ids in rank order, drawn as a path");
    region->add_option("-o,--out", out_path, "write the rendering to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (stats->parsed()) return cmd_stats(file, x, y, with_q, with_mq, out_path);
        if (check->parsed()) return cmd_check(file, x, y, which, out_path);
        if (scan->parsed())
            return cmd_scan(mode, suite, max_n, region_ab, max_a, max_b, seed, count, rand_n,
                            rand_a, rand_b, density, timing, out_path);
        if (region->parsed()) return cmd_region(file, overlay, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "assertion violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
