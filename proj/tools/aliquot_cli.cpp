// Command-line surface for the aliquot toolkit. Every subcommand is a
// deterministic, scriptable run: primary output goes to stdout or --out,
// and --manifest records the invocation plus a digest of the bytes
// produced, so a rerun can be checked for byte-identical output.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aliquot/arith.hpp"
#include "aliquot/construct.hpp"
#include "aliquot/experiments.hpp"
#include "aliquot/fiber.hpp"
#include "aliquot/kna.hpp"
#include "aliquot/rational.hpp"
#include "aliquot/sieve.hpp"

using json = nlohmann::json;
using namespace aliquot;

namespace {

constexpr const char* kVersion = "0.1.0";

u64 fnv1a(const std::string& bytes) {
    u64 h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Output {
    std::string format = "csv";
    std::string out_path;
    std::string manifest_path;
    unsigned threads = 0;

    void add_to(CLI::App& app) {
        app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        app.add_option("--out", out_path, "Write primary output to this file");
        app.add_option("--manifest", manifest_path, "Write a run manifest (JSON) here");
        app.add_option("--threads", threads, "Thread cap for parallel scans (0 = all cores)");
    }

    void emit(const std::string& body, const std::vector<std::string>& argv, double wall_s) const {
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            f << body;
        }
        if (!manifest_path.empty()) {
            json m;
            std::string cmdline;
            for (const auto& a : argv) {
                if (!cmdline.empty()) cmdline += ' ';
                cmdline += a;
            }
            m["command"] = cmdline;
            m["version"] = kVersion;
            m["wall_time_s"] = wall_s;
            char digest[32];
            std::snprintf(digest, sizeof digest, "%016llx", (unsigned long long)fnv1a(body));
            m["output_digest"] = digest;
            std::ofstream f(manifest_path);
            f << m.dump(2) << "\n";
        }
    }
};

std::string join_u64(const std::vector<u64>& v, char sep) {
    std::string s;
    for (u64 x : v) {
        if (!s.empty()) s += sep;
        s += std::to_string(x);
    }
    return s;
}

SetSpec parse_set(const std::string& spec) {
    if (spec == "primes") return SetSpec::primes();
    if (spec == "squares") return SetSpec::squares();
    if (spec.rfind("palindromes:", 0) == 0)
        return SetSpec::palindromes((unsigned)std::stoul(spec.substr(12)));
    if (spec == "palindromes") return SetSpec::palindromes(10);
    if (spec.rfind("powers:", 0) == 0)
        return SetSpec::kth_powers((unsigned)std::stoul(spec.substr(7)));
    if (spec.rfind("file:", 0) == 0) return SetSpec::explicit_file(spec.substr(5));
    throw CLI::ValidationError("set", "unknown set spec: " + spec);
}

json pairs_to_json(const std::vector<std::pair<u64, u64>>& pairs) {
    json a = json::array();
    for (auto [p, q] : pairs) a.push_back({p, q});
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-of-proper-divisors toolkit"};
    app.require_subcommand(1);
    std::vector<std::string> argv_copy(argv, argv + argc);

    Output out;
    out.add_to(app);

    // profile
    u64 arg_n = 0;
    auto* c_profile = app.add_subcommand("profile", "Arithmetic profile of one n");
    c_profile->add_option("n", arg_n, "integer to profile")->required();

    // sieve
    u64 arg_x = 0;
    std::string dump_path;
    u64 block_size = kDefaultBlockSize;
    auto* c_sieve = app.add_subcommand("sieve", "Range sieve aggregate over [1,x]");
    c_sieve->add_option("x", arg_x, "upper bound")->required();
    c_sieve->add_option("--dump", dump_path, "Binary (n,sigma) dump path");
    c_sieve->add_option("--block-size", block_size, "Sieve block size");

    // fiber
    u64 arg_m = 0, fiber_x = 0;
    auto* c_fiber = app.add_subcommand("fiber", "Enumerate s-preimages of m up to x");
    c_fiber->add_option("m", arg_m)->required();
    c_fiber->add_option("x", fiber_x)->required();

    // untouchable
    u64 arg_y = 0;
    auto* c_unt = app.add_subcommand("untouchable", "Untouchable numbers in [2,y]");
    c_unt->add_option("y", arg_y)->required();

    // cluster
    std::string alpha_str, eps_str;
    u64 prime_bound = 0, cluster_n0 = 0, seed_bound = 100000;
    bool relax = false;
    auto* c_cluster = app.add_subcommand("cluster", "Clustered multi-preimage witness");
    c_cluster->add_option("alpha", alpha_str, "target ratio (p/q)")->required();
    c_cluster->add_option("epsilon", eps_str, "window half-width (p/q)")->required();
    c_cluster->add_option("prime_bound", prime_bound)->required();
    c_cluster->add_option("--n0", cluster_n0, "seed (default: smallest in ratio window)");
    c_cluster->add_option("--seed-bound", seed_bound, "search bound for the seed");
    c_cluster->add_flag("--relax", relax, "waive the proof thresholds on p,q (recorded)");

    // kna
    u64 kna_k = 0, kna_x = 0;
    i64 kna_a = 0;
    auto* c_kna = app.add_subcommand("kna", "Census of sigma(n) = k n + a up to x");
    c_kna->add_option("k", kna_k)->required();
    c_kna->add_option("a", kna_a)->required();
    c_kna->add_option("x", kna_x)->required();

    // congruence
    std::string cong_a;
    u64 cong_x = 0;
    bool cong_list = false;
    auto* c_cong = app.add_subcommand("congruence", "Census of sigma(n) == a (mod n)");
    c_cong->add_option("a", cong_a, "residue, or comma list for a sweep")->required();
    c_cong->add_option("x", cong_x)->required();
    c_cong->add_flag("--list", cong_list, "also list the solutions");

    // density
    std::string set_str;
    std::vector<u64> x_list;
    auto* c_dens = app.add_subcommand("density", "Count n <= x with s(n) in a set");
    c_dens->add_option("set", set_str, "primes|palindromes[:b]|squares|powers:k|file:PATH")->required();
    c_dens->add_option("x", x_list, "one or more bounds, ascending")->required();

    // exceptional
    std::vector<u64> exc_x;
    std::string exc_eps;
    auto* c_exc = app.add_subcommand("exceptional", "Exceptional-set density scan");
    c_exc->add_option("x", exc_x, "one or more bounds, ascending")->required();
    c_exc->add_option("--epsilon", exc_eps, "epsilon override (p/q), floored at 1/lnln x");

    // let --format/--out/--manifest/--threads appear after the subcommand
    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream body;
    try {
        if (*c_profile) {
            ArithProfile p = profile(arg_n);
            if (out.format == "json") {
                json j{{"n", p.n},     {"sigma", p.sigma},
                       {"s", p.s},     {"tau", p.tau},
                       {"omega", p.omega}, {"rad", p.rad},
                       {"P", p.largest_prime}, {"Pminus", p.smallest_prime},
                       {"squarefull_part", p.squarefull_part}};
                body << j.dump(2) << "\n";
            } else {
                body << "n,sigma,s,tau,omega,rad,P,Pminus,squarefull_part\n"
                     << p.n << ',' << p.sigma << ',' << p.s << ',' << p.tau << ',' << p.omega
                     << ',' << p.rad << ',' << p.largest_prime << ',' << p.smallest_prime << ','
                     << p.squarefull_part << "\n";
            }
        } else if (*c_sieve) {
            struct Agg {
                u128 sigma_sum = 0;
                u64 primes = 0, perfect = 0;
            };
            std::size_t n_blocks = arg_x == 0 ? 0 : (std::size_t)((arg_x - 1) / block_size + 1);
            std::vector<Agg> parts(n_blocks);
            std::string cache_path;
            bool from_cache = false;

            if (const char* dir = std::getenv("ALIQUOT_CACHE_DIR"); dir && *dir) {
                cache_path = std::string(dir) + "/sigma_" + std::to_string(arg_x) + ".bin";
                std::ifstream in(cache_path, std::ios::binary);
                SieveBlock b;
                if (in && read_block_dump(in, b) && b.lo == 1 && b.hi == arg_x) {
                    from_cache = true;
                    parts.assign(1, {});
                    for (u64 n = 1; n <= arg_x; ++n) {
                        u64 sg = b.sigma_of(n);
                        parts[0].sigma_sum += sg;
                        if (n >= 2 && sg == n + 1) ++parts[0].primes;
                        if (sg == 2 * n) ++parts[0].perfect;
                    }
                }
            }
            if (!from_cache) {
                for_each_block_parallel(arg_x, out.threads, block_size,
                                        [&](std::size_t i, const SieveBlock& b) {
                                            Agg a;
                                            for (u64 n = b.lo; n <= b.hi; ++n) {
                                                u64 sg = b.sigma_of(n);
                                                a.sigma_sum += sg;
                                                if (n >= 2 && b.spf_of(n) == n) ++a.primes;
                                                if (sg == 2 * n) ++a.perfect;
                                            }
                                            parts[i] = a;
                                        });
                if (!dump_path.empty()) {
                    std::ofstream f(dump_path, std::ios::binary);
                    write_range_dump(f, arg_x, block_size);
                }
                if (!cache_path.empty()) {
                    std::ofstream f(cache_path, std::ios::binary);
                    write_range_dump(f, arg_x, block_size);
                }
            }
            Agg total;
            for (const Agg& a : parts) {
                total.sigma_sum += a.sigma_sum;
                total.primes += a.primes;
                total.perfect += a.perfect;
            }
            // u128 to decimal
            std::string ss;
            u128 v = total.sigma_sum;
            if (v == 0) ss = "0";
            while (v) {
                ss.insert(ss.begin(), (char)('0' + (int)(v % 10)));
                v /= 10;
            }
            if (out.format == "json") {
                json j{{"x", arg_x}, {"sigma_sum", ss}, {"primes", total.primes},
                       {"perfect", total.perfect}, {"cached", from_cache}};
                body << j.dump(2) << "\n";
            } else {
                body << "x,sigma_sum,primes,perfect\n"
                     << arg_x << ',' << ss << ',' << total.primes << ',' << total.perfect << "\n";
            }
        } else if (*c_fiber) {
            FiberReport r = fiber_scan(arg_m, fiber_x);
            if (out.format == "json") {
                json j{{"m", r.m},
                       {"x", r.x},
                       {"count", r.preimages.size()},
                       {"preimages", r.preimages},
                       {"complete_for_all_n", r.complete_for_all_n},
                       {"infinite", r.infinite}};
                body << j.dump(2) << "\n";
            } else {
                body << r.m << ',' << r.preimages.size() << ',' << join_u64(r.preimages, ';')
                     << "\n";
            }
        } else if (*c_unt) {
            auto u = untouchables_up_to(arg_y);
            if (out.format == "json") {
                json j{{"y", arg_y}, {"untouchables", u}};
                body << j.dump(2) << "\n";
            } else {
                body << join_u64(u, ',') << "\n";
            }
        } else if (*c_cluster) {
            Rational alpha = parse_rational(alpha_str);
            Rational eps = parse_rational(eps_str);
            u64 n0 = cluster_n0 ? cluster_n0 : find_ratio_seed(alpha, eps, seed_bound);
            ClusterWitness w = cluster_witness(alpha, eps, n0, prime_bound, relax);
            json j{{"seed", w.n0},
                   {"k_value", w.k_value},
                   {"pairs", pairs_to_json(w.pairs)},
                   {"target", w.m},
                   {"preimages", w.preimages},
                   {"window", {w.window_lower, w.window_upper}},
                   {"waived_constraints", w.waived_constraints}};
            body << j.dump(2) << "\n";
        } else if (*c_kna) {
            auto sols = solutions(kna_k, kna_a, kna_x);
            if (out.format == "json") {
                json arr = json::array();
                for (const auto& s : sols)
                    arr.push_back({{"n", s.n}, {"kind", s.regular ? "regular" : "sporadic"}});
                json j{{"k", kna_k}, {"a", kna_a}, {"x", kna_x}, {"solutions", arr}};
                body << j.dump(2) << "\n";
            } else {
                body << "k,a,x,n,kind\n";
                for (const auto& s : sols)
                    body << kna_k << ',' << kna_a << ',' << kna_x << ',' << s.n << ','
                         << (s.regular ? "regular" : "sporadic") << "\n";
            }
        } else if (*c_cong) {
            std::vector<i64> a_values;
            std::stringstream as(cong_a);
            std::string tok;
            while (std::getline(as, tok, ',')) a_values.push_back(std::stoll(tok));
            if (a_values.size() == 1) {
                CongruenceCensus c = congruence_census(a_values[0], cong_x);
                if (out.format == "json") {
                    json j{{"a", c.a}, {"x", c.x}, {"count", c.count}, {"normalized", c.normalized}};
                    if (cong_list) j["solutions"] = c.solutions;
                    body << j.dump(2) << "\n";
                } else {
                    body << "a,count,normalized\n"
                         << c.a << ',' << c.count << ',' << c.normalized << "\n";
                    if (cong_list) body << join_u64(c.solutions, ';') << "\n";
                }
            } else {
                auto rows = congruence_uniformity_sweep(a_values, cong_x);
                if (out.format == "json") {
                    json arr = json::array();
                    for (const auto& r : rows)
                        arr.push_back({{"a", r.a}, {"count", r.count}, {"normalized", r.normalized}});
                    body << arr.dump(2) << "\n";
                } else {
                    body << "a,count,normalized\n";
                    for (const auto& r : rows)
                        body << r.a << ',' << r.count << ',' << r.normalized << "\n";
                }
            }
        } else if (*c_dens) {
            SetSpec set = parse_set(set_str);
            if (out.format == "json") {
                json arr = json::array();
                for (u64 x : x_list) {
                    PreimageCount pc = preimage_count(set, x);
                    arr.push_back({{"x", x}, {"count", pc.count}, {"density", pc.density},
                                   {"sample", pc.sample}});
                }
                body << arr.dump(2) << "\n";
            } else {
                body << "x,count,density\n";
                for (u64 x : x_list) {
                    PreimageCount pc = preimage_count(set, x);
                    body << x << ',' << pc.count << ',' << pc.density << "\n";
                }
            }
        } else if (*c_exc) {
            std::optional<Rational> override_eps;
            if (!exc_eps.empty()) override_eps = parse_rational(exc_eps);
            auto pts = exceptional_density(exc_x, override_eps);
            if (out.format == "json") {
                json arr = json::array();
                for (const auto& p : pts)
                    arr.push_back({{"x", p.x}, {"count", p.count}, {"density", p.density}});
                body << arr.dump(2) << "\n";
            } else {
                body << "x,count,density\n";
                for (const auto& p : pts)
                    body << p.x << ',' << p.count << ',' << p.density << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.emit(body.str(), argv_copy, wall);
    return 0;
}
