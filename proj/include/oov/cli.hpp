#pragma once

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "oov/engine.hpp"
#include "oov/hardness.hpp"
#include "oov/instance.hpp"
#include "oov/reductions.hpp"

namespace oov::cli {

// exit codes: 0 success/agreement, 1 verification mismatch, 2 usage/contract
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// ---------------------------------------------------------------------------
// file helpers
// ---------------------------------------------------------------------------

inline std::vector<uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                                std::istreambuf_iterator<char>());
}

inline void write_file_bytes(const std::string& path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed for " + path);
}

// Binary instance variant: "OOVB", version, n, d, packed rows of 64-bit words.
inline void write_instance_file(const std::string& path, const OVInstance& x, bool binary) {
    if (binary) {
        ByteWriter w;
        w.u8('O');
        w.u8('O');
        w.u8('V');
        w.u8('B');
        w.u8(1);
        w.u32(x.n());
        w.u32(x.dim);
        for (const BitVec& v : x.vectors) w.u64_span(v.words());
        write_file_bytes(path, w.bytes);
        return;
    }
    std::ostringstream out;
    save_instance_text(x, out);
    std::string text = out.str();
    write_file_bytes(path, std::span<const uint8_t>(
                               reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

inline OVInstance read_instance_file(const std::string& path) {
    std::vector<uint8_t> bytes = read_file_bytes(path);
    if (bytes.size() >= 5 && bytes[0] == 'O' && bytes[1] == 'O' && bytes[2] == 'V' &&
        bytes[3] == 'B') {
        ByteReader r{bytes};
        r.pos = 4;
        uint8_t version = r.u8();
        if (version != 1)
            throw std::runtime_error(path + ": unsupported binary instance version");
        uint32_t n = r.u32();
        uint32_t d = r.u32();
        std::vector<BitVec> vecs;
        vecs.reserve(n);
        for (uint32_t i = 0; i < n; ++i) vecs.push_back(detail::read_bitvec_words(r, d));
        if (!r.done()) throw std::runtime_error(path + ": trailing bytes");
        return OVInstance(d, std::move(vecs));
    }
    std::istringstream in(std::string(bytes.begin(), bytes.end()));
    try {
        return load_instance_text(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline std::vector<BitVec> read_queries_file(const std::string& path, uint32_t expected_dim) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<BitVec> queries;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        BitVec q;
        try {
            q = BitVec::from_string(line);
        } catch (const std::exception& e) {
            throw std::runtime_error(path + " line " + std::to_string(line_no) + ": " + e.what());
        }
        if (q.dim() != expected_dim)
            throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                     ": query has dimension " + std::to_string(q.dim()) +
                                     ", structure expects " + std::to_string(expected_dim));
        queries.push_back(std::move(q));
    }
    return queries;
}

// ---------------------------------------------------------------------------
// engine parameter resolution
// ---------------------------------------------------------------------------

struct EngineOptions {
    std::string engine = "worst";
    std::optional<uint32_t> t;        // avg
    std::optional<uint32_t> i;        // worst
    std::optional<Rational> p;        // avg auto-t
    std::optional<Rational> eps_avg;  // avg auto-t
    std::optional<double> sched_c;    // worst schedule (d = c log n)
    std::optional<double> sched_delta;
    std::optional<double> sched_eps;  // worst schedule (moderate dimension)
};

inline EngineConfig resolve_engine_config(const EngineOptions& opts, const OVInstance& x,
                                          std::ostream& diag) {
    EngineConfig cfg;
    cfg.kind = parse_engine(opts.engine);
    switch (cfg.kind) {
        case EngineKind::oracle:
            break;
        case EngineKind::avg: {
            if (opts.t) {
                cfg.t = *opts.t;
            } else if (opts.p && opts.eps_avg) {
                uint32_t t = choose_t_avg(x.n(), *opts.p, *opts.eps_avg);
                if (t > x.dim)
                    throw std::invalid_argument(
                        "avg: chosen t = " + std::to_string(t) + " exceeds d = " +
                        std::to_string(x.dim) +
                        "; the structure would degenerate, use the oracle engine instead");
                cfg.t = t;
                diag << "avg: choose_t_avg(n=" << x.n() << ", p=" << opts.p->to_string()
                     << ", eps=" << opts.eps_avg->to_string() << ") = " << t << "\n";
            } else {
                throw std::invalid_argument("avg: pass --t or both --avg-p and --avg-eps");
            }
            break;
        }
        case EngineKind::worst: {
            if (opts.i) {
                cfg.i = *opts.i;
            } else if (opts.sched_c && opts.sched_delta) {
                ScheduleResult r = schedule_for_loglinear(x.n(), *opts.sched_c, *opts.sched_delta);
                if (!r.hypothesis_ok)
                    diag << "warning: delta below 2e*log2(c)/c, schedule clamped\n";
                cfg.i = std::min<uint32_t>(r.i, x.dim);
                diag << "worst: schedule_for_loglinear -> i = " << cfg.i << "\n";
            } else if (opts.sched_eps) {
                ScheduleResult r = schedule_for_eps(x.n(), *opts.sched_eps);
                if (!r.hypothesis_ok)
                    diag << "warning: eps outside [loglog n/log n, 1/2), schedule clamped\n";
                cfg.i = std::min<uint32_t>(std::max<uint32_t>(r.i, 1), x.dim);
                diag << "worst: schedule_for_eps -> i = " << cfg.i << "\n";
            } else {
                throw std::invalid_argument(
                    "worst: pass --i, or --schedule-c with --schedule-delta, or --schedule-eps");
            }
            break;
        }
    }
    return cfg;
}

inline std::string config_summary(const EngineConfig& cfg) {
    switch (cfg.kind) {
        case EngineKind::oracle: return "oracle";
        case EngineKind::avg: return "avg t=" + std::to_string(cfg.t);
        case EngineKind::worst: return "worst i=" + std::to_string(cfg.i);
    }
    return "?";
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

struct GenOptions {
    uint32_t n = 0;
    uint32_t d = 0;
    Rational p{1, 2};
    uint64_t seed = 0;
    std::string out_path;
    bool binary = false;
};

inline int cmd_gen(const GenOptions& opts, std::ostream& diag) {
    OVInstance x = sample_instance(opts.n, opts.d, opts.p, opts.seed);
    write_instance_file(opts.out_path, x, opts.binary);
    diag << "wrote " << (opts.binary ? "binary" : "text") << " instance n=" << x.n()
         << " d=" << x.dim << " to " << opts.out_path << "\n";
    return kExitOk;
}

struct BuildOptions {
    std::string in_path;
    std::string out_path;
    EngineOptions engine;
};

inline int cmd_build(const BuildOptions& opts, std::ostream& diag) {
    OVInstance x = read_instance_file(opts.in_path);
    EngineConfig cfg = resolve_engine_config(opts.engine, x, diag);
    uint32_t n = x.n(), d = x.dim;
    Engine engine = Engine::build(std::move(x), cfg);
    std::vector<uint8_t> bytes = engine.serialize();
    write_file_bytes(opts.out_path, bytes);
    diag << "built " << config_summary(cfg) << " over n=" << n << " d=" << d << ": "
         << bytes.size() << " container bytes, " << engine.accounted_bits()
         << " accounted bits\n";
    return kExitOk;
}

struct QueryOptions {
    std::string structure_path;
    std::string queries_path;
    bool stats = false;
    bool no_shortcircuit = false;
};

inline int cmd_query(const QueryOptions& opts, std::ostream& out, std::ostream& diag) {
    Engine engine = Engine::deserialize(read_file_bytes(opts.structure_path));
    std::vector<BitVec> queries = read_queries_file(opts.queries_path, engine.dim());
    QueryStats totals;
    uint64_t max_checks = 0;
    for (const BitVec& q : queries) {
        QueryStats stats;
        bool answer = engine.query(q, &stats, !opts.no_shortcircuit);
        out << (answer ? '1' : '0') << '\n';
        totals.candidate_checks += stats.candidate_checks;
        totals.bitmap_lookups += stats.bitmap_lookups;
        totals.nodes_visited += stats.nodes_visited;
        max_checks = std::max(max_checks, stats.candidate_checks);
    }
    if (opts.stats) {
        diag << "queries=" << queries.size() << " candidate_checks=" << totals.candidate_checks
             << " max_candidate_checks=" << max_checks
             << " bitmap_lookups=" << totals.bitmap_lookups
             << " nodes_visited=" << totals.nodes_visited << "\n";
    }
    return kExitOk;
}

struct VerifyOptions {
    std::string in_path;
    EngineOptions engine;
    std::string mode = "exhaustive";  // or "sampled"
    uint64_t sample_count = 1000;
    uint64_t seed = 1;
    bool ledger = false;
};

inline int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
    OVInstance x = read_instance_file(opts.in_path);
    EngineConfig cfg = resolve_engine_config(opts.engine, x, out);
    BuildStats bs;
    Engine engine = Engine::build(x, cfg, &bs);

    uint64_t mismatches = 0;
    uint64_t checked = 0;
    std::string first_mismatch;
    auto check_one = [&](const BitVec& q) {
        bool expect = linear_scan_query(x, q);
        bool got = engine.query(q);
        ++checked;
        if (got != expect && mismatches++ == 0) first_mismatch = q.to_string();
    };

    if (opts.mode == "exhaustive") {
        if (x.dim > 16)
            throw std::invalid_argument("verify: exhaustive mode needs d <= 16, got d = " +
                                        std::to_string(x.dim));
        for (uint64_t mask = 0; mask < (uint64_t{1} << x.dim); ++mask) {
            BitVec q(x.dim);
            for (uint32_t j = 0; j < x.dim; ++j)
                if ((mask >> j) & 1) q.set(j);
            check_one(q);
        }
    } else if (opts.mode == "sampled") {
        for (uint64_t s = 0; s < opts.sample_count; ++s) {
            BitVec q(x.dim);
            for (uint32_t j = 0; j < x.dim; ++j)
                if (splitmix64_at(opts.seed, s * x.dim + j) & 1) q.set(j);
            check_one(q);
        }
    } else {
        throw std::invalid_argument("verify: mode must be 'exhaustive' or 'sampled'");
    }

    out << "verify " << config_summary(cfg) << " n=" << x.n() << " d=" << x.dim << " mode="
        << opts.mode << ": " << checked << " queries, " << mismatches << " mismatches";
    if (mismatches) out << " (first at query " << first_mismatch << ")";
    out << "\n";

    if (opts.ledger) {
        uint64_t accounted = engine.accounted_bits();
        out << "ledger: accounted_bits=" << accounted;
        if (cfg.kind == EngineKind::worst) {
            uint64_t sbound = space_bound_bits(x.n(), x.dim, cfg.i);
            uint64_t pbound = preprocessing_bound_ops(x.n(), x.dim, cfg.i);
            out << " space_bound=" << sbound << " space_ok=" << (accounted <= sbound)
                << " build_ops=" << bs.total() << " prep_bound=" << pbound << " prep_ratio="
                << std::fixed << std::setprecision(3)
                << (pbound ? static_cast<double>(bs.total()) / static_cast<double>(pbound) : 0.0)
                << " check_bound=" << query_check_bound(x.n(), x.dim, cfg.i);
            out.unsetf(std::ios::fixed);
        } else if (cfg.kind == EngineKind::avg) {
            // per-instance worst case: one bit per sparse query plus every
            // vector stored in every list it can join
            uint64_t sbound = detail::saturating_u64(
                static_cast<unsigned __int128>(binom_leq(x.dim, cfg.t)) * x.n() * x.dim);
            out << " space_bound=" << sbound << " space_ok=" << (accounted <= sbound);
        } else {
            out << " (dense bitmap: exactly 2^d)";
        }
        out << "\n";
    }
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

struct BenchOptions {
    EngineOptions engine;
    std::vector<uint64_t> n_list;
    std::string d_rule = "clogn:2";  // or "fixed:<d>"
    Rational p{1, 2};
    uint64_t seed = 1;
    uint64_t query_count = 1000;
    std::string csv_path;  // optional
};

inline uint32_t bench_dim_for(const std::string& rule, uint64_t n) {
    auto colon = rule.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("d-rule must be clogn:<c> or fixed:<d>");
    std::string kind = rule.substr(0, colon);
    double value = std::stod(rule.substr(colon + 1));
    if (kind == "clogn")
        return static_cast<uint32_t>(std::llround(value * std::log2(static_cast<double>(n))));
    if (kind == "fixed") return static_cast<uint32_t>(value);
    throw std::invalid_argument("d-rule must be clogn:<c> or fixed:<d>");
}

inline int cmd_bench(const BenchOptions& opts, std::ostream& out) {
    const char* header =
        "engine,n,d,param,accounted_bits,space_bound_bits,mean_candidate_checks,"
        "max_candidate_checks,check_bound,build_ops,build_ms_nondet";
    std::ostringstream csv;
    csv << header << "\n";
    out << header << "\n";
    for (uint64_t n : opts.n_list) {
        uint32_t d = bench_dim_for(opts.d_rule, n);
        OVInstance x = sample_instance(static_cast<uint32_t>(n), d, opts.p, opts.seed);
        std::ostringstream sink;
        EngineConfig cfg = resolve_engine_config(opts.engine, x, sink);
        BuildStats bs;
        auto start = std::chrono::steady_clock::now();
        Engine engine = Engine::build(x, cfg, &bs);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

        uint64_t total_checks = 0, max_checks = 0;
        for (uint64_t s = 0; s < opts.query_count; ++s) {
            BitVec q(d);
            for (uint32_t j = 0; j < d; ++j)
                if (splitmix64_at(opts.seed + 1, s * d + j) & 1) q.set(j);
            QueryStats stats;
            engine.query(q, &stats, /*short_circuit=*/false);
            total_checks += stats.candidate_checks;
            max_checks = std::max(max_checks, stats.candidate_checks);
        }
        double mean = opts.query_count
                          ? static_cast<double>(total_checks) / static_cast<double>(opts.query_count)
                          : 0.0;
        uint64_t sbound = 0, cbound = 0, param = 0;
        if (cfg.kind == EngineKind::worst) {
            sbound = space_bound_bits(n, d, cfg.i);
            cbound = query_check_bound(n, d, cfg.i);
            param = cfg.i;
        } else if (cfg.kind == EngineKind::avg) {
            param = cfg.t;
        }
        std::ostringstream row;
        row << engine_name(cfg.kind) << ',' << n << ',' << d << ',' << param << ','
            << engine.accounted_bits() << ',' << sbound << ',' << std::fixed
            << std::setprecision(3) << mean << ',' << max_checks << ',' << cbound << ','
            << bs.total() << ',' << elapsed;
        out << row.str() << "\n";
        csv << row.str() << "\n";
    }
    if (!opts.csv_path.empty()) {
        std::string text = csv.str();
        write_file_bytes(opts.csv_path, std::span<const uint8_t>(
                                            reinterpret_cast<const uint8_t*>(text.data()),
                                            text.size()));
    }
    return kExitOk;
}

struct HardestOptions {
    uint32_t n = 4;
    uint32_t k = 2;
    Rational delta{1, 2};
    std::string cnf_path;  // optional
};

inline int cmd_hardest(const HardestOptions& opts, std::ostream& out) {
    HardInstance h = build_hardest_instance(opts.n, opts.k, opts.delta);
    out << "N=" << h.vectors.size() << " d=" << h.dim << " w=" << h.w << "\n";
    if (opts.cnf_path.empty()) return kExitOk;

    std::ifstream in(opts.cnf_path);
    if (!in) throw std::runtime_error("cannot open " + opts.cnf_path);
    Cnf phi = parse_cnf(in);
    bool expect = sat_oracle(phi);
    BitVec q = encode_cnf_query(h, phi);
    bool got = false;
    for (const BitVec& v : h.vectors)
        if (is_orthogonal(v, q)) {
            got = true;
            break;
        }
    if (got == expect) {
        out << (expect ? "SAT agrees" : "UNSAT agrees") << "\n";
        return kExitOk;
    }
    out << "MISMATCH: sat_oracle=" << expect << " orthogonality=" << got << "\n";
    return kExitMismatch;
}

struct HampathOptions {
    std::string graph_path;
    uint32_t k = 3;
};

inline int cmd_hampath(const HampathOptions& opts, std::ostream& out) {
    std::ifstream in(opts.graph_path);
    if (!in) throw std::runtime_error("cannot open " + opts.graph_path);
    Digraph g = parse_digraph(in);
    Digraph padded = pad_graph_for_k(g, opts.k);
    if (padded.vertex_count != g.vertex_count)
        out << "padded " << g.vertex_count << " -> " << padded.vertex_count << " vertices\n";

    PathTable table = simple_paths_dp(padded, padded.vertex_count / opts.k);
    KSumInstance inst = hampath_reduction_build(padded.vertex_count, opts.k);
    auto queries = hampath_reduction_queries(padded, opts.k, table);
    bool reduction = false;
    for (const KSumQuery& q : queries)
        if (ksum_query_solve(inst, q)) {
            reduction = true;
            break;
        }
    bool oracle = hampath_oracle(padded);
    out << "n=" << padded.vertex_count << " k=" << opts.k << " N=" << inst.lists[0].size()
        << " queries=" << queries.size() << "\n";
    if (reduction == oracle) {
        out << (oracle ? "HAMPATH agrees" : "NO-HAMPATH agrees") << "\n";
        return kExitOk;
    }
    out << "MISMATCH: oracle=" << oracle << " reduction=" << reduction << "\n";
    return kExitMismatch;
}

struct ReduceOptions {
    std::string problem;  // pm | subset | containment | dnf
    std::string inputs_path;
    std::string queries_path;
    EngineOptions engine;
    bool check = false;
};

inline int cmd_reduce(const ReduceOptions& opts, std::ostream& out, std::ostream& diag) {
    std::ifstream qin(opts.queries_path);
    if (!qin) throw std::runtime_error("cannot open " + opts.queries_path);
    std::vector<std::string> query_lines;
    std::string line;
    while (std::getline(qin, line))
        if (!line.empty()) query_lines.push_back(line);

    OVInstance encoded(1, {BitVec(1)});
    std::vector<BitVec> encoded_queries;
    std::vector<bool> direct;

    if (opts.problem == "pm") {
        OVInstance raw = read_instance_file(opts.inputs_path);
        std::vector<BitVec> vecs;
        for (const BitVec& v : raw.vectors) vecs.push_back(pm_encode_input(v));
        encoded = OVInstance(2 * raw.dim, std::move(vecs));
        for (const std::string& ql : query_lines) {
            PMPattern pat = PMPattern::from_string(ql);
            if (pat.dim() != raw.dim) throw std::runtime_error("pattern dimension mismatch");
            encoded_queries.push_back(pm_encode_query(pat));
            if (opts.check) {
                bool any = false;
                for (const BitVec& v : raw.vectors)
                    if (pat.matches(v)) {
                        any = true;
                        break;
                    }
                direct.push_back(any);
            }
        }
    } else if (opts.problem == "subset" || opts.problem == "containment") {
        bool subset = opts.problem == "subset";
        OVInstance raw = read_instance_file(opts.inputs_path);
        std::vector<CoordSet> sets;
        for (const BitVec& v : raw.vectors) sets.emplace_back(raw.dim, v.support());
        std::vector<BitVec> vecs;
        for (const CoordSet& s : sets)
            vecs.push_back(subset ? subset_encode_input(s) : containment_encode_input(s));
        encoded = OVInstance(raw.dim, std::move(vecs));
        for (const std::string& ql : query_lines) {
            BitVec qv = BitVec::from_string(ql);
            if (qv.dim() != raw.dim) throw std::runtime_error("query dimension mismatch");
            CoordSet q(raw.dim, qv.support());
            encoded_queries.push_back(subset ? subset_encode_query(q)
                                             : containment_encode_query(q));
            if (opts.check) {
                bool any = false;
                for (const CoordSet& s : sets) {
                    const CoordSet& small = subset ? q : s;
                    const CoordSet& big = subset ? s : q;
                    bool inside = true;
                    for (uint32_t j : small.members())
                        if (!big.contains(j)) {
                            inside = false;
                            break;
                        }
                    if (inside) {
                        any = true;
                        break;
                    }
                }
                direct.push_back(any);
            }
        }
    } else if (opts.problem == "dnf") {
        std::ifstream fin(opts.inputs_path);
        if (!fin) throw std::runtime_error("cannot open " + opts.inputs_path);
        DNFFormula phi = [&] {
            // same shape as the cnf reader, with a "p dnf" header
            std::string fline;
            uint32_t vars = 0;
            bool have_header = false;
            std::vector<std::vector<DNFLiteral>> clauses;
            std::vector<DNFLiteral> current;
            while (std::getline(fin, fline)) {
                if (fline.empty() || fline[0] == 'c') continue;
                if (fline[0] == 'p') {
                    std::istringstream hs(fline);
                    std::string p, kind;
                    uint64_t nv = 0, nc = 0;
                    if (!(hs >> p >> kind >> nv >> nc) || kind != "dnf")
                        throw std::runtime_error("dnf: bad header line: " + fline);
                    vars = static_cast<uint32_t>(nv);
                    have_header = true;
                    continue;
                }
                std::istringstream ls(fline);
                long long lit;
                while (ls >> lit) {
                    if (lit == 0) {
                        clauses.push_back(current);
                        current.clear();
                    } else {
                        uint64_t v = static_cast<uint64_t>(lit > 0 ? lit : -lit) - 1;
                        current.push_back(DNFLiteral{static_cast<uint32_t>(v), lit < 0});
                    }
                }
            }
            if (!have_header) throw std::runtime_error("dnf: missing 'p dnf' header");
            if (!current.empty()) clauses.push_back(current);
            return DNFFormula(vars, std::move(clauses));
        }();
        encoded = dnf_encode(phi);
        for (const std::string& ql : query_lines) {
            BitVec a = BitVec::from_string(ql);
            if (a.dim() != phi.var_count) throw std::runtime_error("assignment dimension mismatch");
            encoded_queries.push_back(dnf_encode_assignment(a));
            if (opts.check) direct.push_back(phi.eval(a));
        }
    } else {
        throw std::invalid_argument("problem must be pm, subset, containment or dnf");
    }

    EngineOptions engine_opts = opts.engine;
    if (engine_opts.engine == "worst" && !engine_opts.i && !engine_opts.sched_c &&
        !engine_opts.sched_eps)
        engine_opts.i = encoded.dim;  // t = 1, safe for any dimension
    EngineConfig cfg = resolve_engine_config(engine_opts, encoded, diag);
    uint32_t enc_dim = encoded.dim;
    Engine engine = Engine::build(std::move(encoded), cfg);
    diag << "reduce " << opts.problem << ": encoded dim " << enc_dim << ", engine "
         << config_summary(cfg) << "\n";

    uint64_t mismatches = 0;
    for (size_t idx = 0; idx < encoded_queries.size(); ++idx) {
        bool got = engine.query(encoded_queries[idx]);
        out << (got ? '1' : '0') << '\n';
        if (opts.check && got != static_cast<bool>(direct[idx])) ++mismatches;
    }
    if (opts.check) {
        diag << "check: " << mismatches << " mismatches over " << encoded_queries.size()
             << " queries\n";
        return mismatches == 0 ? kExitOk : kExitMismatch;
    }
    return kExitOk;
}

}  // namespace oov::cli
