#pragma once

// Reporting layer: golden-table reproduction, JSON emission, the
// characteristic-rank scanner with its on-disk cache, and the k = 3 identity
// battery behind `verify --suite k3`.
//
// Table conventions follow the published reference tables they reproduce:
// k4_kerd1 lists Koszul degrees; k4_K_gens and k4_K_rels list Koszul degrees
// (cohomological + 1); k5_K_gens and k6_K_gens list cohomological degrees.
// The engine itself is cohomological everywhere; the shift is applied here.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "ogc/ext.hpp"
#include "ogc/present.hpp"
#include "ogc/syzygy.hpp"
#include "ogc/version.hpp"

namespace ogc {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON artifacts
// ---------------------------------------------------------------------------

inline json hilbert_json(const std::map<int, int>& h) {
    json out = json::object();
    for (auto [d, dim] : h)
        out[std::to_string(d)] = dim;
    return out;
}

inline json present_c_json(const CData& cd) {
    json out;
    out["k"] = cd.k;
    out["n"] = cd.n;
    out["module"] = "C";
    out["hilbert"] = hilbert_json(cd.hilbert);
    out["generators"] = json::array({json{{"degree", 0}}});
    json rels = json::array();
    for (const auto& q : cd.ideal_min_gens)
        rels.push_back(json{{"degree", q.degree()},
                            {"coeffs", json::array({q.text()})}});
    out["relations"] = rels;
    return out;
}

inline json present_k_json(const KData& kd) {
    json out;
    out["k"] = kd.k;
    out["n"] = kd.n;
    out["module"] = "K";
    out["hilbert"] = hilbert_json(kd.hilbert);
    json gens = json::array();
    for (int d : kd.gen_degrees)
        gens.push_back(json{{"degree", d}});
    out["generators"] = gens;
    json rels = json::array();
    for (const auto& r : kd.relations) {
        json coeffs = json::array();
        for (const auto& c : r.coeffs)
            coeffs.push_back(c.text());
        rels.push_back(json{{"degree", r.degree}, {"coeffs", coeffs}});
    }
    out["relations"] = rels;
    return out;
}

inline json ker_d1_json(int k, int n, const std::vector<GenVec>& gens) {
    json out;
    out["k"] = k;
    out["n"] = n;
    out["module"] = "ker_d1";
    json gl = json::array();
    for (const auto& g : gens)
        gl.push_back(json{{"degree", g.koszul_degree}});
    out["generators"] = gl;
    out["relations"] = json::array();
    json h = json::object();
    out["hilbert"] = h;
    return out;
}

inline json ext_json(const ExtReport& rep) {
    json out;
    out["k"] = rep.k;
    out["n"] = rep.n;
    out["ext1_rank"] = rep.ext1_rank;
    out["z1_dim"] = rep.z1_dim;
    out["d0_rank"] = rep.d0_rank;
    out["d1_rank"] = rep.d1_rank;
    json cocycles = json::array();
    for (const auto& cc : rep.cocycles) {
        json entries = json::array();
        for (std::size_t j = 0; j < cc.values.size(); ++j) {
            if (cc.values[j].is_zero())
                continue;
            entries.push_back(json{{"relation_index", j},
                                   {"relation_degree", rep.relation_degrees[j]},
                                   {"value", cc.values[j].text()}});
        }
        cocycles.push_back(entries);
    }
    out["cocycles"] = cocycles;
    return out;
}

// ---------------------------------------------------------------------------
// Reference tables
// ---------------------------------------------------------------------------

struct TableSpec {
    std::string id;
    int k = 0;
    int n_lo = 0, n_hi = 0;
};

inline const std::vector<TableSpec>& table_specs() {
    static const std::vector<TableSpec> specs = {
        {"k5_K_gens", 5, 10, 33}, {"k6_K_gens", 6, 12, 21},
        {"k4_K_gens", 4, 17, 32}, {"k4_kerd1", 4, 17, 32},
        {"k4_K_rels", 4, 17, 28}, {"ext_nontrivial", 0, 0, 0},
    };
    return specs;
}

inline std::string format_row(int n, const std::vector<int>& degs) {
    std::ostringstream os;
    os << n << ":";
    if (degs.empty())
        os << " -";
    for (int d : degs)
        os << " " << d;
    return os.str();
}

// One computed line per n (or per (k, n) for the ext table).
inline std::vector<std::string> compute_table(const std::string& id,
                                              int jobs = 1) {
    auto run_parallel = [&](int lo, int hi,
                            const std::function<std::string(int)>& work) {
        std::vector<std::string> lines(std::size_t(hi - lo + 1));
        std::atomic<int> next(lo);
        auto worker = [&] {
            for (;;) {
                int n = next.fetch_add(1);
                if (n > hi)
                    return;
                lines[std::size_t(n - lo)] = work(n);
            }
        };
        int nthreads = std::max(1, std::min(jobs, hi - lo + 1));
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
        return lines;
    };

    if (id == "k5_K_gens" || id == "k6_K_gens" || id == "k4_K_gens") {
        const TableSpec* spec = nullptr;
        for (const auto& s : table_specs())
            if (s.id == id)
                spec = &s;
        int shift = (id == "k4_K_gens") ? 1 : 0; // printed as Koszul degrees
        return run_parallel(spec->n_lo, spec->n_hi, [&, shift](int n) {
            KData kd = CaseEngine(spec->k, n).present_K(false);
            std::vector<int> degs;
            for (int d : kd.gen_degrees)
                degs.push_back(d + shift);
            return format_row(n, degs);
        });
    }
    if (id == "k4_kerd1") {
        return run_parallel(17, 32, [&](int n) {
            CaseEngine eng(4, n);
            std::vector<int> degs;
            for (const auto& g : eng.min_gens_ker_d1())
                degs.push_back(g.koszul_degree);
            std::sort(degs.begin(), degs.end());
            return format_row(n, degs);
        });
    }
    if (id == "k4_K_rels") {
        return run_parallel(17, 28, [&](int n) {
            KData kd = CaseEngine(4, n).present_K(true);
            std::vector<int> degs;
            for (const auto& r : kd.relations)
                degs.push_back(r.degree + 1); // printed as Koszul degrees
            std::sort(degs.begin(), degs.end());
            return format_row(n, degs);
        });
    }
    if (id == "ext_nontrivial") {
        struct Range {
            int k, n_lo, n_hi;
        };
        std::vector<std::pair<int, int>> cases;
        for (Range r : {Range{4, 5, 36}, Range{5, 6, 21}, Range{6, 7, 18}})
            for (int n = r.n_lo; n <= r.n_hi; ++n)
                cases.emplace_back(r.k, n);
        std::vector<int> ranks(cases.size());
        std::atomic<std::size_t> cursor(0);
        auto worker = [&] {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= cases.size())
                    return;
                ranks[i] = ext1(cases[i].first, cases[i].second).ext1_rank;
            }
        };
        int nthreads = std::max(1, jobs);
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
        std::vector<std::string> lines;
        for (std::size_t i = 0; i < cases.size(); ++i) {
            if (ranks[i] == 0)
                continue;
            std::ostringstream os;
            os << cases[i].first << " " << cases[i].second << " " << ranks[i];
            lines.push_back(os.str());
        }
        return lines;
    }
    throw std::invalid_argument("compute_table: unknown table id: " + id);
}

inline std::vector<std::string> load_golden_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open golden file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        lines.push_back(line);
    }
    return lines;
}

struct TableCheck {
    std::string id;
    bool pass = false;
    std::vector<std::string> mismatches; // "expected ... | got ..."
};

inline TableCheck reproduce_table(const std::string& id,
                                  const std::string& golden_dir, int jobs = 1) {
    TableCheck out;
    out.id = id;
    std::vector<std::string> expected =
        load_golden_lines(golden_dir + "/" + id + ".txt");
    std::vector<std::string> got = compute_table(id, jobs);
    std::size_t rows = std::max(expected.size(), got.size());
    for (std::size_t i = 0; i < rows; ++i) {
        std::string e = i < expected.size() ? expected[i] : "<missing>";
        std::string g = i < got.size() ? got[i] : "<missing>";
        if (e != g)
            out.mismatches.push_back("expected '" + e + "' | got '" + g + "'");
    }
    out.pass = out.mismatches.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Conjecture scanner
// ---------------------------------------------------------------------------

struct ScanRow {
    int k = 0, n = 0, t = 0;
    int crk = 0;
    int conjectured = 0;
    bool match = false;
    std::string note; // exception annotations
};

inline int infer_t(int n) {
    int t = 1;
    while ((1 << t) < n)
        ++t;
    return t;
}

// Cached charrank: content-addressed by (k, n, engine version).
inline int charrank_cached(int k, int n, const std::string& cache_dir) {
    namespace fs = std::filesystem;
    std::string file;
    if (!cache_dir.empty()) {
        file = cache_dir + "/crk_v" + kEngineVersion + "_k" +
               std::to_string(k) + "_n" + std::to_string(n) + ".json";
        std::ifstream in(file);
        if (in) {
            json j = json::parse(in, nullptr, false);
            if (!j.is_discarded() && j.contains("charrank"))
                return j["charrank"].get<int>();
        }
    }
    int crk = CaseEngine(k, n).charrank();
    if (!file.empty()) {
        fs::create_directories(cache_dir);
        std::string tmp = file + ".tmp";
        {
            std::ofstream outf(tmp);
            outf << json{{"k", k}, {"n", n}, {"charrank", crk}}.dump() << "\n";
        }
        fs::rename(tmp, file); // atomic publish
    }
    return crk;
}

inline std::vector<ScanRow> scan_conjecture(int k_lo, int k_hi, int n_lo,
                                            int n_hi, int jobs = 1,
                                            const std::string& cache_dir = "") {
    std::vector<std::pair<int, int>> cases;
    for (int k = k_lo; k <= k_hi; ++k)
        for (int n = std::max(n_lo, k + 1); n <= n_hi; ++n) {
            int t = infer_t(n);
            if (k < 5 || k > (1 << (t - 1)))
                continue; // outside the conjecture's domain
            cases.emplace_back(k, n);
        }
    std::vector<ScanRow> rows(cases.size());
    std::atomic<std::size_t> cursor(0);
    auto worker = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= cases.size())
                return;
            auto [k, n] = cases[i];
            ScanRow r;
            r.k = k;
            r.n = n;
            r.t = infer_t(n);
            r.crk = charrank_cached(k, n, cache_dir);
            r.conjectured = conjecture_value(k, n, r.t);
            r.match = r.crk == r.conjectured;
            if ((k == 5 && n == 10) || (k == 5 && n == 11) ||
                (k == 6 && n == 12))
                r.note = "listed exception";
            rows[i] = std::move(r);
        }
    };
    int nthreads = std::max(1, std::min<int>(jobs, int(cases.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    return rows;
}

// ---------------------------------------------------------------------------
// verify --suite k3: the identity battery
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = false;
};

inline std::vector<CheckResult> verify_suite_k3() {
    std::vector<CheckResult> out;
    ClassContext c3(3);
    auto add = [&](const std::string& name, bool ok) {
        out.push_back(CheckResult{name, ok});
    };

    // three linear equations across both stretches (t = 4, 5), base included
    {
        bool ok = true;
        for (int n = 7; n <= 29; ++n) {
            if (n == 14 || n == 30)
                continue;
            ok = ok && lemma_linear_eqs(c3, n);
        }
        add("linear-equations-lemma", ok);
    }

    // kernel-basis determinant identities in the main ranges
    {
        bool ok = true;
        for (int t : {4, 5}) {
            for (int n = (1 << (t - 1)) + 1; n <= (1 << t) - 4; ++n) {
                CaseIndices ci = CaseIndices::k3(n);
                const Poly2 w3 = Poly2::variable(c3.w2(), 3);
                ok = ok && (w3 * c3.r(ci.j - 2) * c3.q(ci.i) +
                                c3.r(ci.j - 1) * c3.q(ci.i + 1) ==
                            c3.q(n - 2));
                ok = ok && (c3.r(ci.j) * c3.q(ci.i) +
                                w3 * c3.r(ci.j - 1) * c3.q(ci.i - 1) ==
                            c3.q(n - 1));
                ok = ok && (c3.r(ci.j) * c3.q(ci.i + 1) +
                                w3 * w3 * c3.r(ci.j - 2) * c3.q(ci.i - 1) ==
                            c3.q(n));
            }
        }
        add("kernel-basis-determinants", ok);
    }

    // r/q boundary identities
    {
        bool ok = true;
        const Poly2 w3 = Poly2::variable(c3.w2(), 3);
        for (int t = 2; t <= 6; ++t) {
            ok = ok && (c3.r((1 << (t - 1)) - 2) == c3.q((1 << t) - 4));
            ok = ok && (w3 * c3.r((1 << (t - 1)) - 4) == c3.q((1 << t) - 5));
            ok = ok && (c3.r((1 << (t - 1)) - 1) == c3.q((1 << t) - 2));
        }
        add("r-q-identities", ok);
    }

    // ascending/descending closed forms
    {
        bool ok = true;
        int t = 6, n0 = (1 << t) - 3;
        RelationVec dstart = relation_highest_first(
            c3, n0,
            {Poly2::one(c3.w2()), Poly2::zero(c3.w2()), Poly2::zero(c3.w2())});
        for (int i = 0; i <= 40 && ok; ++i) {
            RelationVec got = descend(c3, dstart, i);
            RelationVec expect = relation_highest_first(
                c3, n0 - i,
                {c3.q(i), c3.q(i + 1),
                 Poly2::variable(c3.w2(), 3) * c3.q(i - 1)});
            ok = got.coeffs == expect.coeffs;
        }
        RelationVec astart = relation_highest_first(
            c3, 15,
            {Poly2::zero(c3.w2()), Poly2::zero(c3.w2()), Poly2::one(c3.w2())});
        for (int j = 0; j <= 40 && ok; ++j) {
            RelationVec got = ascend(c3, astart, j);
            RelationVec expect = relation_highest_first(
                c3, 15 + j,
                {c3.r(j - 1), Poly2::variable(c3.w2(), 3) * c3.r(j - 2),
                 c3.r(j)});
            ok = got.coeffs == expect.coeffs;
        }
        add("ascend-descend-closed-forms", ok);
    }

    // boundary membership at the stretch edges, non-membership inside
    {
        bool ok = true;
        for (int t : {4, 5}) {
            int m = (1 << t) - 3;
            RelationVec dstart = relation_highest_first(
                c3, m,
                {Poly2::one(c3.w2()), Poly2::zero(c3.w2()),
                 Poly2::zero(c3.w2())});
            {
                int target = 1 << (t - 1);
                RelationVec rel = zero_vanishing_slots(
                    c3, descend(c3, dstart, m - target));
                KoszulComplex kosz(std::make_shared<ClassContext>(3), target);
                ok = ok && boundary_membership(kosz, rel);
            }
            {
                int base = (1 << (t - 1)) - 1;
                RelationVec astart = relation_highest_first(
                    c3, base,
                    {Poly2::zero(c3.w2()), Poly2::zero(c3.w2()),
                     Poly2::one(c3.w2())});
                RelationVec rel =
                    zero_vanishing_slots(c3, ascend(c3, astart, m - base));
                KoszulComplex kosz(std::make_shared<ClassContext>(3), m);
                ok = ok && boundary_membership(kosz, rel);
            }
            {
                int target = (1 << (t - 1)) + (1 << (t - 2)); // interior point
                RelationVec rel = descend(c3, dstart, m - target);
                KoszulComplex kosz(std::make_shared<ClassContext>(3), target);
                ok = ok && !boundary_membership(kosz, rel);
            }
        }
        add("koszul-boundary-membership", ok);
    }

    // squares in the window ideal (t = 4, 5)
    {
        bool ok = true;
        for (int t : {4, 5}) {
            int lo = 1 << (t - 1), hi = (1 << t) - 3;
            for (int n = lo + 1; n <= hi; ++n)
                ok = ok && square_in_ideal(c3, n, ADKind::D);
            for (int n = lo; n < hi; ++n)
                ok = ok && square_in_ideal(c3, n, ADKind::A);
        }
        add("squares-in-window-ideal", ok);
    }

    // fundamental two-power relation, both parities, k = 3..6
    {
        bool ok = true;
        for (int k = 3; k <= 6; ++k) {
            ClassContext ctx(k);
            for (int n = k + 1; n <= 40; ++n) {
                bool pow2 = (n & (n - 1)) == 0;
                ok = ok && (check_fundamental(ctx, n) == pow2);
                ok = ok && (fundamental_odd_sum(ctx, n).is_zero() == pow2);
            }
        }
        add("fundamental-two-power-relation", ok);
    }

    return out;
}

} // namespace ogc
