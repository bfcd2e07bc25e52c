#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gridiv/board.hpp"
#include "gridiv/closedform.hpp"
#include "gridiv/dpcount.hpp"
#include "gridiv/polynomial.hpp"
#include "gridiv/recurrence.hpp"
#include "gridiv/symmetry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitOracle = 3;
constexpr int kExitGuard = 4;

// "a" or "a..b", inclusive.
struct Range {
    int lo = 1;
    int hi = 1;
};

Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw gridiv::input_error("bad range '" + text + "', expected N or A..B");
    }
    if (r.lo > r.hi || r.lo < 1)
        throw gridiv::input_error("bad range '" + text + "': need 1 <= lo <= hi");
    return r;
}

// Output goes to --output if given, else stdout.
struct OutputFile {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputFile(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw gridiv::input_error("cannot open output file " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

gridiv::BigCount count_one(const gridiv::BoardShape& shape, int k,
                           const std::string& engine, std::size_t edge_limit) {
    using namespace gridiv;
    if (engine == "brute") return brute_count(shape, k, edge_limit);
    if (engine == "dp") {
        auto counts = dp_count(shape);
        return k <= shape.squares() ? counts[k] : BigCount(0);
    }
    if (engine == "recursion") {
        if (shape.rows != 2)
            throw input_error("engine 'recursion' requires m=2");
        if (k > shape.squares()) return 0;
        return d_table(k, shape.cols).at(k, shape.cols);
    }
    if (engine == "auto") {
        if (shape.rows <= kDpMaxRows) {
            auto counts = dp_count(shape);
            return k <= shape.squares() ? counts[k] : BigCount(0);
        }
        if (adjacency(shape).size() <= edge_limit)
            return brute_count(shape, k, edge_limit);
        throw size_error("no engine can handle " + std::to_string(shape.rows) + "x" +
                         std::to_string(shape.cols) +
                         " within the configured guards");
    }
    throw input_error("unknown engine '" + engine + "'");
}

int cmd_count(const Range& m, const Range& n, const Range& k,
              const std::string& engine, std::size_t edge_limit,
              const std::string& output) {
    OutputFile dest(output);
    const bool single = m.lo == m.hi && n.lo == n.hi && k.lo == k.hi;
    if (!single) dest.out() << "m,n,k,count\n";
    for (int mm = m.lo; mm <= m.hi; ++mm)
        for (int nn = n.lo; nn <= n.hi; ++nn)
            for (int kk = k.lo; kk <= k.hi; ++kk) {
                auto c = count_one({mm, nn}, kk, engine, edge_limit);
                if (single)
                    dest.out() << c << '\n';
                else
                    dest.out() << mm << ',' << nn << ',' << kk << ',' << c << '\n';
            }
    return kExitOk;
}

int cmd_enumerate(int m, int n, int k, std::size_t edge_limit,
                  const std::string& output) {
    OutputFile dest(output);
    gridiv::BoardShape shape{m, n};
    auto divisions = gridiv::enumerate_divisions(shape, k, edge_limit);
    gridiv::write_divisions(dest.out(), shape, k, divisions);
    return kExitOk;
}

int cmd_table(const Range& m, const Range& n, const Range& k,
              const std::string& engine, const std::string& format,
              std::size_t edge_limit, const std::string& output) {
    using namespace gridiv;
    OutputFile dest(output);
    if (m.lo != m.hi) throw input_error("table needs a single m");
    const int mm = m.lo;

    SequenceTable table;
    std::string eng = engine;
    if (eng == "auto") eng = (mm == 2) ? "recursion" : "dp";
    if (eng == "recursion") {
        if (mm != 2) throw input_error("engine 'recursion' requires m=2");
        table = d_table(k.hi, n.hi);
    } else if (eng == "dp" || eng == "brute") {
        table.k_max = k.hi;
        table.n_max = n.hi;
        table.provenance = eng == "dp" ? Provenance::dp : Provenance::brute;
        for (int nn = 1; nn <= n.hi; ++nn) {
            BoardShape shape{mm, nn};
            auto counts = eng == "dp" ? dp_count(shape)
                                      : brute_count_all(shape, edge_limit);
            std::vector<BigCount> row(k.hi + 1, 0);
            for (int kk = 0; kk <= k.hi && kk <= shape.squares(); ++kk)
                row[kk] = counts[kk];
            table.rows.push_back(std::move(row));
        }
    } else {
        throw input_error("unknown engine '" + engine + "'");
    }

    if (n.lo != 1 || k.lo != 1) {
        // CSV/JSON writers emit from 1; a sub-window is written by hand.
        if (format != "csv")
            throw input_error("sub-ranges are only supported with --format csv");
        dest.out() << "n,k,count\n";
        for (int nn = n.lo; nn <= n.hi; ++nn)
            for (int kk = k.lo; kk <= k.hi; ++kk)
                dest.out() << nn << ',' << kk << ',' << table.at(kk, nn) << '\n';
        return kExitOk;
    }
    if (format == "csv")
        write_csv(dest.out(), table);
    else if (format == "json")
        write_json(dest.out(), table);
    else
        throw input_error("table supports --format csv or json");
    return kExitOk;
}

int cmd_fit(const Range& k, const std::string& format, const std::string& output) {
    using namespace gridiv;
    OutputFile dest(output);
    auto families = fit_families(k.hi);
    std::vector<FittedFamily> window(families.begin() + (k.lo - 1), families.end());
    if (format == "markdown") {
        write_families_markdown(dest.out(), window);
    } else if (format == "json") {
        for (const auto& fam : window) write_family_json(dest.out(), fam);
    } else {
        throw input_error("fit supports --format json or markdown");
    }
    return kExitOk;
}

int cmd_verify(std::size_t edge_limit) {
    using namespace gridiv;
    // Cross-engine sweep: brute vs dp for every shape with m*n <= 12,
    // plus the recurrence for m=2.
    for (int m = 1; m <= 12; ++m) {
        for (int n = 1; m * n <= 12; ++n) {
            BoardShape shape{m, n};
            auto brute = brute_count_all(shape, edge_limit);
            // Counts are transpose-invariant; stay under the dp row guard.
            auto dp = dp_count(m <= kDpMaxRows ? shape : BoardShape{n, m});
            for (int k = 1; k <= shape.squares(); ++k)
                if (brute[k] != dp[k])
                    throw oracle_mismatch("brute=" + brute[k].str() +
                                          " dp=" + dp[k].str() + " at m=" +
                                          std::to_string(m) + " n=" + std::to_string(n) +
                                          " k=" + std::to_string(k));
            if (m == 2) {
                auto dt = d_table(shape.squares(), n);
                for (int k = 1; k <= shape.squares(); ++k)
                    if (dt.at(k, n) != brute[k])
                        throw oracle_mismatch("recursion=" + dt.at(k, n).str() +
                                              " brute=" + brute[k].str() + " at n=" +
                                              std::to_string(n) + " k=" + std::to_string(k));
            }
            std::cout << "ok " << m << "x" << n << '\n';
        }
    }
    // Closed forms against the recurrence and each other.
    auto families = fit_families(10);
    SequenceTable dt = d_table(10, 20);
    for (const auto& fam : families)
        for (int n = 1; n <= 20; ++n)
            if (fam.d.eval(n) != Rational(dt.at(fam.k, n)))
                throw oracle_mismatch("closed form k=" + std::to_string(fam.k) +
                                      " disagrees with recurrence at n=" +
                                      std::to_string(n));
    std::cout << "ok closed forms k<=10\n";
    return kExitOk;
}

int cmd_symmetry(const Range& m, const Range& n, const Range& k,
                 std::size_t edge_limit, const std::string& output) {
    using namespace gridiv;
    OutputFile dest(output);
    for (int mm = m.lo; mm <= m.hi; ++mm)
        for (int nn = n.lo; nn <= n.hi; ++nn)
            for (int kk = k.lo; kk <= k.hi; ++kk) {
                auto oc = orbit_count({mm, nn}, kk, edge_limit);
                write_orbit_json(dest.out(), oc);
            }
    return kExitOk;
}

int cmd_bench(const Range& m, const Range& n, std::size_t edge_limit) {
    using namespace gridiv;
    using clock = std::chrono::steady_clock;
    std::cout << "m,n,engine,milliseconds\n";
    for (int mm = m.lo; mm <= m.hi; ++mm)
        for (int nn = n.lo; nn <= n.hi; ++nn) {
            BoardShape shape{mm, nn};
            auto t0 = clock::now();
            auto dp = dp_count(shape);
            auto t1 = clock::now();
            std::cout << mm << ',' << nn << ",dp,"
                      << std::chrono::duration<double, std::milli>(t1 - t0).count()
                      << '\n';
            if (adjacency(shape).size() <= edge_limit) {
                t0 = clock::now();
                auto brute = brute_count_all(shape, edge_limit);
                t1 = clock::now();
                std::cout << mm << ',' << nn << ",brute,"
                          << std::chrono::duration<double, std::milli>(t1 - t0).count()
                          << '\n';
                for (int k = 1; k <= shape.squares(); ++k)
                    if (dp[k] != brute[k])
                        throw oracle_mismatch("dp/brute disagree at m=" +
                                              std::to_string(mm) + " n=" +
                                              std::to_string(nn) + " k=" +
                                              std::to_string(k));
            }
        }
    return kExitOk;
}

void print_error_json(const std::string& kind, const std::string& detail) {
    nlohmann::ordered_json doc;
    doc["error"] = kind;
    doc["detail"] = detail;
    std::cerr << doc.dump() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting of grid-board divisions into connected pieces"};
    app.require_subcommand(1);

    std::string m_text = "2", n_text = "1", k_text = "1";
    std::string engine = "auto", format = "csv", output;
    std::size_t edge_limit = gridiv::default_edge_limit();

    auto add_common = [&](CLI::App* sub, bool with_engine, bool with_format) {
        sub->add_option("--m", m_text, "rows, N or A..B");
        sub->add_option("--n", n_text, "columns, N or A..B");
        sub->add_option("--k", k_text, "pieces, N or A..B");
        sub->add_option("--output", output, "output file (default stdout)");
        sub->add_option("--edge-limit", edge_limit, "brute-force edge guard");
        if (with_engine)
            sub->add_option("--engine", engine, "auto|brute|recursion|dp");
        if (with_format) sub->add_option("--format", format, "csv|json|markdown");
    };

    auto* count = app.add_subcommand("count", "count divisions");
    add_common(count, true, false);
    auto* enumerate = app.add_subcommand("enumerate", "list divisions");
    add_common(enumerate, false, false);
    auto* table = app.add_subcommand("table", "emit a (n, k) count table");
    add_common(table, true, true);
    auto* fit = app.add_subcommand("fit", "fit and verify closed-form polynomials");
    add_common(fit, false, true);
    auto* verify = app.add_subcommand("verify", "cross-engine equivalence suite");
    verify->add_option("--edge-limit", edge_limit, "brute-force edge guard");
    auto* symmetry = app.add_subcommand("symmetry", "Burnside orbit reports");
    add_common(symmetry, false, false);
    auto* bench = app.add_subcommand("bench", "time dp vs brute");
    add_common(bench, false, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed())
            return cmd_count(parse_range(m_text), parse_range(n_text),
                             parse_range(k_text), engine, edge_limit, output);
        if (enumerate->parsed()) {
            Range m = parse_range(m_text), n = parse_range(n_text), k = parse_range(k_text);
            if (m.lo != m.hi || n.lo != n.hi || k.lo != k.hi)
                throw gridiv::input_error("enumerate needs single m, n, k");
            return cmd_enumerate(m.lo, n.lo, k.lo, edge_limit, output);
        }
        if (table->parsed()) {
            std::string fmt = table->count("--format") ? format : "csv";
            return cmd_table(parse_range(m_text), parse_range(n_text),
                             parse_range(k_text), engine, fmt, edge_limit, output);
        }
        if (fit->parsed()) {
            std::string fmt = fit->count("--format") ? format : "json";
            return cmd_fit(parse_range(k_text), fmt, output);
        }
        if (verify->parsed()) return cmd_verify(edge_limit);
        if (symmetry->parsed())
            return cmd_symmetry(parse_range(m_text), parse_range(n_text),
                                parse_range(k_text), edge_limit, output);
        if (bench->parsed())
            return cmd_bench(parse_range(m_text), parse_range(n_text), edge_limit);
    } catch (const gridiv::oracle_mismatch& e) {
        print_error_json("oracle_disagreement", e.what());
        return kExitOracle;
    } catch (const gridiv::size_error& e) {
        print_error_json("guard_exceeded", e.what());
        return kExitGuard;
    } catch (const gridiv::input_error& e) {
        print_error_json("input_error", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        print_error_json("input_error", e.what());
        return kExitInput;
    }
    return kExitOk;
}
