#include "a2m/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <regex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "a2m/constructor.hpp"
#include "a2m/generators.hpp"
#include "a2m/graph6.hpp"
#include "a2m/graph_ops.hpp"
#include "a2m/invariants.hpp"
#include "a2m/packing.hpp"
#include "a2m/serialize.hpp"

namespace a2m::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

enum class Status { Ok, Failed, Skipped };

const char* status_name(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::Failed: return "failed";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

struct EllResult {
    int ell = 0;
    Status status = Status::Skipped;
    std::string detail;
    std::string certificate;  // JSON text, only when ok
};

struct SweepExtra {
    int ell = 0;
    bool iff_checked = false, iff_mismatch = false, iff_exception = false;
    bool odd_packing_checked = false, odd_packing_failed = false;
};

struct GraphResult {
    int line = 0;
    std::string graph6;
    std::string form;
    Status status = Status::Skipped;
    std::string reason;
    std::vector<EllResult> ells;
    std::vector<SweepExtra> extras;
};

int ceil_half(int n) { return (n + 1) / 2; }

/// Runs fn(i) for i in [0, count) on `jobs` threads; results keep index order.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, int jobs, Fn fn) {
    std::vector<Result> out(count);
    const auto workers = static_cast<std::size_t>(
        std::clamp<long>(jobs > 0 ? jobs : static_cast<long>(std::thread::hardware_concurrency()), 1,
                         static_cast<long>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
    };
    if (workers == 1) {
        work();
        return out;
    }
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    return out;
}

void settle(GraphResult& r) {
    if (r.status == Status::Failed) return;
    bool any_ok = false;
    for (const auto& e : r.ells) {
        if (e.status == Status::Failed) {
            r.status = Status::Failed;
            r.reason = "ell=" + std::to_string(e.ell) + ": " + e.detail;
            return;
        }
        any_ok = any_ok || e.status == Status::Ok;
    }
    r.status = any_ok ? Status::Ok : Status::Skipped;
    if (!any_ok && r.reason.empty()) r.reason = "no admissible ell";
}

/// Parse, check alpha <= 2 and order; on success fills `g` and `bound`.
bool admit(const std::string& text, GraphResult& r, Graph& g, int& chi, const Options& options) {
    try {
        g = parse_graph6(text);
    } catch (const Graph6Error& e) {
        r.status = Status::Failed;
        r.reason = std::string("malformed graph6: ") + e.what();
        return false;
    }
    r.graph6 = emit_graph6(g);
    r.form = options.half ? "half" : "chromatic";
    if (g.order() > kMaxSearchOrder) {
        r.status = Status::Failed;
        r.reason = "order " + std::to_string(g.order()) + " exceeds 64";
        return false;
    }
    if (!alpha_at_most_two(g)) {
        r.status = Status::Skipped;
        r.reason = "independence number exceeds two";
        return false;
    }
    chi = chromatic_number_alpha2(g);
    return true;
}

std::vector<int> ell_policy(int bound, const Options& options) {
    if (options.ell) return {*options.ell};
    std::vector<int> ells;
    for (int ell = 1; 2 * ell <= bound; ++ell) ells.push_back(ell);
    return ells;
}

EllResult construct_one(const Graph& g, int ell, int bound, const Options& options) {
    EllResult e{ell, Status::Skipped, {}, {}};
    if (ell < 1 || 2 * ell > bound) {
        e.detail = "2*ell exceeds " + std::string(options.half ? "ceil(n/2)" : "chi");
        return e;
    }
    ConstructOptions co;
    co.oracle.cap = options.cap;
    try {
        Certificate cert = options.half ? construct_half_minor(g, ell, co) : construct_chi_minor(g, ell, co);
        e.status = Status::Ok;
        e.detail = cert.target.describe();
        e.certificate = certificate_to_json(cert).dump(2) + "\n";
    } catch (const std::exception& ex) {
        e.status = Status::Failed;
        e.detail = ex.what();
    }
    return e;
}

std::vector<SweepExtra> sweep_extras(const Graph& g) {
    const int n = g.order();
    std::vector<SweepExtra> extras;
    const bool five_wheel = is_five_wheel(g);
    std::optional<int> kappa, omega;
    for (int ell = 1; ell <= n / 3 + 1; ++ell) {
        SweepExtra x;
        x.ell = ell;
        x.iff_checked = true;
        if (ell == 2 && five_wheel) {
            x.iff_exception = true;
            x.iff_mismatch = !(check_packing_conditions(g, ell).all_hold() && !find_p3_packing(g, ell));
        } else {
            x.iff_mismatch = !packing_characterization_holds(g, ell);
        }
        if (n % 2 == 1 && n >= 4 * ell + 1 && ell <= (n + 3) / 4) {
            if (!kappa) kappa = vertex_connectivity(g);
            if (!omega) omega = clique_number(g).size;
            if (*kappa >= (n - 1 + 3) / 4 && *omega < ceil_half(n)) {
                x.odd_packing_checked = true;
                x.odd_packing_failed = !find_p3_packing(g, ell);
            }
        }
        extras.push_back(x);
    }
    return extras;
}

GraphResult verify_graph(const std::string& text, int line, const Options& options, bool extras) {
    GraphResult r;
    r.line = line;
    r.graph6 = text;
    Graph g;
    int chi = 0;
    if (!admit(text, r, g, chi, options)) return r;
    const int bound = options.half ? ceil_half(g.order()) : chi;
    for (int ell : ell_policy(bound, options)) r.ells.push_back(construct_one(g, ell, bound, options));
    if (extras) {
        r.extras = sweep_extras(g);
        for (const auto& x : r.extras) {
            if (x.iff_mismatch) {
                r.status = Status::Failed;
                r.reason = "packing characterisation mismatch at ell=" + std::to_string(x.ell);
            } else if (x.odd_packing_failed) {
                r.status = Status::Failed;
                r.reason = "no packing under the odd-order hypotheses at ell=" + std::to_string(x.ell);
            }
        }
    }
    settle(r);
    return r;
}

RunReport summarize(const std::vector<GraphResult>& results) {
    RunReport report;
    for (const auto& r : results) {
        ++report.processed;
        switch (r.status) {
            case Status::Ok: ++report.succeeded; break;
            case Status::Skipped: ++report.skipped; break;
            case Status::Failed: {
                ++report.failed;
                bool per_ell = false;
                for (const auto& e : r.ells)
                    if (e.status == Status::Failed) {
                        report.failures.push_back({r.line, r.graph6, e.ell, e.detail});
                        per_ell = true;
                    }
                if (!per_ell) report.failures.push_back({r.line, r.graph6, 0, r.reason});
                break;
            }
        }
    }
    return report;
}

void emit_certificates(const std::vector<GraphResult>& results, const Options& options) {
    if (options.emit_dir.empty()) return;
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(options.emit_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + options.emit_dir + ": " + ec.message());
    for (const auto& r : results)
        for (const auto& e : r.ells) {
            if (e.status != Status::Ok) continue;
            const fs::path path = fs::path(options.emit_dir) /
                                  (content_hash(r.graph6) + "_" + r.form + "_ell" + std::to_string(e.ell) + ".json");
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            out << e.certificate;
            if (!out) throw std::runtime_error("cannot write " + path.string());
        }
}

void collect_rows(const std::vector<GraphResult>& results, std::vector<VerifyRow>* rows) {
    if (rows == nullptr) return;
    for (const auto& r : results) {
        if (r.ells.empty()) rows->push_back({r.line, r.graph6, 0, status_name(r.status), r.reason});
        for (const auto& e : r.ells) rows->push_back({r.line, r.graph6, e.ell, status_name(e.status), e.detail});
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string totals_line(const RunReport& report) {
    return "# processed=" + std::to_string(report.processed) + " succeeded=" + std::to_string(report.succeeded) +
           " failed=" + std::to_string(report.failed) + " skipped=" + std::to_string(report.skipped) + "\n";
}

nlohmann::json totals_json(const RunReport& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"line", f.line}, {"graph6", f.graph6}, {"ell", f.ell}, {"reason", f.reason}});
    return {{"processed", report.processed},
            {"succeeded", report.succeeded},
            {"failed", report.failed},
            {"skipped", report.skipped},
            {"failures", std::move(failures)}};
}

}  // namespace

std::vector<InputLine> read_lines(std::istream& in) {
    std::vector<InputLine> lines;
    std::string text;
    for (int number = 1; std::getline(in, text); ++number) {
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty()) continue;
        lines.push_back({number, text});
    }
    if (in.bad()) throw std::runtime_error("read error on input");
    return lines;
}

RunReport cmd_verify(const std::vector<InputLine>& input, const Options& options, std::vector<VerifyRow>* rows) {
    auto start = Clock::now();
    auto results = parallel_map<GraphResult>(input.size(), options.jobs, [&](std::size_t i) {
        return verify_graph(input[i].text, input[i].number, options, false);
    });
    const double construct_time = seconds_since(start);
    start = Clock::now();
    emit_certificates(results, options);
    RunReport report = summarize(results);
    collect_rows(results, rows);
    report.timing = {{"construct", construct_time}, {"emit", seconds_since(start)}};
    return report;
}

RunReport cmd_sweep(int n_lo, int n_hi, const Options& options, std::vector<SweepRow>* rows) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("sweep: bad range");
    if (n_hi > kDefaultExhaustiveCap)
        throw std::invalid_argument("sweep: order " + std::to_string(n_hi) + " exceeds exhaustive cap " +
                                    std::to_string(kDefaultExhaustiveCap));
    RunReport total;
    double enumerate_time = 0, check_time = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto start = Clock::now();
        std::vector<std::string> lines;
        for_each_alpha2(n, [&](const Graph& g) { lines.push_back(emit_graph6(g)); });
        enumerate_time += seconds_since(start);

        start = Clock::now();
        auto results = parallel_map<GraphResult>(lines.size(), options.jobs, [&](std::size_t i) {
            return verify_graph(lines[i], 0, options, true);
        });
        check_time += seconds_since(start);
        emit_certificates(results, options);

        RunReport part = summarize(results);
        total.processed += part.processed;
        total.succeeded += part.succeeded;
        total.failed += part.failed;
        total.skipped += part.skipped;
        total.failures.insert(total.failures.end(), part.failures.begin(), part.failures.end());
        if (rows == nullptr) continue;

        SweepRow all;
        all.n = n;
        std::map<int, SweepRow> by_ell;
        auto row = [&](int ell) -> SweepRow& {
            auto [it, fresh] = by_ell.try_emplace(ell);
            if (fresh) it->second.n = n, it->second.ell = ell;
            return it->second;
        };
        for (const auto& r : results) {
            ++all.graphs;
            all.constructed += r.status == Status::Ok;
            all.construct_failed += r.status == Status::Failed;
            all.construct_skipped += r.status == Status::Skipped;
            if (r.status == Status::Failed) all.failing_graph6.push_back(r.graph6);
            for (const auto& e : r.ells) {
                SweepRow& s = row(e.ell);
                ++s.graphs;
                s.constructed += e.status == Status::Ok;
                s.construct_failed += e.status == Status::Failed;
                s.construct_skipped += e.status == Status::Skipped;
                if (e.status == Status::Failed) s.failing_graph6.push_back(r.graph6);
            }
            for (const auto& x : r.extras) {
                SweepRow& s = row(x.ell);
                for (SweepRow* t : {&s, &all}) {
                    t->iff_checked += x.iff_checked;
                    t->iff_mismatch += x.iff_mismatch;
                    t->iff_exception += x.iff_exception;
                    t->odd_packing_checked += x.odd_packing_checked;
                    t->odd_packing_failed += x.odd_packing_failed;
                }
                if (x.iff_mismatch || x.odd_packing_failed) s.failing_graph6.push_back(r.graph6);
            }
        }
        rows->push_back(std::move(all));
        for (auto& [ell, s] : by_ell) rows->push_back(std::move(s));
    }
    total.timing = {{"enumerate", enumerate_time}, {"check", check_time}};
    return total;
}

RunReport cmd_oracle_check(const std::vector<InputLine>& input, const std::optional<MinorTarget>& target,
                           const Options& options, std::vector<VerifyRow>* rows) {
    auto start = Clock::now();
    auto results = parallel_map<GraphResult>(input.size(), options.jobs, [&](std::size_t i) {
        GraphResult r;
        r.line = input[i].number;
        r.graph6 = input[i].text;
        Graph g;
        int chi = 0;
        if (!admit(input[i].text, r, g, chi, options)) return r;
        const int bound = options.half ? ceil_half(g.order()) : chi;

        std::vector<int> ells;
        if (target) {
            const bool construction_form = target->kind == MinorTarget::Kind::CliqueJoinIndependent &&
                                      2 * target->clique_count <= bound &&
                                      target->independent_count == bound - target->clique_count;
            if (!construction_form) {
                r.status = Status::Skipped;
                r.reason = target->describe() + " is not the construction target for this graph";
                return r;
            }
            ells.push_back(target->clique_count);
        } else {
            ells = ell_policy(bound, options);
        }

        for (int ell : ells) {
            EllResult e = construct_one(g, ell, bound, options);
            if (e.status == Status::Ok) {
                const auto t = MinorTarget::clique_join_independent(ell, bound - ell);
                try {
                    auto found = find_minor_bruteforce(g, t, OracleOptions{options.cap, std::nullopt});
                    if (!found) {
                        e.status = Status::Failed;
                        e.detail = "disagreement: constructor validated " + t.describe() + " but the oracle found none";
                    } else if (!is_valid_model(g, t, *found)) {
                        e.status = Status::Failed;
                        e.detail = "oracle returned an invalid model for " + t.describe();
                    } else {
                        e.detail = t.describe() + " agree";
                    }
                } catch (const OracleInfeasible& ex) {
                    e.status = Status::Skipped;
                    e.detail = ex.what();
                }
            }
            e.certificate.clear();
            r.ells.push_back(std::move(e));
        }
        settle(r);
        return r;
    });
    RunReport report = summarize(results);
    collect_rows(results, rows);
    report.timing = {{"check", seconds_since(start)}};
    return report;
}

MinorTarget parse_target(const std::string& text) {
    static const std::regex complete(R"(K_?\{?(\d+)\}?)");
    static const std::regex join(R"(K\^\{?(\d+)\}?_\{(\d+),(\d+)\})");
    static const std::regex pair(R"((\d+),(\d+))");
    std::smatch m;
    if (std::regex_match(text, m, complete)) return MinorTarget::complete(std::stoi(m[1]));
    if (std::regex_match(text, m, join)) {
        if (m[1] != m[2]) throw std::invalid_argument("target " + text + ": clique sizes differ");
        return MinorTarget::clique_join_independent(std::stoi(m[1]), std::stoi(m[3]));
    }
    if (std::regex_match(text, m, pair)) return MinorTarget::clique_join_independent(std::stoi(m[1]), std::stoi(m[2]));
    throw std::invalid_argument("cannot parse target '" + text + "'");
}

std::pair<int, int> parse_range(const std::string& text) {
    static const std::regex range(R"((\d+)(?:\.\.(\d+))?)");
    std::smatch m;
    if (!std::regex_match(text, m, range)) throw std::invalid_argument("cannot parse range '" + text + "'");
    const int lo = std::stoi(m[1]);
    const int hi = m[2].matched ? std::stoi(m[2]) : lo;
    return {lo, hi};
}

std::string render_verify(const RunReport& report, const std::vector<VerifyRow>& rows, Format format) {
    if (format == Format::Json) {
        nlohmann::json j = totals_json(report);
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows)
            out.push_back({{"line", r.line}, {"graph6", r.graph6}, {"ell", r.ell}, {"status", r.status}, {"detail", r.detail}});
        j["rows"] = std::move(out);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "line,graph6,ell,status,detail\n";
    for (const auto& r : rows)
        out << r.line << ',' << csv_field(r.graph6) << ',' << (r.ell > 0 ? std::to_string(r.ell) : "") << ','
            << r.status << ',' << csv_field(r.detail) << '\n';
    out << totals_line(report);
    return out.str();
}

std::string render_sweep(const RunReport& report, const std::vector<SweepRow>& rows, Format format) {
    auto failures = [](const SweepRow& r) {
        std::string s;
        for (const auto& g : r.failing_graph6) s += (s.empty() ? "" : ";") + g;
        return s;
    };
    if (format == Format::Json) {
        nlohmann::json j = totals_json(report);
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows)
            out.push_back({{"n", r.n},
                           {"ell", r.ell == 0 ? nlohmann::json("all") : nlohmann::json(r.ell)},
                           {"graphs", r.graphs},
                           {"constructed", r.constructed},
                           {"construct_failed", r.construct_failed},
                           {"construct_skipped", r.construct_skipped},
                           {"iff_checked", r.iff_checked},
                           {"iff_mismatch", r.iff_mismatch},
                           {"iff_exception", r.iff_exception},
                           {"odd_packing_checked", r.odd_packing_checked},
                           {"odd_packing_failed", r.odd_packing_failed},
                           {"failures", r.failing_graph6}});
        j["rows"] = std::move(out);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "n,ell,graphs,constructed,construct_failed,construct_skipped,iff_checked,iff_mismatch,iff_exception,"
           "odd_packing_checked,odd_packing_failed,failures\n";
    for (const auto& r : rows)
        out << r.n << ',' << (r.ell == 0 ? std::string("all") : std::to_string(r.ell)) << ',' << r.graphs << ','
            << r.constructed << ',' << r.construct_failed << ',' << r.construct_skipped << ',' << r.iff_checked << ','
            << r.iff_mismatch << ',' << r.iff_exception << ',' << r.odd_packing_checked << ',' << r.odd_packing_failed << ','
            << csv_field(failures(r)) << '\n';
    out << totals_line(report);
    return out.str();
}

std::string content_hash(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace a2m::cli
