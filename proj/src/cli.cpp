#include "severi/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "severi/cache.hpp"
#include "severi/errors.hpp"
#include "severi/severi_plane.hpp"
#include "severi/severi_quadric.hpp"
#include "severi/surfaces.hpp"
#include "severi/thresholds.hpp"
#include "severi/universal.hpp"

namespace severi {

namespace {

using ojson = nlohmann::ordered_json;

struct GlobalOptions {
    bool json = false;
    bool stats = false;
    std::string cache_dir;
};

struct SeveriOptions {
    int d = 0;
    int m = 0;
    int n = 0;
    int delta = 0;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
};

struct TableOptions {
    int d_max = 0;
    int m_max = 0;
    int n_max = 0;
    int delta_max = 0;
    unsigned jobs = 1;
};

struct ThresholdOptions {
    int delta = 0;
    std::optional<long> d;
    long e = 0;
    long m = 0;
    std::optional<long> p;
    std::optional<long> n;
    int r = 0;
    std::string klass;
    bool explain = false;
};

struct FitOptions {
    int delta_max = 0;
    std::vector<std::string> inputs;
    std::string out_file;
    bool force = false;
    unsigned jobs = 1;
};

struct VerifyOptions {
    std::string surface;
    std::string klass;
    int delta = 0;
    std::string series_file;
};

struct AuditOptions {
    std::string surface;
    std::string klass;
};

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

// "p2" | "f<e>" | "x<r>", case-insensitive
SurfaceModel parse_surface(const std::string& text)
{
    const std::string s = lower(text);
    try {
        if (s == "p2") {
            return SurfaceModel::p2();
        }
        if (s.size() >= 2 && s[0] == 'f') {
            return SurfaceModel::hirzebruch(std::stoi(s.substr(1)));
        }
        if (s.size() >= 2 && s[0] == 'x') {
            return SurfaceModel::del_pezzo(std::stoi(s.substr(1)));
        }
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const DomainError*>(&e) != nullptr) {
            throw;
        }
    }
    throw DomainError("unknown surface '" + text + "' (expected P2, F<e> or X<r>)");
}

FitSource verify_source(const std::string& surface, const std::string& klass)
{
    const std::string s = lower(surface);
    if (s == "p2") {
        return FitSource::parse("p2:" + klass);
    }
    if (s == "f0") {
        return FitSource::parse("f0:" + klass);
    }
    throw DomainError("verify needs --surface p2 or f0");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot read " + path);
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw DomainError("cannot write " + path);
    }
    out << text;
}

class Commands {
public:
    Commands(GlobalOptions& g, std::ostream& out) : g_(g), out_(out) {}

    MemoStore& memo() { return memo_; }

    void severi_p2(const SeveriOptions& o)
    {
        BigInt value;
        if (o.alpha || o.beta) {
            const PlaneKey key{o.d, o.delta, TangencyProfile::parse(o.alpha.value_or("")),
                               TangencyProfile::parse(o.beta.value_or(""))};
            value = severi_plane(key, memo_);
        } else {
            value = severi_plane_simple(o.d, o.delta, memo_);
        }
        print_value("P2", ojson{{"d", o.d}}, o, value);
    }

    void severi_f0(const SeveriOptions& o)
    {
        BigInt value;
        if (o.alpha || o.beta) {
            const QuadricKey key{o.m, o.n, o.delta, TangencyProfile::parse(o.alpha.value_or("")),
                                 TangencyProfile::parse(o.beta.value_or(""))};
            value = severi_quadric(key, memo_);
        } else {
            value = severi_quadric_simple(o.m, o.n, o.delta, memo_);
        }
        print_value("F0", ojson{{"m", o.m}, {"n", o.n}}, o, value);
    }

    void table_p2(const TableOptions& o)
    {
        const auto rows = severi_plane_table(o.d_max, o.delta_max, memo_, o.jobs);
        ojson j{{"surface", "P2"}, {"delta_max", o.delta_max}, {"rows", ojson::array()}};
        for (int d = 1; d <= o.d_max; ++d) {
            ojson values = ojson::array();
            std::string line = "d=" + std::to_string(d) + ":";
            for (const auto& v : rows[d - 1]) {
                values.push_back(to_decimal(v));
                line += " " + to_decimal(v);
            }
            j["rows"].push_back({{"d", d}, {"values", values}});
            if (!g_.json) {
                out_ << line << "\n";
            }
        }
        if (g_.json) {
            out_ << j.dump() << "\n";
        }
    }

    void table_f0(const TableOptions& o)
    {
        const auto cells = severi_quadric_table(o.m_max, o.n_max, o.delta_max, memo_, o.jobs);
        ojson j{{"surface", "F0"}, {"delta_max", o.delta_max}, {"rows", ojson::array()}};
        for (int m = 0; m <= o.m_max; ++m) {
            for (int n = 0; n <= o.n_max; ++n) {
                ojson values = ojson::array();
                std::string line = "(" + std::to_string(m) + "," + std::to_string(n) + "):";
                for (const auto& v : cells[m][n]) {
                    values.push_back(to_decimal(v));
                    line += " " + to_decimal(v);
                }
                j["rows"].push_back({{"m", m}, {"n", n}, {"values", values}});
                if (!g_.json) {
                    out_ << line << "\n";
                }
            }
        }
        if (g_.json) {
            out_ << j.dump() << "\n";
        }
    }

    void threshold_p2(const ThresholdOptions& o)
    {
        const P2Bounds bounds = p2_bounds(o.delta);
        ojson b{{"goettsche_d_min", bounds.goettsche_d_min}, {"kst_d_min", bounds.kst_d_min}};
        if (!o.d) {
            out_ << b.dump() << "\n";
            return;
        }
        const ThresholdReport report = p2_report(*o.d, o.delta);
        print_report(report, o.explain, &b);
    }

    void threshold_hirzebruch(const ThresholdOptions& o)
    {
        if (o.p.has_value() == o.n.has_value()) {
            throw CLI::ValidationError("threshold hirzebruch", "give exactly one of --p and --n");
        }
        const long p = o.p ? *o.p : *o.n - o.e * o.m;
        print_report(hirzebruch_report(o.e, o.m, p, o.delta), o.explain, nullptr);
    }

    void threshold_delpezzo(const ThresholdOptions& o)
    {
        const SurfaceModel s = SurfaceModel::del_pezzo(o.r);
        print_report(delpezzo_report(o.r, parse_class(s, o.klass), o.delta), o.explain, nullptr);
    }

    void fit(const FitOptions& o)
    {
        std::vector<FitSource> sources;
        if (o.inputs.empty()) {
            sources = default_fit_sources(o.delta_max);
        } else {
            for (const auto& text : o.inputs) {
                sources.push_back(FitSource::parse(text));
            }
        }
        const auto inputs = severi_series_all(sources, o.delta_max, memo_, o.force, o.jobs);
        const UniversalSeries u = fit_universal(o.delta_max, inputs);
        const std::string text = to_json(u).dump(2) + "\n";
        if (!o.out_file.empty()) {
            write_file(o.out_file, text);
        }
        if (g_.json) {
            out_ << text;
        } else {
            if (u.forced) {
                out_ << "warning: fit uses uncertified inputs (--force)\n";
            }
            for (int delta = 0; delta <= u.order; ++delta) {
                out_ << "G_" << delta << " = " << goettsche_polynomial(u, delta).to_string() << "\n";
            }
        }
    }

    void verify(const VerifyOptions& o)
    {
        const auto j = nlohmann::json::parse(read_file(o.series_file), nullptr, false);
        if (j.is_discarded()) {
            throw DomainError("series file " + o.series_file + " is not valid JSON");
        }
        const UniversalSeries u = universal_from_json(j);
        const VerifyRecord record = verify_equality(u, verify_source(o.surface, o.klass), o.delta, memo_);
        out_ << to_json(record).dump() << "\n";
    }

    void audit(const AuditOptions& o)
    {
        std::vector<SurfaceModel> models;
        if (!o.surface.empty()) {
            models.push_back(parse_surface(o.surface));
        } else {
            if (!o.klass.empty()) {
                throw CLI::ValidationError("audit", "--class needs --surface");
            }
            models.push_back(SurfaceModel::p2());
            for (int e = 0; e <= 3; ++e) {
                models.push_back(SurfaceModel::hirzebruch(e));
            }
            for (int r = 0; r <= 6; ++r) {
                models.push_back(SurfaceModel::del_pezzo(r));
            }
        }
        ojson all = ojson::array();
        for (const auto& s : models) {
            all.push_back(audit_one(s, o.klass));
        }
        if (g_.json) {
            out_ << all.dump() << "\n";
            return;
        }
        for (const auto& j : all) {
            out_ << j["surface"].get<std::string>() << ": rank " << j["picard_rank"] << ", K = "
                 << j["K"].get<std::string>() << ", K^2 = " << j["K2"] << ", c2 = " << j["c2"];
            if (j.contains("minus_one_classes")) {
                out_ << ", " << j["minus_one_classes"].size() << " (-1)-classes";
            }
            out_ << "\n";
            if (j.contains("minus_one_classes") && !j["minus_one_classes"].empty()) {
                std::string list;
                for (const auto& c : j["minus_one_classes"]) {
                    list += (list.empty() ? "" : " ") + c.get<std::string>();
                }
                out_ << "  (-1)-classes: " << list << "\n";
            }
            if (j.contains("class")) {
                const auto& c = j["class"];
                out_ << "  L = " << c["text"].get<std::string>() << ": dim|L| = " << c["dim"]
                     << (c["lower_bound_only"].get<bool>() ? " (lower bound)" : "")
                     << ", p_a = " << c["arithmetic_genus"] << ", (L^2, L.K) = (" << c["L2"] << ", "
                     << c["LK"] << ")\n";
            }
        }
    }

private:
    void print_value(const std::string& surface, const ojson& klass, const SeveriOptions& o, const BigInt& v)
    {
        if (g_.json) {
            ojson j{{"surface", surface}, {"class", klass}, {"delta", o.delta}};
            if (o.alpha || o.beta) {
                j["alpha"] = o.alpha.value_or("");
                j["beta"] = o.beta.value_or("");
            }
            j["value"] = to_decimal(v);
            out_ << j.dump() << "\n";
        } else {
            out_ << to_decimal(v) << "\n";
        }
    }

    void print_report(const ThresholdReport& report, bool explain_it, const ojson* bounds)
    {
        if (explain_it) {
            out_ << explain(report);
            return;
        }
        ojson j = to_json(report);
        if (bounds != nullptr) {
            j["bounds"] = *bounds;
        }
        out_ << j.dump() << "\n";
    }

    static ojson audit_one(const SurfaceModel& s, const std::string& klass)
    {
        const DivisorClass K = canonical_class(s);
        ojson j{{"surface", s.name()},
                {"picard_rank", s.picard_rank()},
                {"K", format_class(s, K)},
                {"K2", intersect(s, K, K)},
                {"c2", s.euler_number()}};
        if (s.kind() == SurfaceKind::DelPezzo ||
            (s.kind() == SurfaceKind::Hirzebruch && s.parameter() == 1)) {
            ojson list = ojson::array();
            for (const auto& c : minus_one_classes(s)) {
                list.push_back(format_class(s, c));
            }
            j["minus_one_classes"] = list;
        }
        if (!klass.empty()) {
            const DivisorClass L = parse_class(s, klass);
            const LinearSystemDim dim = dim_linear_system(s, L);
            const ChernData c = chern_data(s, L);
            j["class"] = {{"text", format_class(s, L)},
                          {"coords", L.coords},
                          {"dim", dim.value},
                          {"lower_bound_only", dim.lower_bound_only},
                          {"effectivity", dim.effectivity == Effectivity::Exact ? "exact" : "proxy"},
                          {"arithmetic_genus", arithmetic_genus(s, L)},
                          {"L2", c.l2},
                          {"LK", c.lk}};
        }
        return j;
    }

    GlobalOptions& g_;
    std::ostream& out_;
    MemoStore memo_;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Severi degrees, universal node polynomials and threshold certificates", "severi"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--stats", g.stats, "print recursion statistics to stderr");
    app.add_option("--cache-dir", g.cache_dir, "persistent memo cache directory")->envname("SEVERI_CACHE");

    Commands commands(g, out);
    std::function<void()> action;

    // severi
    SeveriOptions so;
    auto* sev = app.add_subcommand("severi", "generalized Severi degree")->require_subcommand(1);
    auto* sev_p2 = sev->add_subcommand("p2", "plane curves of degree d");
    sev_p2->add_option("--d", so.d, "degree")->required();
    auto* sev_f0 = sev->add_subcommand("f0", "curves of bidegree (m,n) on P1 x P1");
    sev_f0->add_option("--m", so.m, "multiple of the (1,0) class")->required();
    sev_f0->add_option("--n", so.n, "multiple of the (0,1) class")->required();
    for (auto* c : {sev_p2, sev_f0}) {
        c->add_option("--delta", so.delta, "number of nodes")->required();
        c->add_option("--alpha", so.alpha, "fixed contact profile, e.g. 0,1");
        c->add_option("--beta", so.beta, "moving contact profile, e.g. 3");
    }
    sev_p2->callback([&] { action = [&] { commands.severi_p2(so); }; });
    sev_f0->callback([&] { action = [&] { commands.severi_f0(so); }; });

    // table
    TableOptions to;
    auto* table = app.add_subcommand("table", "tables of Severi degrees")->require_subcommand(1);
    auto* table_p2 = table->add_subcommand("p2", "N^{d,delta} for 1 <= d <= d-max");
    table_p2->add_option("--d-max", to.d_max, "largest degree")->required();
    auto* table_f0 = table->add_subcommand("f0", "N^{(m,n),delta} for m <= m-max, n <= n-max");
    table_f0->add_option("--m-max", to.m_max, "largest multiple of the first ruling")->required();
    table_f0->add_option("--n-max", to.n_max, "largest multiple of the second ruling")->required();
    for (auto* c : {table_p2, table_f0}) {
        c->add_option("--delta-max", to.delta_max, "largest number of nodes")->required();
        c->add_option("--jobs", to.jobs, "worker threads")->check(CLI::PositiveNumber);
    }
    table_p2->callback([&] { action = [&] { commands.table_p2(to); }; });
    table_f0->callback([&] { action = [&] { commands.table_f0(to); }; });

    // threshold
    ThresholdOptions th;
    auto* thr = app.add_subcommand("threshold", "threshold certificates")->require_subcommand(1);
    auto* thr_p2 = thr->add_subcommand("p2", "bounds for O(d) on P2");
    thr_p2->add_option("--d", th.d, "degree; adds the full report");
    auto* thr_h = thr->add_subcommand("hirzebruch", "L = pF + mG on F_e");
    thr_h->add_option("--e", th.e, "Hirzebruch index")->required()->check(CLI::NonNegativeNumber);
    thr_h->add_option("--m", th.m, "coefficient of G")->required();
    thr_h->add_option("--p", th.p, "coefficient of F in the (F, G) basis");
    thr_h->add_option("--n", th.n, "coefficient of F in the (F, E) basis");
    auto* thr_dp = thr->add_subcommand("delpezzo", "classes on the blowup X_r of P2");
    thr_dp->add_option("--r", th.r, "number of blown-up points, 0..6")->required();
    thr_dp->add_option("--class", th.klass, "a0;a1,...,ar or a multiple of K")->required();
    for (auto* c : {thr_p2, thr_h, thr_dp}) {
        c->add_option("--delta", th.delta, "number of nodes")->required();
        c->add_flag("--explain", th.explain, "one line per certificate");
    }
    thr_p2->callback([&] { action = [&] { commands.threshold_p2(th); }; });
    thr_h->callback([&] { action = [&] { commands.threshold_hirzebruch(th); }; });
    thr_dp->callback([&] { action = [&] { commands.threshold_delpezzo(th); }; });

    // fit
    FitOptions fo;
    auto* fit = app.add_subcommand("fit", "fit the universal series up to order delta-max");
    fit->add_option("--delta-max", fo.delta_max, "series order")->required();
    fit->add_option("--inputs", fo.inputs, "p2:D or f0:M,N (repeatable)");
    fit->add_option("--out", fo.out_file, "write the series JSON here");
    fit->add_flag("--force", fo.force, "accept inputs without a threshold certificate");
    fit->add_option("--jobs", fo.jobs, "worker threads")->check(CLI::PositiveNumber);
    fit->callback([&] { action = [&] { commands.fit(fo); }; });

    // verify
    VerifyOptions vo;
    auto* ver = app.add_subcommand("verify", "compare the recursion with G_delta");
    ver->add_option("--surface", vo.surface, "p2 or f0")->required();
    ver->add_option("--class", vo.klass, "d, or m,n")->required();
    ver->add_option("--delta", vo.delta, "number of nodes")->required();
    ver->add_option("--series", vo.series_file, "series JSON written by fit")->required();
    ver->callback([&] { action = [&] { commands.verify(vo); }; });

    // audit
    AuditOptions ao;
    auto* aud = app.add_subcommand("audit", "surface model facts");
    aud->add_option("--surface", ao.surface, "P2, F<e> or X<r>; all models if omitted");
    aud->add_option("--class", ao.klass, "also report dim|L| for this class");
    aud->callback([&] { action = [&] { commands.audit(ao); }; });

    for (auto* c : {sev, sev_p2, sev_f0, table, table_p2, table_f0, thr, thr_p2, thr_h, thr_dp, fit, ver, aud}) {
        c->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        std::unique_ptr<CacheFile> cache;
        if (!g.cache_dir.empty()) {
            cache = std::make_unique<CacheFile>(g.cache_dir);
            cache->load(commands.memo(), err);
        }
        action();
        if (cache) {
            cache->append_fresh(commands.memo());
        }
        if (g.stats) {
            const MemoStats s = commands.memo().stats();
            err << "stats: expansions=" << s.expansions << " hits=" << s.hits << " preloaded=" << s.preloaded
                << "\n";
        }
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

} // namespace severi
