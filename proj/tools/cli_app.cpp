#include "cli_app.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <thread>

#include <CLI11.hpp>

#include "qpolylog/contour.hpp"
#include "qpolylog/exact.hpp"
#include "qpolylog/identities.hpp"
#include "qpolylog/series.hpp"

namespace qpl::cli {

namespace {

// keys accepted both as --flag and in the config file
const std::vector<std::string> kKeys{"fn", "a", "b", "n", "omega", "z", "hbar", "q", "backend", "tol", "format",
                                     "seed", "identity", "r", "s", "k", "l", "trials", "points", "sweep"};

struct RunConfig {
    std::string command;
    std::string fn = "F";
    IVec a, b, n;
    std::vector<CVec> omega, z;
    cplx hbar = 1.0;
    bool has_q = false;
    cplx q = 0.0;
    std::string backend = "auto";
    double tol = 0;  // 0 = defaults
    std::string format = "json";
    std::uint64_t seed = 20240611;
    std::string identity;
    int r = 0, s = 0, k = 0, l = 0, trials = 20, points = 20;
    std::vector<std::string> sweep;
    nlohmann::json echo;  // the merged config as given
};

struct Sweep {
    std::string var;
    std::vector<double> values;
};

std::string fmt_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

IVec parse_ints(const std::string& s)
{
    IVec v;
    for (auto& t : split(s, ',')) {
        size_t pos = 0;
        int x = 0;
        try {
            x = std::stoi(t, &pos);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + t + "'");
        }
        if (pos != t.size()) throw UsageError("not an integer: '" + t + "'");
        v.push_back(x);
    }
    return v;
}

std::vector<CVec> parse_points(const std::string& s)
{
    std::vector<CVec> pts;
    for (auto& p : split(s, ';')) {
        CVec v;
        for (auto& t : split(p, ',')) v.push_back(parse_complex(t));
        pts.push_back(v);
    }
    return pts;
}

long long parse_int(const nlohmann::json& v, const std::string& key)
{
    if (v.is_number_integer()) return v.get<long long>();
    if (v.is_string()) {
        IVec x = parse_ints(v.get<std::string>());
        if (x.size() == 1) return x[0];
    }
    throw UsageError("--" + key + " expects an integer");
}

std::string as_text(const nlohmann::json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + as_text(v[i]);
        return out;
    }
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return fmt_double(v.get<double>());
    throw UsageError("unsupported config value: " + v.dump());
}

RunConfig build_config(const std::string& command, const nlohmann::json& merged)
{
    RunConfig c;
    c.command = command;
    c.echo = merged;
    for (auto it = merged.begin(); it != merged.end(); ++it) {
        const std::string& key = it.key();
        const auto& v = it.value();
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) throw UsageError("unknown config key: " + key);
        if (key == "fn") c.fn = as_text(v);
        else if (key == "a") c.a = parse_ints(as_text(v));
        else if (key == "b") c.b = parse_ints(as_text(v));
        else if (key == "n") c.n = parse_ints(as_text(v));
        else if (key == "omega") c.omega = parse_points(as_text(v));
        else if (key == "z") c.z = parse_points(as_text(v));
        else if (key == "hbar") c.hbar = parse_complex(as_text(v));
        else if (key == "q") {
            c.q = parse_complex(as_text(v));
            c.has_q = true;
        } else if (key == "backend") c.backend = as_text(v);
        else if (key == "tol") c.tol = std::real(parse_complex(as_text(v)));
        else if (key == "format") c.format = as_text(v);
        else if (key == "seed") {
            long long sd = parse_int(v, key);
            if (sd < 0) throw UsageError("--seed must be non-negative");
            c.seed = static_cast<std::uint64_t>(sd);
        } else if (key == "identity") c.identity = as_text(v);
        else if (key == "r") c.r = static_cast<int>(parse_int(v, key));
        else if (key == "s") c.s = static_cast<int>(parse_int(v, key));
        else if (key == "k") c.k = static_cast<int>(parse_int(v, key));
        else if (key == "l") c.l = static_cast<int>(parse_int(v, key));
        else if (key == "trials") c.trials = static_cast<int>(parse_int(v, key));
        else if (key == "points") c.points = static_cast<int>(parse_int(v, key));
        else if (key == "sweep") {
            if (v.is_array())
                for (auto& e : v) c.sweep.push_back(as_text(e));
            else
                c.sweep.push_back(as_text(v));
        }
    }
    if (c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
    static const std::vector<std::string> fns{"F", "I", "Li", "qLi", "zeta", "bernoulli", "psi"};
    if (std::find(fns.begin(), fns.end(), c.fn) == fns.end()) throw UsageError("unknown --fn " + c.fn);
    static const std::vector<std::string> backends{"auto", "series", "contour", "companion", "closed_form", "exact"};
    if (std::find(backends.begin(), backends.end(), c.backend) == backends.end())
        throw UsageError("unknown --backend " + c.backend);
    if (c.tol < 0) throw UsageError("--tol must be positive");
    return c;
}

QuadratureSpec quad_spec(const RunConfig& c)
{
    QuadratureSpec s;
    if (c.tol > 0) s.tol = c.tol;
    return s;
}

SeriesParams series_params(const RunConfig& c)
{
    SeriesParams p;
    if (c.tol > 0) p.tol = c.tol;
    return p;
}

MultiIndex index_of(const RunConfig& c)
{
    const size_t m = c.n.size();
    if (m == 0) throw UsageError("--n is required");
    IVec a = c.a.empty() ? IVec(m, 1) : c.a;
    IVec b = c.b.empty() ? IVec(m, 1) : c.b;
    if (a.size() != m || b.size() != m) throw UsageError("--a, --b, --n must have the same length");
    return MultiIndex(a, b, c.n);
}

int single(const IVec& v, const char* what)
{
    if (v.size() != 1) throw UsageError(std::string(what) + " expects a single integer here");
    return v[0];
}

// Validation that does not depend on the point; failures are usage errors.
void validate(const RunConfig& c)
{
    if (c.fn == "F" || c.fn == "I") index_of(c);
    if (c.fn == "Li" || c.fn == "qLi" || c.fn == "zeta")
        if (c.n.empty()) throw UsageError("--n is required");
    if (c.fn == "qLi" && c.a.size() != c.n.size()) throw UsageError("--a and --n must have the same length");
    if (c.fn == "bernoulli") {
        if (c.a.size() != 1 || c.b.size() != 1 || c.n.size() != 1)
            throw UsageError("bernoulli takes single --a, --b, --n");
    }
    if (c.fn == "psi") single(c.a, "--a");
}

nlohmann::json error_json(const std::exception& e)
{
    std::string type = "error";
    if (dynamic_cast<const PoleError*>(&e)) type = "pole";
    else if (dynamic_cast<const CapError*>(&e)) type = "cap";
    else if (dynamic_cast<const ConvergenceError*>(&e)) type = "convergence";
    else if (dynamic_cast<const DomainError*>(&e)) type = "domain";
    return {{"type", type}, {"message", e.what()}};
}

struct Point {
    CVec omega;  // or z, depending on the function
    cplx hbar;
};

// one evaluation; throws qpl::Error on domain problems
nlohmann::json eval_point(const RunConfig& c, const Point& p)
{
    const std::string& be = c.backend;
    HbarValue h(p.hbar);
    auto numeric = [](const EvalResult& r) { return to_json(r); };

    if (c.fn == "F") {
        MultiIndex idx = index_of(c);
        if (be == "auto" || be == "contour") return numeric(quad_F(idx, p.omega, h, quad_spec(c)));
        if (be == "closed_form") {
            if (idx.depth() != 1 || idx.b[0] != 0) throw DomainError("closed form needs depth one with b = 0");
            if (p.omega.size() != 1) throw DomainError("one omega per point");
            return numeric(depth1_closed_form(idx.a[0], idx.n[0], p.omega[0]));
        }
        if (be == "series") {
            if (p.hbar != cplx(1.0, 0.0)) throw DomainError("the F series backend needs hbar = 1");
            EvalResult r;
            r.value = h1_formula(idx, p.omega);
            r.backend = Backend::series;
            return numeric(r);
        }
        throw DomainError("backend " + be + " does not evaluate F");
    }
    if (c.fn == "I") {
        MultiIndex idx = index_of(c);
        if (be == "auto" || be == "contour") return numeric(quad_I(idx, p.omega, h, quad_spec(c)));
        if (be == "companion") {
            for (int k = 0; k < idx.depth(); ++k)
                if (idx.a[k] != 1 || idx.b[k] != 1) throw DomainError("companion series need a = b = (1,...,1)");
            return numeric(companion_sum_I(idx.n, p.omega, h, series_params(c)));
        }
        throw DomainError("backend " + be + " does not evaluate I");
    }
    if (c.fn == "Li") {
        // --z: series in z; --omega: integral in w with z = (e^w_1, ..., -e^w_m)
        bool use_z = !c.z.empty();
        if (be == "contour" && use_z) throw DomainError("the contour backend takes --omega, not --z");
        if (be == "contour" || (be == "auto" && !use_z)) return numeric(quad_Li(c.n, p.omega, quad_spec(c)));
        if (be == "series" || be == "auto") return numeric(multiple_polylog(c.n, p.omega, series_params(c)));
        throw DomainError("backend " + be + " does not evaluate Li");
    }
    if (c.fn == "qLi") {
        if (be != "auto" && be != "series") throw DomainError("qLi has only the series backend");
        cplx q = c.has_q ? c.q : h.q();
        return numeric(q_multiple_polylog(c.a, c.n, p.omega, q, series_params(c)));
    }
    if (c.fn == "zeta") {
        if (be != "auto" && be != "contour") throw DomainError("zeta_hbar has only the contour backend");
        return numeric(quad_zeta_hbar(c.n, h, quad_spec(c)));
    }
    if (c.fn == "psi") {
        if (be != "auto" && be != "series") throw DomainError("psi has only the series backend");
        if (p.omega.size() != 1) throw DomainError("psi takes one x per point");
        cplx q = c.has_q ? c.q : h.q();
        return numeric(pochhammer_psi(c.a[0], p.omega[0], q));
    }
    // bernoulli
    const int a = c.a[0], b = c.b[0], n = c.n[0];
    if (p.omega.size() != 1) throw DomainError("bernoulli takes one omega per point");
    if (be == "contour") return numeric(quad_bernoulli_circle(a, b, n, p.omega[0], h));
    if (be != "auto" && be != "exact") throw DomainError("backend " + be + " does not evaluate bernoulli");
    ExactPoly B = bernoulli_exact(a, b, n);
    std::string text = B.to_string();
    for (int m = 0; m <= a + b + n; ++m)
        if (B == q_poly(m)) text = "Q_" + std::to_string(m) + "(ω)";
    EvalResult r;
    r.value = B.eval(p.omega[0], p.hbar);
    r.backend = Backend::exact;
    nlohmann::json j = numeric(r);
    j["polynomial"] = text;
    return j;
}

std::vector<Point> points_of(const RunConfig& c)
{
    const bool z_based = c.fn == "qLi" || c.fn == "psi" || (c.fn == "Li" && !c.z.empty());
    const std::vector<CVec>& src = z_based ? c.z : c.omega;
    std::vector<Point> pts;
    if (c.fn == "zeta") {
        pts.push_back({CVec{}, c.hbar});
        return pts;
    }
    if (src.empty()) throw UsageError(z_based ? "--z is required" : "--omega is required");
    for (auto& v : src) pts.push_back({v, c.hbar});
    return pts;
}

nlohmann::json input_json(const RunConfig& c, const Point& p)
{
    nlohmann::json j = {{"hbar", to_json(p.hbar)}};
    if (c.fn != "zeta") j[(c.fn == "qLi" || c.fn == "psi" || (c.fn == "Li" && !c.z.empty())) ? "z" : "omega"] = to_json(p.omega);
    return j;
}

// runs fn(i) for i < count on a small worker pool; results land at their index
template <class R>
std::vector<R> parallel_map(size_t count, const std::function<R(size_t)>& fn)
{
    std::vector<R> out(count);
    std::atomic<size_t> next{0};
    size_t workers = std::max<size_t>(1, std::min<size_t>(count, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> fut;
    for (size_t w = 0; w < workers; ++w)
        fut.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next++; i < count; i = next++) out[i] = fn(i);
        }));
    for (auto& f : fut) f.get();
    return out;
}

struct Evaluated {
    nlohmann::json record;
    bool failed = false;
};

std::vector<Evaluated> evaluate_all(const RunConfig& c, const std::vector<Point>& pts)
{
    return parallel_map<Evaluated>(pts.size(), [&](size_t i) {
        Evaluated e;
        e.record = {{"input", input_json(c, pts[i])}};
        try {
            e.record["result"] = eval_point(c, pts[i]);
        } catch (const UsageError&) {
            throw;
        } catch (const Error& ex) {
            e.record["error"] = error_json(ex);
            e.failed = true;
        }
        return e;
    });
}

void write_json(std::ostream& out, const RunConfig& c, const nlohmann::json& results, const nlohmann::json& summary)
{
    nlohmann::json doc = {{"schema", 1}, {"command", c.command}, {"config", c.echo}, {"results", results},
                          {"summary", summary}};
    out << canonical_dump(doc) << "\n";
}

std::string num(double x)
{
    return std::isfinite(x) ? fmt_double(x) : "";
}

int cmd_eval(const RunConfig& c, std::ostream& out)
{
    validate(c);
    auto pts = points_of(c);
    auto ev = evaluate_all(c, pts);
    int failed = 0;
    for (auto& e : ev) failed += e.failed;
    if (c.format == "json") {
        nlohmann::json results = nlohmann::json::array();
        for (auto& e : ev) results.push_back(e.record);
        write_json(out, c, results, {{"points", ev.size()}, {"errors", failed}});
    } else {
        out << "point,input,re,im,err_estimate,backend,polynomial,error\r\n";
        for (size_t i = 0; i < ev.size(); ++i) {
            const auto& r = ev[i].record;
            out << i << "," << csv_field(canonical_dump(r["input"])) << ",";
            if (ev[i].failed) {
                out << ",,,,," << csv_field(r["error"]["type"].get<std::string>() + ": " +
                                            r["error"]["message"].get<std::string>());
            } else {
                const auto& v = r["result"];
                std::string poly = v.contains("polynomial") ? v["polynomial"].get<std::string>() : "";
                out << num(v["value"]["re"].is_number() ? v["value"]["re"].get<double>() : NAN) << ","
                    << num(v["value"]["im"].is_number() ? v["value"]["im"].get<double>() : NAN) << ","
                    << num(v["err_estimate"].is_number() ? v["err_estimate"].get<double>() : NAN) << ","
                    << csv_field(v["backend"].get<std::string>()) << "," << csv_field(poly) << ",";
            }
            out << "\r\n";
        }
    }
    return failed ? domain : ok;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    if (c.identity.empty()) throw UsageError("verify needs an identity name (or 'all')");
    std::vector<std::string> names;
    if (c.identity == "all")
        names = identity_names();
    else {
        auto all = identity_names();
        if (std::find(all.begin(), all.end(), c.identity) == all.end())
            throw UsageError("unknown identity: " + c.identity);
        names = {c.identity};
    }
    SuiteOptions o;
    o.seed = c.seed;
    o.spec = quad_spec(c);
    o.r = c.r;
    o.s = c.s;
    o.k = c.k;
    o.l = c.l;
    o.trials = c.trials;
    o.points = c.points;
    auto parts = parallel_map<Reports>(names.size(), [&](size_t i) { return run_identity(names[i], o); });
    Reports all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    sort_reports(all);
    int passed = 0;
    for (auto& r : all) passed += r.pass;
    const int failed = static_cast<int>(all.size()) - passed;
    if (c.format == "json") {
        nlohmann::json results = nlohmann::json::array();
        for (auto& r : all) results.push_back(to_json(r));
        write_json(out, c, results, {{"total", all.size()}, {"passed", passed}, {"failed", failed}});
    } else {
        out << "identity,params,residual,tolerance,pass\r\n";
        for (auto& r : all)
            out << csv_field(r.identity_name) << "," << csv_field(canonical_dump(r.params)) << "," << num(r.residual)
                << "," << num(r.tolerance) << "," << (r.pass ? "true" : "false") << "\r\n";
    }
    err << "verify " << c.identity << ": " << passed << " passed, " << failed << " failed\n";
    return failed ? verify_failed : ok;
}

Sweep parse_sweep(const std::string& s)
{
    auto parts = split(s, ':');
    if (parts.size() != 4) throw UsageError("--sweep expects var:start:stop:step, got '" + s + "'");
    Sweep sw{parts[0], {}};
    static const std::vector<std::string> vars{"omega", "omega1", "omega2", "omega3", "hbar"};
    if (std::find(vars.begin(), vars.end(), sw.var) == vars.end()) throw UsageError("cannot sweep " + sw.var);
    double a = std::real(parse_complex(parts[1])), b = std::real(parse_complex(parts[2]));
    double st = std::real(parse_complex(parts[3]));
    if (!(st > 0) || b < a) throw UsageError("sweep needs start <= stop and step > 0");
    const long cnt = static_cast<long>(std::floor((b - a) / st + 1e-9)) + 1;
    if (cnt > 100000) throw UsageError("sweep too long");
    for (long i = 0; i < cnt; ++i) sw.values.push_back(a + i * st);
    return sw;
}

int cmd_table(const RunConfig& c, std::ostream& out)
{
    validate(c);
    if (c.sweep.empty()) throw UsageError("table needs at least one --sweep");
    if (c.sweep.size() > 2) throw UsageError("dimension error: at most two swept variables");
    if (c.fn == "zeta" || c.fn == "qLi" || c.fn == "psi" || (c.fn == "Li" && !c.z.empty()))
        throw UsageError("table sweeps omega or hbar; use F, I, Li (with --omega) or bernoulli");
    std::vector<Sweep> sw;
    for (auto& s : c.sweep) sw.push_back(parse_sweep(s));
    size_t m = c.fn == "bernoulli" ? 1 : c.n.size();
    CVec base = c.omega.empty() ? CVec(m, 0.0) : c.omega.front();
    if (base.size() != m) throw UsageError("--omega has the wrong length for the index");

    std::vector<Point> pts;
    std::vector<std::vector<double>> keys;
    auto apply = [&](Point& p, const Sweep& s, double v) {
        if (s.var == "hbar") {
            p.hbar = v;
            return;
        }
        size_t k = s.var == "omega" ? 0 : static_cast<size_t>(s.var.back() - '1');
        if (k >= p.omega.size()) throw UsageError(s.var + " exceeds the depth");
        p.omega[k] = cplx(v, p.omega[k].imag());
    };
    const size_t n1 = sw[0].values.size(), n2 = sw.size() > 1 ? sw[1].values.size() : 1;
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n2; ++j) {
            Point p{base, c.hbar};
            apply(p, sw[0], sw[0].values[i]);
            std::vector<double> key{sw[0].values[i]};
            if (sw.size() > 1) {
                apply(p, sw[1], sw[1].values[j]);
                key.push_back(sw[1].values[j]);
            }
            pts.push_back(p);
            keys.push_back(key);
        }
    auto ev = evaluate_all(c, pts);
    int failed = 0;
    for (auto& e : ev) failed += e.failed;
    if (c.format == "json") {
        nlohmann::json results = nlohmann::json::array();
        for (size_t i = 0; i < ev.size(); ++i) {
            nlohmann::json r = ev[i].record;
            for (size_t t = 0; t < sw.size(); ++t) r["sweep"][sw[t].var] = keys[i][t];
            results.push_back(r);
        }
        write_json(out, c, results, {{"rows", ev.size()}, {"errors", failed}});
    } else {
        for (auto& s : sw) out << csv_field(s.var) << ",";
        out << "re,im,err_estimate,error\r\n";
        for (size_t i = 0; i < ev.size(); ++i) {
            for (double v : keys[i]) out << num(v) << ",";
            const auto& r = ev[i].record;
            if (ev[i].failed)
                out << ",,," << csv_field(r["error"]["message"].get<std::string>());
            else
                out << num(r["result"]["value"]["re"].get<double>()) << ","
                    << num(r["result"]["value"]["im"].get<double>()) << ","
                    << num(r["result"]["err_estimate"].get<double>()) << ",";
            out << "\r\n";
        }
    }
    return failed ? domain : ok;
}

}  // namespace

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

cplx parse_complex(const std::string& raw)
{
    std::string s;
    for (char ch : raw)
        if (ch != ' ') s += ch;
    auto to_d = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        size_t pos = 0;
        double v;
        try {
            v = std::stod(t, &pos);
        } catch (const std::exception&) {
            throw UsageError("not a complex number: '" + raw + "'");
        }
        if (pos != t.size()) throw UsageError("not a complex number: '" + raw + "'");
        return v;
    };
    if (s.empty()) throw UsageError("empty complex number");
    if (s.back() != 'i') return to_d(s);
    s.pop_back();
    // split at the last sign that is not an exponent sign
    size_t cut = std::string::npos;
    for (size_t j = s.size(); j-- > 1;)
        if ((s[j] == '+' || s[j] == '-') && s[j - 1] != 'e' && s[j - 1] != 'E') {
            cut = j;
            break;
        }
    if (cut == std::string::npos) return cplx(0.0, to_d(s));
    return cplx(to_d(s.substr(0, cut)), to_d(s.substr(cut)));
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"qpolylog: quantum polylogarithms, their series and identity checks"};
    std::string command, positional_identity, config_path;
    bool conventions = false;
    app.add_option("command", command, "eval | verify | table");
    app.add_option("name", positional_identity, "identity name for verify");
    app.add_option("--config", config_path, "JSON config file; flags override it");
    app.add_flag("--conventions", conventions, "print the frozen conventions and exit");
    std::map<std::string, std::string> flag_values;
    std::map<std::string, std::vector<std::string>> sweep_values;
    for (auto& k : kKeys) {
        if (k == "sweep")
            app.add_option("--sweep", sweep_values[k], "var:start:stop:step (var = omega, omega2, hbar)");
        else
            app.add_option("--" + k, flag_values[k]);
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    if (conventions) {
        out << conventions_text();
        return ok;
    }

    try {
        if (command != "eval" && command != "verify" && command != "table")
            throw UsageError("command must be eval, verify or table");
        nlohmann::json merged = nlohmann::json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw UsageError("cannot open config " + config_path);
            try {
                merged = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(std::string("config parse error: ") + e.what());
            }
            if (!merged.is_object()) throw UsageError("config must be a JSON object");
        }
        for (auto& k : kKeys) {
            auto* opt = app.get_option("--" + k);
            if (opt->count() == 0) continue;
            if (k == "sweep")
                merged[k] = sweep_values[k];
            else
                merged[k] = flag_values[k];
        }
        if (!positional_identity.empty()) merged["identity"] = positional_identity;
        RunConfig c = build_config(command, merged);
        if (command == "eval") return cmd_eval(c, out);
        if (command == "verify") return cmd_verify(c, out, err);
        return cmd_table(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return domain;
    }
}

}  // namespace qpl::cli
