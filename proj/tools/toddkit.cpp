// toddkit command-line front end.
//
// Exit status: 0 success, 1 a positivity or non-negativity check failed,
// 2 input error, 3 validation error (e.g. the Calabi-Yau condition).

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "toddkit/io.hpp"
#include "toddkit/toddkit.hpp"

namespace fs = std::filesystem;
using namespace toddkit;
using io::Json;

namespace {

enum Exit { kOk = 0, kPositivityFailed = 1, kInputError = 2, kValidationError = 3 };

struct Common {
    std::vector<std::string> argv;
    bool json = false;
};

Json envelope(const Common& common, const std::string& command, std::optional<std::uint64_t> seed,
              const std::string& digest_source) {
    Json j;
    j["tool"] = "toddkit";
    j["version"] = kVersion;
    j["command"] = command;
    j["argv"] = common.argv;
    if (seed) j["seed"] = *seed;
    j["inputs_digest"] = io::digest(digest_source);
    return j;
}

void emit(const Common& common, const Json& report, const std::string& text) {
    if (common.json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

std::string join(const std::vector<std::string>& lines) {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
}

std::string weights_text(const std::vector<BigRational>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + to_display_string(w[i]);
    return s + ")";
}

// ---------------------------------------------------------------------------
// cicy

Json b_table_json(const cicy::BTable& table) {
    Json out = Json::array();
    for (const auto& e : table.entries())
        out.push_back({{"label", e.label()}, {"kind", cicy::to_string(e.kind)}, {"value", io::rational(e.value)}});
    return out;
}

Json certificate_json(const cicy::EffectivityCertificate& c) {
    Json j;
    j["class"] = c.checked_class;
    j["method"] = cicy::to_string(c.method);
    j["seed"] = c.seed;
    j["samples"] = c.sample_count;
    j["minimum_pairing"] = io::rational(c.minimum_pairing);
    j["minimizer"] = io::coefficients(c.minimizer);
    if (c.coefficients_nonnegative) j["coefficients_nonnegative"] = *c.coefficients_nonnegative;
    if (c.chain) {
        Json groups = Json::array();
        for (const auto& g : c.chain->groups) {
            Json gj;
            gj["factor"] = g.r + 1;
            gj["in_unit_set"] = g.in_unit_set;
            gj["rule"] = cicy::to_string(g.rule);
            gj["negative_entries"] = g.negative_entries;
            gj["bounds_hold"] = g.bounds_hold;
            if (g.positive_poly) gj["positive_polynomial"] = *g.positive_poly;
            gj["pushforward_nonnegative"] = g.pushforward_nonnegative;
            groups.push_back(gj);
        }
        j["symbolic_chain"] = {{"groups", groups},
                               {"remainder_nonnegative", c.chain->remainder_nonnegative},
                               {"decomposition_exact", c.chain->decomposition_exact},
                               {"ok", c.chain->ok()}};
    }
    j["effective"] = c.effective;
    return j;
}

struct ConfigResult {
    std::string file;
    int code = kOk;
    Json record;
    std::vector<std::string> text;
    std::string error;
};

ConfigResult check_one(const std::string& path, std::size_t samples, std::uint64_t seed) {
    ConfigResult out;
    out.file = fs::path(path).filename().string();
    Json& rec = out.record;
    rec["file"] = out.file;
    try {
        const ConfigMatrix x = io::load_config(path);
        rec["id"] = x.id();
        rec["notation"] = x.notation();
        rec["dim"] = x.dim();
        out.text.push_back(x.id() + " " + x.notation() + "  dim " + std::to_string(x.dim()));

        const auto table = cicy::b_coefficients(x);
        rec["b_table"] = b_table_json(table);
        const auto ring = cicy::comparison_ring(x);
        const bool methods_agree = table.reassemble(ring) == BigRational(2880) * cicy::td4_class(x, ring);
        rec["b_table_matches_series"] = methods_agree;
        if (!methods_agree) out.code = kPositivityFailed;

        if (x.strictly_positive()) {
            const auto signs = cicy::classify_b_signs(x, table);
            Json neg = Json::array();
            for (const auto& s : signs.entries)
                if (s.sign < 0)
                    neg.push_back({{"label", s.entry.label()},
                                   {"value", io::rational(s.entry.value)},
                                   {"pattern", cicy::to_string(s.pattern)},
                                   {"consistent", s.consistent}});
            rec["b_signs"] = {{"negative", neg}, {"violations", signs.violations}};
            out.text.push_back("  B entries: " + std::to_string(table.entries().size()) + ", negative " +
                               std::to_string(signs.negative_count) + ", sign-lemma violations " +
                               std::to_string(signs.violations));
            if (signs.violations) out.code = kPositivityFailed;
        } else {
            rec["notes"].push_back("degrees not all positive: B-sign classification skipped");
        }

        Json certs = Json::array();
        if (x.dim() < 4) {
            rec["notes"].push_back("dim < 4: td4 check skipped");
            out.text.push_back("  td4: skipped (dim < 4)");
        } else if (!x.strictly_positive()) {
            rec["notes"].push_back("degrees not all positive: td4 certificate skipped");
            out.text.push_back("  td4: skipped (degrees not all positive)");
        } else {
            if (x.dim() == 4) {
                const auto integral = cicy_integral(cicy::td4_class(x), x);
                rec["integral_td4"] = io::rational(integral);
                out.text.push_back("  int td4 = " + to_display_string(integral));
            }
            const auto cert = cicy::check_td4_fake_effective(x, samples, seed);
            certs.push_back(certificate_json(cert));
            out.text.push_back("  td4: " + std::string(cert.effective ? "effective" : "NOT EFFECTIVE") +
                               ", min pairing " + to_display_string(cert.minimum_pairing) + " at " +
                               weights_text(cert.minimizer) + " over " + std::to_string(cert.sample_count) +
                               " samples, symbolic chain " + (cert.chain->ok() ? "ok" : "FAILED"));
            if (!cert.effective) out.code = kPositivityFailed;
        }
        if (x.dim() >= 2) {
            const auto cert = cicy::check_c2_fake_effective(x, samples, seed);
            certs.push_back(certificate_json(cert));
            out.text.push_back("  c2: " + std::string(cert.effective ? "effective" : "NOT EFFECTIVE") +
                               ", min pairing " + to_display_string(cert.minimum_pairing));
            if (!cert.effective) out.code = kPositivityFailed;
        }
        rec["certificates"] = certs;
        rec["verdict"] = out.code == kOk ? "effective" : "FAILED";
    } catch (const ValidationError& e) {
        out.code = kValidationError;
        rec["error"] = {{"kind", "validation"}, {"row", e.row}, {"message", e.what()}};
        out.error = out.file + ": validation error: " + e.what();
    } catch (const InputError& e) {
        out.code = kInputError;
        rec["error"] = {{"kind", "input"}, {"message", e.what()}};
        out.error = out.file + ": input error: " + e.what();
    } catch (const std::exception& e) {
        out.code = kInputError;
        rec["error"] = {{"kind", "domain"}, {"message", e.what()}};
        out.error = out.file + ": error: " + e.what();
    }
    return out;
}

std::vector<std::string> input_files(const std::string& path) {
    if (!fs::is_directory(path)) return {path};
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(path))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("no .json files in " + path);
    return files;
}

int cmd_cicy_check(const Common& common, const std::string& path, std::size_t samples, std::uint64_t seed,
                   unsigned jobs) {
    if (samples < 1) throw InputError("--samples must be at least 1");
    const bool batch = fs::is_directory(path);
    const auto files = input_files(path);
    std::string digest_source;
    for (const auto& f : files) digest_source += fs::path(f).filename().string() + "\n" + io::read_file(f);

    std::vector<ConfigResult> results(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < files.size();) results[i] = check_one(files[i], samples, seed);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = kOk;
    for (const auto& r : results) code = std::max(code, r.code);

    Json report = envelope(common, "cicy check", seed, digest_source);
    report["samples"] = samples;
    std::string text;
    if (!batch) {
        report["results"] = results[0].record;
        text = join(results[0].text);
    } else {
        Json recs = Json::array();
        std::size_t effective = 0, failed = 0, errors = 0;
        for (const auto& r : results) {
            recs.push_back(r.record);
            text += join(r.text);
            effective += r.code == kOk;
            failed += r.code == kPositivityFailed;
            errors += r.code >= kInputError;
        }
        report["results"] = recs;
        report["summary"] = {{"configs", results.size()},
                             {"effective", effective},
                             {"failed", failed},
                             {"errors", errors}};
        text += "summary: " + std::to_string(results.size()) + " configs, " + std::to_string(effective) +
                " effective, " + std::to_string(failed) + " failed, " + std::to_string(errors) + " errors\n";
    }
    report["verdict"] = code == kOk ? "ok" : code == kPositivityFailed ? "positivity check FAILED" : "error";
    emit(common, report, text);
    if (!common.json)
        for (const auto& r : results)
            if (!r.error.empty()) std::cerr << r.error << "\n";
    return code;
}

int cmd_cicy_chern(const Common& common, const std::string& path) {
    const std::string bytes = io::read_file(path);
    const ConfigMatrix x = validate_config(io::config_from_json(io::parse_json(bytes, path)));
    const auto ring = cicy::comparison_ring(x);
    const auto series = cicy::total_chern(x, ring);
    const unsigned top = static_cast<unsigned>(std::min(x.dim(), 4));

    Json report = envelope(common, "cicy chern", std::nullopt, bytes);
    Json res;
    res["id"] = x.id();
    res["notation"] = x.notation();
    res["dim"] = x.dim();
    std::string text = x.id() + " " + x.notation() + "  dim " + std::to_string(x.dim()) + "\n";
    const AmbientSpace space = AmbientSpace::of(x);
    for (unsigned d = 1; d <= top; ++d) {
        const auto cd = recast(graded_part(series, d), space.ring());
        res["c" + std::to_string(d)] = io::polynomial(cd);
        text += "  c" + std::to_string(d) + " = " + to_string(cd, {}, "H") + "\n";
    }
    const bool c2_ok = cicy::c2_from_coeffs(cicy::c2_coeffs(x), ring) == graded_part(series, 2);
    const bool c4_ok = cicy::c4_from_coeffs(cicy::c4_coeffs(x), ring) == graded_part(series, 4);
    const auto table = cicy::b_coefficients(x);
    const bool b_ok = table.reassemble(ring) == BigRational(2880) * cicy::td4_class(x, ring);
    res["closed_forms_match_series"] = {{"c2", c2_ok}, {"c4", c4_ok}, {"b_table", b_ok}};
    if (x.dim() >= 4) {
        const auto td4 = cicy::td4_class(x);
        res["td4"] = io::polynomial(td4);
        text += "  2880*td4 = " + to_string(BigRational(2880) * td4, {}, "H") + "\n";
    }
    if (x.dim() == 4) {
        const auto integral = cicy_integral(cicy::td4_class(x), x);
        res["integral_td4"] = io::rational(integral);
        text += "  int td4 = " + to_display_string(integral) + "\n";
    }
    const auto euler = cicy_integral(recast(graded_part(cicy::total_chern(x, space.ring()), x.dim()), space.ring()), x);
    res["euler_characteristic"] = io::rational(euler);
    text += "  euler characteristic = " + to_display_string(euler) + "\n";
    res["b_table"] = b_table_json(table);
    text += "  B:";
    for (const auto& e : table.entries()) text += " " + e.label() + "=" + to_display_string(e.value);
    text += "\n  closed formulas vs series: c2 " + std::string(c2_ok ? "agree" : "DIFFER") + ", c4 " +
            (c4_ok ? "agree" : "DIFFER") + ", B " + (b_ok ? "agree" : "DIFFER") + "\n";
    report["results"] = res;
    const bool ok = c2_ok && c4_ok && b_ok;
    report["verdict"] = ok ? "ok" : "methods disagree";
    emit(common, report, text);
    return ok ? kOk : kPositivityFailed;
}

// ---------------------------------------------------------------------------
// hk

Json positivity_json(const hk::ToddPositivity& p) {
    return {{"all_coefficients_nonnegative", p.all_effective}, {"coefficients", io::coefficients(p.coefficients)}};
}

int cmd_hk_chi(const Common& common, const std::string& model_spec, const std::string& file,
               const std::optional<std::string>& lambda, const std::optional<std::string>& qv, bool poly_only) {
    const std::string command = poly_only ? "hk poly" : "hk chi";
    if (model_spec.empty() == file.empty()) throw InputError("give exactly one of --model or --file");
    if (!poly_only && lambda.has_value() == qv.has_value()) throw InputError("give exactly one of --lambda or --q");

    Json res;
    std::string text;
    std::optional<hk::ChiPolynomial> chi;
    std::optional<hk::ToddPositivity> positivity;
    std::string digest_source;
    if (!file.empty()) {
        digest_source = io::read_file(file);
        const auto table = io::chern_table_from_json(io::parse_json(digest_source, file));
        chi = hk::nieper_chi(table).chi;
        positivity = hk::ToddPositivity{true, chi->poly.coefficients()};
        for (const auto& c : chi->poly.coefficients()) positivity->all_effective = positivity->all_effective && sgn(c) >= 0;
        res["source"] = file;
    } else {
        const auto model = hk::HKModel::parse(model_spec);
        digest_source = model.name();
        chi = hk::chi_polynomial(model);
        positivity = hk::todd_all_effective(model);
        res["model"] = model.name();
        if (!poly_only) {
            const auto bound = hk::h0_lower_bound(model);
            res["h0_lower_bound"] = bound.bound.get_str();
            res["h0_integral_quantity"] = bound.integral_quantity;
            res["h0_integrality_case"] = bound.lemma_case == lemmas::IntegralityCase::one ? 1 : 2;
            text += "h0 lower bound (nef and big L): " + bound.bound.get_str() + "\n";
        }
    }
    res["variable"] = hk::to_string(chi->variable);
    res["polynomial"] = chi->to_string();
    res["coefficients"] = io::coefficients(chi->poly.coefficients());
    res["todd_positivity"] = positivity_json(*positivity);
    text = "chi = " + chi->to_string() + "\n" + text;
    text += std::string("all coefficients >= 0: ") + (positivity->all_effective ? "yes" : "NO") + "\n";

    if (!poly_only) {
        const bool want_q = qv.has_value();
        if (want_q != (chi->variable == hk::ChiVariable::q))
            throw InputError(std::string("this model's chi is a polynomial in ") + hk::to_string(chi->variable) +
                             "; use --" + (chi->variable == hk::ChiVariable::q ? "q" : "lambda"));
        const BigRational x = parse_rational(want_q ? *qv : *lambda);
        const BigRational value = (*chi)(x);
        res["argument"] = io::rational(x);
        res["chi"] = io::rational(value);
        text = "chi(" + to_display_string(x) + ") = " + to_display_string(value) + "\n" + text;
        digest_source += "|" + to_fraction_string(x);
    }
    Json report = envelope(common, command, std::nullopt, digest_source);
    report["results"] = res;
    report["verdict"] = positivity->all_effective ? "ok" : "negative coefficient";
    emit(common, report, text);
    return positivity->all_effective ? kOk : kPositivityFailed;
}

int cmd_hk_nieper(const Common& common, const std::string& file, const std::optional<std::string>& lambda) {
    const std::string bytes = io::read_file(file);
    const auto table = io::chern_table_from_json(io::parse_json(bytes, file));
    const auto ch = hk::chern_to_character(table);
    const auto r = hk::nieper_chi(table);
    Json res;
    res["dim"] = table.dim();
    Json chj;
    for (const auto& [m, v] : ch) chj[hk::monomial_key(m, "ch")] = io::rational(v);
    res["character_numbers"] = chj;
    Json cheb;
    for (const auto& [m, v] : r.chebyshev_form) cheb[hk::monomial_key(m, "T")] = io::rational(v);
    res["chebyshev_form"] = cheb;
    res["chebyshev_text"] = hk::to_string(r.chebyshev_form);
    res["polynomial"] = r.chi.to_string();
    res["coefficients"] = io::coefficients(r.chi.poly.coefficients());
    std::string text = "chi = " + hk::to_string(r.chebyshev_form) + "\n    = " + r.chi.to_string() + "\n";
    if (lambda) {
        const BigRational x = parse_rational(*lambda);
        res["argument"] = io::rational(x);
        res["chi"] = io::rational(r.chi(x));
        text += "chi(" + to_display_string(x) + ") = " + to_display_string(r.chi(x)) + "\n";
    }
    bool nonneg = true;
    for (const auto& c : r.chi.poly.coefficients()) nonneg = nonneg && sgn(c) >= 0;
    res["all_coefficients_nonnegative"] = nonneg;
    Json report = envelope(common, "hk nieper", std::nullopt, bytes + (lambda ? "|" + *lambda : ""));
    report["results"] = res;
    report["verdict"] = nonneg ? "ok" : "negative coefficient";
    emit(common, report, text);
    return nonneg ? kOk : kPositivityFailed;
}

int cmd_hk_fujiki(const Common& common, unsigned n, unsigned b2, const std::string& cx,
                  const std::optional<std::string>& qv, const std::optional<std::string>& cc2) {
    const hk::FujikiData data{n, b2, parse_rational(cx)};
    const auto f = hk::fujiki_monomial_integrals(data);
    const auto cq = hk::c_q_squared(data);
    Json res;
    res["n"] = n;
    res["b2"] = b2;
    res["fujiki_constant"] = io::rational(data.fujiki_c);
    res["integrals"] = {{"e1^2n", io::rational(f.top)},
                        {"e1^(2n-2)*e2^2", io::rational(f.two_two)},
                        {"e1^(2n-4)*e2^4", io::rational(f.four_four)},
                        {"e1^(2n-4)*e2^2*e3^2", io::rational(f.two_two_two)}};
    res["c_q_squared"] = io::rational(cq);
    std::string text = "int e1^2n = " + to_display_string(f.top) + "\nint e1^(2n-2) e2^2 = " +
                       to_display_string(f.two_two) + "\nint e1^(2n-4) e2^4 = " + to_display_string(f.four_four) +
                       "\nint e1^(2n-4) e2^2 e3^2 = " + to_display_string(f.two_two_two) +
                       "\nC(Q^2) = " + to_display_string(cq) + "\n";
    if (qv.has_value() != cc2.has_value()) throw InputError("--q and --cc2 go together");
    if (qv) {
        const auto lam = hk::lambda_from_q(parse_rational(*qv), data, parse_rational(*cc2));
        res["lambda"] = io::rational(lam);
        text += "lambda = " + to_display_string(lam) + "\n";
    }
    Json report = envelope(common, "hk fujiki", std::nullopt,
                           std::to_string(n) + "|" + std::to_string(b2) + "|" + cx + "|" + qv.value_or("") + "|" +
                               cc2.value_or(""));
    report["results"] = res;
    const bool ok = sgn(cq) > 0;
    report["verdict"] = ok ? "ok" : "C(Q^2) not positive";
    emit(common, report, text);
    return ok ? kOk : kPositivityFailed;
}

// ---------------------------------------------------------------------------
// nv, lemma

Json vanishing_json(const nv::VanishingCertificate& c) {
    Json j;
    j["dim"] = c.dim;
    j["case"] = nv::to_string(c.parity);
    j["k"] = c.k;
    j["vanishing_range"] = {1, c.vanishing_upto};
    j["product_over_alpha"] = io::polynomial(c.product);
    j["variables"] = {"t", "beta"};
    j["coefficient_power"] = c.coefficient_power;
    j["coefficient_over_alpha"] = io::polynomial(c.coefficient);
    j["square_sum"] = c.square_sum.get_str();
    if (c.beta_bound) j["beta_upper_bound"] = io::rational(*c.beta_bound);
    if (c.constant_factor) j["chi_O_factor"] = c.constant_factor->get_str();
    j["transcript"] = c.transcript;
    j["rechecked"] = nv::recheck(c);
    return j;
}

int cmd_nv(const Common& common, long dim, bool with_cert) {
    const unsigned bound = nv::min_nonvanishing_bound(dim);
    Json res;
    res["dim"] = dim;
    res["bound"] = bound;
    std::string text = "H^0(X, L^i) != 0 for some 1 <= i <= " + std::to_string(bound) + "\n";
    bool ok = true;
    if (with_cert) {
        const auto c = nv::certificate_for_dim(dim);
        res["certificate"] = vanishing_json(c);
        ok = nv::recheck(c);
        text += std::string("case ") + nv::to_string(c.parity) + " (k = " + std::to_string(c.k) + ")\n";
        for (const auto& line : c.transcript) text += "  " + line + "\n";
        text += std::string("  recheck: ") + (ok ? "ok" : "FAILED") + "\n";
    }
    Json report = envelope(common, with_cert ? "nv cert" : "nv bound", std::nullopt, std::to_string(dim));
    report["results"] = res;
    report["verdict"] = ok ? "ok" : "certificate recheck failed";
    emit(common, report, text);
    return ok ? kOk : kPositivityFailed;
}

int cmd_lemma_integers(const Common& common, unsigned n, const std::string& which, unsigned qmax, unsigned pmax) {
    if (which != "1" && which != "2" && which != "both") throw InputError("--case must be 1, 2 or both");
    if (qmax < 2 || pmax < 1) throw InputError("need --qmax >= 2 and --pmax >= 1");
    const lemmas::SearchBounds b{n, qmax, pmax};
    Json res;
    res["n"] = n;
    res["qmax"] = qmax;
    res["pmax"] = pmax;
    Json cases = Json::array();
    std::string text;
    bool ok = true;
    for (int c : {1, 2}) {
        if (which != "both" && which != std::to_string(c)) continue;
        const auto hits = c == 1 ? lemmas::integer_lemma_case1(b) : lemmas::integer_lemma_case2(b);
        const bool expected_empty = c == 2 || n >= 2;
        Json hj = Json::array();
        for (const auto& h : hits) hj.push_back(io::rational(h));
        cases.push_back({{"case", c}, {"expected_empty", expected_empty}, {"counterexamples", hj}});
        if (expected_empty && !hits.empty()) ok = false;
        text += "case " + std::to_string(c) + ": " + std::to_string(hits.size()) + " non-integral values";
        if (!expected_empty) text += " (lemma needs n >= 2; this is the negative control)";
        if (!hits.empty()) text += ", first " + to_display_string(hits.front());
        text += "\n";
    }
    res["cases"] = cases;
    if (cases.size() == 1) res["counterexamples"] = cases[0]["counterexamples"];
    Json report = envelope(common, "lemma integers", std::nullopt,
                           std::to_string(n) + "|" + which + "|" + std::to_string(qmax) + "|" + std::to_string(pmax));
    report["results"] = res;
    report["verdict"] = ok ? "ok" : "counterexample found";
    emit(common, report, text);
    return ok ? kOk : kPositivityFailed;
}

int cmd_lemma_pospoly(const Common& common, const std::string& file) {
    const std::string bytes = io::read_file(file);
    const auto table = io::qtable_from_json(io::parse_json(bytes, file));
    const auto r = lemmas::positive_poly_expand(table);
    Json res;
    res["K"] = table.size();
    res["m"] = table.front().size() + 1;
    res["expanded"] = io::polynomial(r.expanded);
    res["expanded_text"] = to_string(r.expanded, {}, "x");
    res["all_nonnegative"] = r.all_nonnegative;
    res["closed_form_matches"] = r.closed_form_matches;
    const bool ok = r.all_nonnegative && r.closed_form_matches;
    Json report = envelope(common, "lemma pospoly", std::nullopt, bytes);
    report["results"] = res;
    report["verdict"] = ok ? "ok" : "FAILED";
    emit(common, report,
         "f = " + to_string(r.expanded, {}, "x") + "\nall coefficients >= 0: " + (r.all_nonnegative ? "yes" : "NO") +
             "\nclosed form matches expansion: " + (r.closed_form_matches ? "yes" : "NO") + "\n");
    return ok ? kOk : kPositivityFailed;
}

}  // namespace

int main(int argc, char** argv) {
    Common common;
    // Echo the arguments minus --jobs, which must not change the report.
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--jobs") {
            ++i;
            continue;
        }
        if (a.rfind("--jobs=", 0) == 0) continue;
        common.argv.push_back(a);
    }

    CLI::App app{"Exact Chern/Todd classes, Riemann-Roch polynomials and positivity certificates"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string file, model;
    std::size_t samples = 20;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::optional<std::string> lambda, qv, cc2;
    std::string cx = "1", which = "both";
    unsigned n = 2, b2 = 3, qmax = 50, pmax = 500;
    long dim = 0;

    auto json_flag = [&](CLI::App* cmd) { cmd->add_flag("--json", common.json, "Write the report as JSON"); };

    auto* cicy_cmd = app.add_subcommand("cicy", "Complete-intersection Calabi-Yau configurations")->require_subcommand(1);
    auto* cicy_check = cicy_cmd->add_subcommand("check", "B table, sign classification and effectivity certificates");
    cicy_check->add_option("--file", file, "Configuration file or directory of .json files")->required();
    cicy_check->add_option("--samples", samples, "Nef classes sampled per configuration")->capture_default_str();
    cicy_check->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    cicy_check->add_option("--jobs", jobs, "Parallel workers for directory input")->capture_default_str()->check(CLI::PositiveNumber);
    json_flag(cicy_check);
    auto* cicy_chern = cicy_cmd->add_subcommand("chern", "Chern classes, td4 and B table of one configuration");
    cicy_chern->add_option("--file", file, "Configuration file")->required();
    json_flag(cicy_chern);

    auto* hk_cmd = app.add_subcommand("hk", "Hyperkahler Riemann-Roch")->require_subcommand(1);
    auto* hk_chi = hk_cmd->add_subcommand("chi", "chi(X, L) for a model or a Chern-number table");
    auto* hk_poly = hk_cmd->add_subcommand("poly", "chi polynomial and coefficient positivity");
    for (auto* c : {hk_chi, hk_poly}) {
        c->add_option("--model", model, "hilb:n, kummer:n or og6");
        c->add_option("--file", file, "Chern-number table (JSON)");
        json_flag(c);
    }
    hk_chi->add_option("--lambda", lambda, "Characteristic value lambda(L)");
    hk_chi->add_option("--q", qv, "Beauville-Bogomolov square q(L) (Hilbert schemes)");
    auto* hk_fujiki = hk_cmd->add_subcommand("fujiki", "Orthonormal-basis integrals and C(Q^2)");
    hk_fujiki->add_option("--n", n, "Half dimension")->required();
    hk_fujiki->add_option("--b2", b2, "Second Betti number")->required();
    hk_fujiki->add_option("--cx", cx, "Fujiki constant (rational)")->capture_default_str();
    hk_fujiki->add_option("--q", qv, "q(L), to convert to lambda");
    hk_fujiki->add_option("--cc2", cc2, "C(c2), to convert to lambda");
    json_flag(hk_fujiki);
    auto* hk_nieper = hk_cmd->add_subcommand("nieper", "chi polynomial from a Chern-number table");
    hk_nieper->add_option("--file", file, "Chern-number table (JSON)")->required();
    hk_nieper->add_option("--lambda", lambda, "Evaluate at this lambda");
    json_flag(hk_nieper);

    auto* nv_cmd = app.add_subcommand("nv", "Non-vanishing bounds")->require_subcommand(1);
    auto* nv_bound = nv_cmd->add_subcommand("bound", "Minimal power with a nonzero section");
    auto* nv_cert = nv_cmd->add_subcommand("cert", "Bound with its root-analysis certificate");
    for (auto* c : {nv_bound, nv_cert}) {
        c->add_option("--dim", dim, "Dimension of X")->required();
        json_flag(c);
    }

    auto* lemma_cmd = app.add_subcommand("lemma", "Exhaustive checks of the auxiliary lemmas")->require_subcommand(1);
    auto* lemma_int = lemma_cmd->add_subcommand("integers", "Search for non-integral lambda with integral binomials");
    lemma_int->add_option("--n", n, "Degree n")->capture_default_str();
    lemma_int->add_option("--case", which, "1, 2 or both")->capture_default_str();
    lemma_int->add_option("--qmax", qmax, "Largest denominator")->capture_default_str();
    lemma_int->add_option("--pmax", pmax, "Largest |numerator|")->capture_default_str();
    json_flag(lemma_int);
    auto* lemma_pos = lemma_cmd->add_subcommand("pospoly", "Expand the positive polynomial for a degree table");
    lemma_pos->add_option("--file", file, "Table file: {\"q\": [[...], ...]}")->required();
    json_flag(lemma_pos);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*cicy_check) return cmd_cicy_check(common, file, samples, seed, jobs);
        if (*cicy_chern) return cmd_cicy_chern(common, file);
        if (*hk_chi) return cmd_hk_chi(common, model, file, lambda, qv, false);
        if (*hk_poly) return cmd_hk_chi(common, model, file, std::nullopt, std::nullopt, true);
        if (*hk_fujiki) return cmd_hk_fujiki(common, n, b2, cx, qv, cc2);
        if (*hk_nieper) return cmd_hk_nieper(common, file, lambda);
        if (*nv_bound) return cmd_nv(common, dim, false);
        if (*nv_cert) return cmd_nv(common, dim, true);
        if (*lemma_int) return cmd_lemma_integers(common, n, which, qmax, pmax);
        if (*lemma_pos) return cmd_lemma_pospoly(common, file);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidationError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {  // DomainError, RingMismatch
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
