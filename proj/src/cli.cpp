#include "schurkit/cli.hpp"

#include "schurkit/bundle.hpp"
#include "schurkit/chern_weil.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/forms.hpp"
#include "schurkit/io.hpp"
#include "schurkit/sampling.hpp"
#include "schurkit/schur.hpp"
#include "schurkit/theorem.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace schurkit {

namespace {

void emit(const Json& j, const std::string& format, std::ostream& out) {
    if (format == "text")
        out << render_text(j);
    else
        out << j.dump(2) << "\n";
}

Json partition_json(const Partition& l) {
    Json parts = Json::array();
    for (int p : l.parts())
        parts.push_back(p);
    return parts;
}

Json pairings_json(const std::vector<std::pair<std::string, Rational>>& pairings) {
    Json obj = Json::object();
    for (const auto& [name, value] : pairings)
        obj[name] = rational_to_string(value);
    return obj;
}

struct CommonArgs {
    std::string format = "json";
};

// polynomial argument: JSON object or infix expression
ChernPoly read_poly(const std::string& text, std::optional<int> rank) {
    std::string trimmed = text;
    std::size_t first = trimmed.find_first_not_of(" \t");
    if (first != std::string::npos && trimmed[first] == '{') {
        Json j = Json::parse(trimmed, nullptr, true);
        return chern_poly_from_json(j);
    }
    return parse_chern_poly_expr(text, rank);
}

int cmd_schur(const std::string& lambda_arg, int rank, const CommonArgs& common,
              std::ostream& out) {
    Partition lambda = partition_from_string(lambda_arg);
    ChernPoly p = schur_poly(lambda, rank);
    emit(chern_poly_to_json(p), common.format, out);
    return 0;
}

int cmd_decompose(const std::string& poly_arg, std::optional<int> rank,
                  const CommonArgs& common, std::ostream& out) {
    ChernPoly p = read_poly(poly_arg, rank);
    auto coeffs = schur_decompose(p);
    Json j{{"rank", p.rank()},
           {"degree", p.is_zero() ? 0 : p.homogeneous_degree()},
           {"coefficients", schur_coefficients_to_json(coeffs)},
           {"numerically_positive", is_numerically_positive(p)}};
    emit(j, common.format, out);
    return 0;
}

int cmd_twist(const std::string& lambda_arg, int rank, const CommonArgs& common,
              std::ostream& out) {
    Partition lambda = partition_from_string(lambda_arg);
    TwistSeries s = twisted_schur(lambda, rank);
    Json j = twist_series_to_json(s);
    j["lambda"] = partition_json(lambda);
    emit(j, common.format, out);
    return 0;
}

int cmd_derived(const std::string& lambda_arg, int i, int rank, bool decompose_flag,
                const CommonArgs& common, std::ostream& out) {
    Partition lambda = partition_from_string(lambda_arg);
    ChernPoly p = derived_schur(lambda, i, rank);
    Json j{{"rank", rank},
           {"lambda", partition_json(lambda)},
           {"i", i},
           {"poly", chern_poly_to_json(p)}};
    if (decompose_flag) {
        auto coeffs = schur_decompose(p);
        j["schur_coefficients"] = schur_coefficients_to_json(coeffs);
        j["numerically_positive"] = is_numerically_positive(p);
    }
    emit(j, common.format, out);
    return 0;
}

int cmd_intersect(const std::string& variety_arg, const std::string& classes_arg,
                  const CommonArgs& common, std::ostream& out) {
    VarietyModel v = VarietyModel::from_name(variety_arg);
    std::vector<CohomClass> classes;
    Json names = Json::array();
    std::size_t pos = 0;
    while (pos <= classes_arg.size()) {
        std::size_t comma = classes_arg.find(',', pos);
        std::string token = classes_arg.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token.find_first_not_of(" \t") == std::string::npos)
            throw ParseError("empty class expression", pos);
        classes.push_back(parse_class_expr(token, v));
        names.push_back(classes.back().to_string());
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    Rational value = intersection_number(classes);
    Json j{{"variety", v.name()}, {"classes", names}, {"value", rational_to_string(value)}};
    emit(j, common.format, out);
    return 0;
}

int cmd_check_theorem_a(const std::string& variety_arg, const std::string& bundle_arg,
                        const std::string& lambda_arg, const CommonArgs& common,
                        std::ostream& out) {
    VarietyModel v = VarietyModel::from_name(variety_arg);
    BundleModel e = parse_bundle(bundle_arg, v);
    Partition lambda = partition_from_string(lambda_arg);
    PositivityReport report = check_theorem_A(e, lambda);
    Json j{{"variety", report.variety},
           {"bundle", report.bundle},
           {"lambda", partition_json(report.lambda)},
           {"pairings", pairings_json(report.pairings)},
           {"verdict", report.verdict_string()}};
    if (!report.note.empty())
        j["note"] = report.note;
    emit(j, common.format, out);
    return report.verdict == PositivityReport::Verdict::Fails ? 1 : 0;
}

int cmd_hodge_index(const std::string& variety_arg, const std::string& bundle_arg,
                    const std::string& lambda_arg, const CommonArgs& common,
                    std::ostream& out) {
    VarietyModel v = VarietyModel::from_name(variety_arg);
    BundleModel e = parse_bundle(bundle_arg, v);
    Partition lambda = partition_from_string(lambda_arg);
    HodgeIndexReport report = hodge_index_matrix(e, lambda);
    Json qm = Json::array();
    for (const auto& row : report.q) {
        Json r = Json::array();
        for (const auto& x : row)
            r.push_back(rational_to_string(x));
        qm.push_back(r);
    }
    Json j{{"variety", report.variety},
           {"bundle", report.bundle},
           {"lambda", partition_json(report.lambda)},
           {"rays", Json(report.ray_names)},
           {"Q", qm},
           {"signature", Json::array({report.signature[0], report.signature[1],
                                      report.signature[2]})}};
    emit(j, common.format, out);
    return 0;
}

int cmd_perturb(const std::string& variety_arg, const std::string& bundle_arg,
                const std::string& lambda_arg, const std::string& omega_arg,
                const std::string& l_arg, const CommonArgs& common, std::ostream& out) {
    VarietyModel v = VarietyModel::from_name(variety_arg);
    BundleModel e = parse_bundle(bundle_arg, v);
    Partition lambda = partition_from_string(lambda_arg);

    auto ample_default = [&v]() {
        CohomClass w = v.zero_class(1);
        for (const CohomClass& ray : v.nef_rays())
            w = w + ray;
        return w;
    };
    CohomClass omega = omega_arg.empty() ? ample_default() : parse_class_expr(omega_arg, v);
    CohomClass big_l = l_arg.empty() ? ample_default() : parse_class_expr(l_arg, v);

    PerturbationReport report = perturbation_check(e, lambda, omega, big_l);
    Json coeffs = Json::array();
    for (const auto& c : report.t_coefficients)
        coeffs.push_back(rational_to_string(c));
    Json j{{"variety", report.variety},
           {"bundle", report.bundle},
           {"lambda", partition_json(report.lambda)},
           {"omega", omega.to_string()},
           {"L", big_l.to_string()},
           {"t_coefficients", coeffs},
           {"expected_constant", rational_to_string(report.expected_constant)},
           {"expected_linear", rational_to_string(report.expected_linear)},
           {"identity_holds", report.identity_holds}};
    emit(j, common.format, out);
    return report.identity_holds ? 0 : 1;
}

int cmd_form_check(const std::string& file, const std::string& mode_arg, int samples,
                   std::uint64_t seed, bool use_float, const CommonArgs& common,
                   std::ostream& out) {
    std::ifstream in(file);
    if (!in)
        throw UsageError("cannot open forms file '" + file + "'");
    Json doc = Json::parse(in);
    const Json& list = doc.is_array() ? doc : doc.at("forms");

    PositivityOptions opts;
    opts.mode = mode_arg == "strict" ? PositivityMode::Strict : PositivityMode::Semi;
    opts.exact = !use_float;
    opts.samples = samples;
    opts.seed = seed;

    bool any_failed = false;
    Json results = Json::array();
    for (const auto& fj : list) {
        ConstForm f = form_from_json(fj);
        PositivityVerdict v = is_positive(f, opts);
        bool failed = v.violated() ||
                      (opts.mode == PositivityMode::Strict &&
                       v.kind == PositivityVerdict::Kind::PositiveSemi);
        any_failed = any_failed || failed;
        Json entry{{"n", f.n()},
                   {"p", f.p()},
                   {"q", f.q()},
                   {"verdict", v.describe()},
                   {"method", v.method},
                   {"min_value", v.min_value}};
        if (v.method == "sampled") {
            entry["samples"] = v.samples_used;
            entry["seed"] = v.seed;
        }
        results.push_back(entry);
    }
    Json j{{"file", file}, {"mode", mode_arg}, {"forms", results}};
    emit(j, common.format, out);
    return any_failed ? 1 : 0;
}

int cmd_cw_lab(int n, int r, std::uint64_t seed, int samples, double eps, int form_samples,
               const std::string& tensor_file, const std::string& write_tensor,
               const CommonArgs& common, std::ostream& out) {
    const double tol = 1e-9;
    bool failed = false;

    std::vector<CurvatureTensor> tensors;
    if (!tensor_file.empty()) {
        std::ifstream in(tensor_file);
        if (!in)
            throw UsageError("cannot open tensor file '" + tensor_file + "'");
        CurvatureTensor t = curvature_from_json(Json::parse(in));
        n = t.n();
        r = t.r();
        tensors.push_back(std::move(t));
    } else {
        for (int i = 0; i < samples; ++i)
            tensors.push_back(random_nakano_positive(n, r, derive_seed(seed, i), eps));
    }

    if (!write_tensor.empty() && !tensors.empty()) {
        std::ofstream ofs(write_tensor);
        ofs << curvature_to_json(tensors.front()).dump(2) << "\n";
    }

    double min_griffiths = 0;
    bool first_g = true;
    double max_imag = 0, max_det_trace = 0;
    for (std::size_t i = 0; i < tensors.size(); ++i) {
        GriffithsResult g =
            griffiths_min(tensors[i], tol, derive_seed(seed ^ 0x5bd1u, i), 16);
        if (first_g || g.value < min_griffiths) {
            min_griffiths = g.value;
            first_g = false;
        }
        if (tensor_file.empty() && g.value <= tol)
            failed = true; // Nakano samples must come out Griffiths-positive
        for (int k = 1; k <= std::min(n, r); ++k) {
            ConstForm ck = chern_form(tensors[i], k);
            ConstForm diff = ck - ck.conjugate();
            max_imag = std::max(max_imag, diff.max_abs());
            ConstForm alt = chern_form_from_power_traces(tensors[i], k);
            max_det_trace = std::max(max_det_trace, (ck - alt).max_abs());
        }
    }
    if (max_imag > 1e-10 || max_det_trace > 1e-10)
        failed = true;

    // Schur-form positivity statistics; exact bidegrees get certified
    // verdicts, middle bidegrees sampled ones. Statistics only: the general
    // positivity question is open and the lab never aggregates a verdict.
    Json schur_stats = Json::array();
    for (int k = 1; k <= n; ++k) {
        for (const Partition& lambda : Partition::enumerate(k, r)) {
            int positive = 0, violations = 0;
            std::string method;
            for (std::size_t i = 0; i < tensors.size(); ++i) {
                ConstForm sf = schur_form(tensors[i], lambda);
                PositivityOptions opts;
                opts.exact = false;
                opts.tolerance = 1e-10;
                opts.samples = form_samples;
                opts.seed = derive_seed(seed ^ 0xf0f0u, i);
                PositivityVerdict v = is_positive(sf, opts);
                method = v.method;
                if (v.violated())
                    ++violations;
                else
                    ++positive;
            }
            schur_stats.push_back(Json{{"lambda", partition_json(lambda)},
                                       {"bidegree", k},
                                       {"method", method},
                                       {"no_violation", positive},
                                       {"violations", violations},
                                       {"samples", tensors.size()}});
        }
    }

    Json j{{"n", n},
           {"r", r},
           {"seed", seed},
           {"samples", static_cast<int>(tensors.size())},
           {"eps", eps},
           {"griffiths_min", min_griffiths},
           {"griffiths_tolerance", tol},
           {"max_chern_imaginary", max_imag},
           {"max_det_vs_trace", max_det_trace},
           {"schur_forms", schur_stats}};
    if (!tensor_file.empty())
        j["tensor_file"] = tensor_file;
    emit(j, common.format, out);
    return failed ? 1 : 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Schur-class positivity calculus"};
    app.require_subcommand(1);

    CommonArgs common;
    auto add_format = [&common](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    std::string lambda_arg, poly_arg, variety_arg, bundle_arg, classes_arg;
    std::string omega_arg, l_arg, file_arg, mode_arg = "semi";
    std::string tensor_file, write_tensor;
    int rank = 0, derived_i = 0, lab_n = 2, lab_r = 2;
    int samples = 10000, lab_samples = 20, form_samples = 200;
    std::uint64_t seed = 2026;
    double eps = 0.1;
    bool decompose_flag = false, use_float = false;
    std::optional<int> poly_rank;

    CLI::App* schur_cmd = app.add_subcommand("schur", "Schur polynomial of a partition");
    schur_cmd->add_option("--lambda", lambda_arg, "partition, e.g. 2,1")->required();
    schur_cmd->add_option("--rank", rank, "number of Chern variables")->required();
    add_format(schur_cmd);

    CLI::App* dec_cmd = app.add_subcommand("decompose", "Schur-basis decomposition");
    dec_cmd->add_option("--poly", poly_arg, "polynomial (JSON or expression)")->required();
    dec_cmd->add_option("--rank", poly_rank, "rank override (default: inferred)");
    add_format(dec_cmd);

    CLI::App* twist_cmd = app.add_subcommand("twist", "twisted Schur series in delta");
    twist_cmd->add_option("--lambda", lambda_arg)->required();
    twist_cmd->add_option("--rank", rank)->required();
    add_format(twist_cmd);

    CLI::App* der_cmd = app.add_subcommand("derived", "derived Schur class");
    der_cmd->add_option("--lambda", lambda_arg)->required();
    der_cmd->add_option("--i", derived_i, "delta power")->required();
    der_cmd->add_option("--rank", rank)->required();
    der_cmd->add_flag("--decompose", decompose_flag, "also decompose in the Schur basis");
    add_format(der_cmd);

    CLI::App* int_cmd = app.add_subcommand("intersect", "intersection number");
    int_cmd->add_option("--variety", variety_arg, "catalogue name, e.g. P3")->required();
    int_cmd->add_option("--classes", classes_arg, "comma-separated class expressions")
        ->required();
    add_format(int_cmd);

    CLI::App* thm_cmd = app.add_subcommand("check-theorem-a", "ray positivity of a Schur class");
    thm_cmd->add_option("--variety", variety_arg)->required();
    thm_cmd->add_option("--bundle", bundle_arg, "bundle DSL, e.g. \"O(1)+O(1)\"")->required();
    thm_cmd->add_option("--lambda", lambda_arg)->required();
    add_format(thm_cmd);

    CLI::App* hodge_cmd = app.add_subcommand("hodge-index", "Hodge-index Gram matrix");
    hodge_cmd->add_option("--variety", variety_arg)->required();
    hodge_cmd->add_option("--bundle", bundle_arg)->required();
    hodge_cmd->add_option("--lambda", lambda_arg)->required();
    add_format(hodge_cmd);

    CLI::App* pert_cmd = app.add_subcommand("perturb", "twisted expansion in t");
    pert_cmd->add_option("--variety", variety_arg)->required();
    pert_cmd->add_option("--bundle", bundle_arg)->required();
    pert_cmd->add_option("--lambda", lambda_arg)->required();
    pert_cmd->add_option("--omega", omega_arg, "degree-1 class (default: sum of nef rays)");
    pert_cmd->add_option("--L", l_arg, "degree-1 class (default: sum of nef rays)");
    add_format(pert_cmd);

    CLI::App* form_cmd = app.add_subcommand("form-check", "positivity of (p,p) forms");
    form_cmd->add_option("--file", file_arg, "JSON file with forms")->required();
    form_cmd->add_option("--mode", mode_arg)->check(CLI::IsMember({"semi", "strict"}));
    form_cmd->add_option("--samples", samples, "sample count for middle bidegrees");
    form_cmd->add_option("--seed", seed);
    form_cmd->add_flag("--float", use_float, "floating eigensolver instead of the exact test");
    add_format(form_cmd);

    CLI::App* lab_cmd = app.add_subcommand("cw-lab", "pointwise curvature lab");
    lab_cmd->add_option("--n", lab_n, "base dimension");
    lab_cmd->add_option("--r", lab_r, "fiber rank");
    lab_cmd->add_option("--seed", seed);
    lab_cmd->add_option("--samples", lab_samples, "number of sampled tensors");
    lab_cmd->add_option("--eps", eps, "identity shift in the sampled matrices");
    lab_cmd->add_option("--form-samples", form_samples, "samples per middle-bidegree form");
    lab_cmd->add_option("--tensor-file", tensor_file, "check one tensor from a JSON file");
    lab_cmd->add_option("--write-tensor", write_tensor, "dump the first tensor as JSON");
    add_format(lab_cmd);

    std::vector<const char*> argv;
    argv.push_back("schurkit");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (schur_cmd->parsed())
            return cmd_schur(lambda_arg, rank, common, out);
        if (dec_cmd->parsed())
            return cmd_decompose(poly_arg, poly_rank, common, out);
        if (twist_cmd->parsed())
            return cmd_twist(lambda_arg, rank, common, out);
        if (der_cmd->parsed())
            return cmd_derived(lambda_arg, derived_i, rank, decompose_flag, common, out);
        if (int_cmd->parsed())
            return cmd_intersect(variety_arg, classes_arg, common, out);
        if (thm_cmd->parsed())
            return cmd_check_theorem_a(variety_arg, bundle_arg, lambda_arg, common, out);
        if (hodge_cmd->parsed())
            return cmd_hodge_index(variety_arg, bundle_arg, lambda_arg, common, out);
        if (pert_cmd->parsed())
            return cmd_perturb(variety_arg, bundle_arg, lambda_arg, omega_arg, l_arg, common,
                               out);
        if (form_cmd->parsed())
            return cmd_form_check(file_arg, mode_arg, samples, seed, use_float, common, out);
        if (lab_cmd->parsed())
            return cmd_cw_lab(lab_n, lab_r, seed, lab_samples, eps, form_samples, tensor_file,
                              write_tensor, common, out);
        err << "no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace schurkit
