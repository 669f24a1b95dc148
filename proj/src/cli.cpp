#include "qhilb/cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhilb/dynkin.hpp"
#include "qhilb/errors.hpp"
#include "qhilb/formulas.hpp"
#include "qhilb/oracle.hpp"
#include "qhilb/presentation.hpp"

namespace qhilb {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string quiver_path;
    std::string algebra = "preproj";
    std::string presentation = "z";
    std::optional<std::size_t> degree;
    std::string field = "q";
    std::string fields = "q";
    std::string v;
    std::string format = "text";
    std::string force_p;
};

json big_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(big_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_coefficients(std::ostream& out, const std::string& format, std::size_t r,
                        const std::vector<IntMatrix>& coeffs, const std::string& title) {
    if (format == "json") {
        json j;
        j["r"] = r;
        j["truncation"] = coeffs.size() - 1;
        j["coefficients"] = json::array();
        for (const auto& m : coeffs) j["coefficients"].push_back(matrix_to_json(m));
        out << j.dump() << "\n";
        return;
    }
    out << "# " << title << "\n";
    for (std::size_t n = 0; n < coeffs.size(); ++n) out << "deg " << n << ": " << coeffs[n] << "\n";
}

std::optional<IntMatrix> parse_forced_p(const std::string& spec, std::size_t r) {
    if (spec.empty()) return std::nullopt;
    if (spec == "identity") return IntMatrix::identity(r);
    std::vector<std::size_t> perm;
    std::istringstream in(spec);
    for (std::string item; std::getline(in, item, ',');) {
        std::size_t pos = 0;
        std::size_t k = 0;
        try {
            k = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || k < 1 || k > r) throw InputError("bad --force-p entry '" + item + "'");
        perm.push_back(k - 1);
    }
    if (perm.size() != r) throw InputError("--force-p needs " + std::to_string(r) + " entries");
    auto m = IntMatrix::permutation(perm);
    std::vector<std::size_t> check;
    if (!m.as_permutation(check)) throw InputError("--force-p is not a permutation");
    return m;
}

std::optional<WeightVector> weights(const RunConfig& cfg, const Field& field) {
    if (cfg.v.empty()) return std::nullopt;
    return WeightVector::parse(cfg.v, field);
}

std::size_t truncation(const RunConfig& cfg, const Quiver& q) {
    return cfg.degree ? *cfg.degree : default_truncation(q);
}

MatrixPowerSeries closed_form(const RunConfig& cfg, const Quiver& q, const Field& field,
                              std::size_t order) {
    const auto kind = parse_algebra_kind(cfg.algebra);
    const auto forced = parse_forced_p(cfg.force_p, q.vertex_count());
    if (forced && kind != AlgebraKind::Preprojective)
        throw InputError("--force-p applies to --algebra preproj only");
    switch (kind) {
        case AlgebraKind::PathAlgebra: return path_algebra_series(q, order);
        case AlgebraKind::Preprojective:
            if (forced) {
                if (!classify(q).is_dynkin()) throw NotDynkin("--force-p needs a Dynkin quiver");
                return dynkin_preprojective_series(q.adjacency(), *forced, root_data(q).coxeter_number,
                                                   order);
            }
            return preprojective_series(q, order);
        case AlgebraKind::DerivedPreprojective: return derived_preprojective_series(q, order);
        case AlgebraKind::Qha: return qha_series(q, weights(cfg, field), order);
        case AlgebraKind::DerivedQha: return derived_qha_series(q, order);
    }
    throw InputError("unknown algebra");
}

GradedPresentation oracle_presentation(const RunConfig& cfg, const Quiver& q, const Field& field) {
    const auto kind = parse_algebra_kind(cfg.algebra);
    if (kind == AlgebraKind::Preprojective)
        return build_presentation(PresentationKind::PreprojectivePerVertex, q, field);
    if (kind == AlgebraKind::Qha) {
        if (cfg.presentation != "z" && cfg.presentation != "eta")
            throw InputError("--presentation must be z or eta");
        const auto pk = cfg.presentation == "z" ? PresentationKind::QhaZ : PresentationKind::QhaEta;
        return build_presentation(pk, q, field, weights(cfg, field));
    }
    throw InputError("no oracle presentation for --algebra " + cfg.algebra + " (use preproj or qha)");
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const auto q = Quiver::load(cfg.quiver_path);
    const auto cls = classify(q);
    if (cfg.format == "json") {
        json j;
        j["class"] = cls.verdict == Verdict::Dynkin ? "Dynkin"
                     : cls.verdict == Verdict::ExtendedDynkin ? "ExtendedDynkin"
                                                              : "Wild";
        if (cls.type) {
            j["type"] = cls.type->name();
            json relabel = json::array();
            for (auto p : cls.relabeling) relabel.push_back(p + 1);
            j["relabeling"] = relabel;
        }
        out << j.dump() << "\n";
    } else {
        out << cls.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_roots(const RunConfig& cfg, std::ostream& out) {
    const auto q = Quiver::load(cfg.quiver_path);
    const auto cls = classify(q);
    const auto rd = root_data(q);
    const auto nak = nakayama_matrix(q);
    if (cfg.format == "json") {
        json j;
        j["type"] = cls.type->name();
        j["coxeter_number"] = rd.coxeter_number;
        j["positive_roots"] = rd.positive_roots;
        json nu = json::array();
        for (auto p : nak.permutation) nu.push_back(p + 1);
        j["nakayama_permutation"] = nu;
        j["nakayama_matrix"] = matrix_to_json(nak.matrix);
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << cls.to_string() << "\n";
    out << "coxeter number h = " << rd.coxeter_number << "\n";
    out << rd.positive_roots.size() << " positive roots:\n";
    for (const auto& d : rd.positive_roots) {
        out << "  (";
        for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
        out << ")\n";
    }
    out << "nakayama permutation:";
    for (std::size_t i = 0; i < nak.permutation.size(); ++i)
        out << " " << i + 1 << "->" << nak.permutation[i] + 1;
    out << "\nP = " << nak.matrix << "\n";
    return kExitOk;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
    const auto q = Quiver::load(cfg.quiver_path);
    const auto field = Field::parse(cfg.field);
    const auto order = truncation(cfg, q);
    const auto s = closed_form(cfg, q, field, order);
    print_coefficients(out, cfg.format, q.vertex_count(), s.coefficients(),
                       cfg.algebra + " closed form, truncation " + std::to_string(order));
    return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    const auto q = Quiver::load(cfg.quiver_path);
    const auto field = Field::parse(cfg.field);
    const auto order = truncation(cfg, q);
    const auto pres = oracle_presentation(cfg, q, field);
    OracleOptions opts;
    opts.monomial_cap = monomial_cap_from_env();
    const auto dims = graded_quotient_dims(pres, order, opts);
    print_coefficients(out, cfg.format, q.vertex_count(), dims,
                       cfg.algebra + " oracle over " + field.name() + ", degrees 0.." +
                           std::to_string(order));
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto q = Quiver::load(cfg.quiver_path);
    const auto order = truncation(cfg, q);
    const auto kind = parse_algebra_kind(cfg.algebra);
    if (kind != AlgebraKind::Preprojective && kind != AlgebraKind::Qha)
        throw InputError("verify supports --algebra preproj or qha");

    std::vector<Field> fields;
    std::istringstream in(cfg.fields);
    for (std::string item; std::getline(in, item, ',');) fields.push_back(Field::parse(item));
    if (fields.empty()) throw InputError("--fields is empty");

    OracleOptions opts;
    opts.monomial_cap = monomial_cap_from_env();
    bool all_match = true;
    json report = json::array();
    std::ostringstream text;
    for (const auto& field : fields) {
        const auto formula = closed_form(cfg, q, field, order);
        const auto dims = graded_quotient_dims(oracle_presentation(cfg, q, field), order, opts);
        json entry;
        entry["field"] = field.spec();
        entry["match"] = true;
        for (std::size_t n = 0; n <= order && entry["match"] == true; ++n)
            for (std::size_t i = 0; i < q.vertex_count() && entry["match"] == true; ++i)
                for (std::size_t j = 0; j < q.vertex_count(); ++j) {
                    if (dims[n](i, j) == formula[n](i, j)) continue;
                    entry["match"] = false;
                    entry["first_mismatch"] = {{"degree", n},
                                               {"block", {i + 1, j + 1}},
                                               {"oracle", big_to_json(dims[n](i, j))},
                                               {"formula", big_to_json(formula[n](i, j))}};
                    text << field.name() << ": mismatch at degree " << n << ", block (" << i + 1 << ","
                         << j + 1 << "): oracle " << dims[n](i, j) << ", formula " << formula[n](i, j)
                         << "\n";
                    break;
                }
        if (entry["match"] == true) text << field.name() << ": degrees 0.." << order << " match\n";
        all_match = all_match && entry["match"] == true;
        report.push_back(std::move(entry));
    }
    if (cfg.format == "json") {
        out << json{{"match", all_match}, {"truncation", order}, {"fields", report}}.dump() << "\n";
    } else {
        out << text.str();
        out << (all_match ? "all coefficients match" : "MISMATCH: oracle and closed form disagree") << "\n";
    }
    return all_match ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Truncated Hilbert series of preprojective and quiver Heisenberg algebras", "qhilb"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--quiver", cfg.quiver_path, "quiver file")->required();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_series_opts = [&](CLI::App* sub) {
        sub->add_option("--algebra", cfg.algebra, "path|preproj|dpreproj|qha|dqha");
        sub->add_option("--degree", cfg.degree, "truncation degree N");
        sub->add_option("--v", cfg.v, "weight vector, comma separated");
    };

    auto* classify_cmd = app.add_subcommand("classify", "Dynkin / extended Dynkin / wild verdict");
    add_common(classify_cmd);
    auto* roots_cmd = app.add_subcommand("roots", "positive roots, Coxeter number, Nakayama permutation");
    add_common(roots_cmd);
    auto* series_cmd = app.add_subcommand("series", "closed-form Hilbert series");
    add_common(series_cmd);
    add_series_opts(series_cmd);
    series_cmd->add_option("--field", cfg.field, "q or fp:<p> (field of v)");
    series_cmd->add_option("--force-p", cfg.force_p, "override the Nakayama permutation (test hook)");
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force graded quotient dimensions");
    add_common(oracle_cmd);
    add_series_opts(oracle_cmd);
    oracle_cmd->add_option("--field", cfg.field, "q or fp:<p>");
    oracle_cmd->add_option("--presentation", cfg.presentation, "z or eta (qha only)");
    auto* verify_cmd = app.add_subcommand("verify", "compare oracle against closed form");
    add_common(verify_cmd);
    add_series_opts(verify_cmd);
    verify_cmd->add_option("--fields", cfg.fields, "comma separated list of q / fp:<p>");
    verify_cmd->add_option("--force-p", cfg.force_p, "override the Nakayama permutation (test hook)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(cfg, out);
        if (roots_cmd->parsed()) return cmd_roots(cfg, out);
        if (series_cmd->parsed()) return cmd_series(cfg, out);
        if (oracle_cmd->parsed()) return cmd_oracle(cfg, out);
        if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    } catch (const DegreeOverflow& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace qhilb
