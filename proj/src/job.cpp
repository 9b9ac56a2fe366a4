#include "talex/job.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "talex/errors.hpp"
#include "talex/version.hpp"

namespace talex {

namespace {

const std::map<std::string, ReportKind>& report_names() {
    static const std::map<std::string, ReportKind> names = {
        {"modules", ReportKind::Modules},         {"polynomials", ReportKind::Polynomials},
        {"wada", ReportKind::Wada},               {"divisibility", ReportKind::Divisibility},
        {"splitting", ReportKind::Splitting},     {"torsion", ReportKind::Torsion},
    };
    return names;
}

std::string trim_left(const std::string& s) {
    size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

bool looks_like_inline_grammar(const std::string& source) {
    const std::string lead = trim_left(source);
    return lead.rfind("gens:", 0) == 0 || lead.rfind("#", 0) == 0;
}

// "hopf d=3" / "a_singularity n=2" / "free g=2".
Presentation build_from_invocation(const std::string& source) {
    std::istringstream stream(source);
    std::string name;
    stream >> name;
    std::map<std::string, long> params;
    std::string item;
    while (stream >> item) {
        const size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size()) {
            throw Error("malformed builder parameter '" + item + "' (expected key=value)");
        }
        try {
            params[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error("malformed builder parameter '" + item + "'");
        }
    }

    auto need = [&](const char* key) {
        auto it = params.find(key);
        if (it == params.end()) throw Error("builder '" + name + "' needs parameter " + key);
        if (it->second < 0) throw Error("builder parameter " + std::string(key) + " must be nonnegative");
        return static_cast<size_t>(it->second);
    };
    if (name == "hopf") return hopf_link(need("d"));
    if (name == "a_singularity") return a_singularity_link(need("n"));
    if (name == "free") return free_group(need("g"));
    throw UnknownBuilder("unknown builder '" + name + "'");
}

OrderedJson poly_to_json(const CanonicalPolynomial& p) {
    OrderedJson out;
    OrderedJson coeffs = OrderedJson::array();
    if (!p.is_zero()) {
        const long top = p.value().max_exponent();
        for (long e = 0; e <= top; ++e) coeffs.push_back(p.value().coefficient(e).to_string());
    }
    out["coeffs"] = std::move(coeffs);
    out["human"] = p.to_string();
    return out;
}

OrderedJson module_to_json(const AlexanderModule& m) {
    OrderedJson out;
    out["free_rank"] = m.free_rank;
    OrderedJson torsion = OrderedJson::array();
    for (const auto& t : m.torsion) torsion.push_back(poly_to_json(t));
    out["torsion"] = std::move(torsion);
    out["order"] = poly_to_json(m.order);
    out["is_torsion"] = m.is_torsion();
    return out;
}

// Linking-number-style weights recovered from epsilon: one degree-1
// component of multiplicity epsilon(x_i) per meridian, plus a final
// component soaking up the rest of epsilon(x0). Empty when epsilon
// does not fit that pattern.
std::optional<std::vector<ComponentWeight>> synthesize_weights(const TwistedSetup& setup) {
    const std::vector<long>& eps = setup.epsilon();
    if (eps.empty() || eps[0] < 1) return std::nullopt;
    long spoken_for = 0;
    std::vector<ComponentWeight> weights;
    for (size_t i = 1; i < eps.size(); ++i) {
        if (eps[i] < 1) return std::nullopt;
        weights.push_back(ComponentWeight{1, eps[i]});
        spoken_for += eps[i];
    }
    const long remainder = eps[0] - spoken_for;
    if (remainder < 0) return std::nullopt;
    if (remainder > 0) weights.push_back(ComponentWeight{remainder, 1});
    if (weights.empty()) return std::nullopt;
    return weights;
}

OrderedJson divisibility_to_json(const DivisibilityReport& report) {
    OrderedJson out;
    out["delta_1"] = poly_to_json(report.delta1);
    OrderedJson bound = poly_to_json(report.bound);
    OrderedJson factors;
    factors["gcd"] = poly_to_json(report.gcd_factor);
    factors["base"] = poly_to_json(report.power_base);
    factors["exponent"] = report.power_exponent;
    bound["factors"] = std::move(factors);
    out["bound"] = std::move(bound);
    out["holds"] = report.holds;
    if (report.witness_quotient.has_value()) out["witness_quotient"] = poly_to_json(*report.witness_quotient);
    return out;
}

OrderedJson splitting_to_json(const SplittingReport& report) {
    OrderedJson out;
    out["delta_1"] = poly_to_json(report.delta1);
    out["container"] = poly_to_json(report.container);
    out["contained"] = report.contained;
    out["residue"] = poly_to_json(report.residue);
    return out;
}

OrderedJson torsion_to_json(const TorsionCertificate& cert) {
    OrderedJson out;
    OrderedJson degrees = OrderedJson::array();
    for (const auto& entry : cert.degrees) {
        OrderedJson e;
        e["degree"] = entry.degree;
        e["torsion"] = entry.torsion;
        e["free_rank"] = entry.free_rank;
        e["order"] = poly_to_json(entry.order);
        degrees.push_back(std::move(e));
    }
    out["degrees"] = std::move(degrees);
    out["acyclic"] = cert.acyclic;
    return out;
}

OrderedJson engine_block() {
    OrderedJson engine;
    engine["name"] = kEngineName;
    engine["version"] = kEngineVersion;
    return engine;
}

OrderedJson job_echo(const Job& job) {
    OrderedJson echo;
    echo["field"] = job.field.to_string();
    echo["presentation"] = job.presentation_source;
    echo["rank"] = job.rank;
    echo["epsilon"] = job.epsilon;
    OrderedJson rho = OrderedJson::array();
    for (const auto& matrix : job.rho_text) {
        OrderedJson rows = OrderedJson::array();
        for (const auto& row : matrix) {
            OrderedJson cells = OrderedJson::array();
            for (const auto& cell : row) cells.push_back(cell);
            rows.push_back(std::move(cells));
        }
        rho.push_back(std::move(rows));
    }
    echo["rho"] = std::move(rho);
    OrderedJson reports = OrderedJson::array();
    for (ReportKind kind : job.reports) {
        for (const auto& [name, value] : report_names()) {
            if (value == kind) reports.push_back(name);
        }
    }
    echo["reports"] = std::move(reports);
    return echo;
}

std::vector<ComponentWeight> resolve_weights(const Job& job, const TwistedSetup& setup) {
    if (job.weights_explicit) return job.weights;
    std::optional<std::vector<ComponentWeight>> weights = synthesize_weights(setup);
    if (!weights.has_value()) {
        throw WeightMismatch(
            "epsilon does not fit the linking-number pattern; supply explicit \"weights\"");
    }
    return *weights;
}

}  // namespace

TwistedSetup Job::make_setup() const {
    if (epsilon.size() != presentation.generator_count()) {
        throw InvalidSetup("epsilon has " + std::to_string(epsilon.size()) + " entries for " +
                           std::to_string(presentation.generator_count()) + " generators");
    }
    if (rho_text.size() != presentation.generator_count()) {
        throw InvalidSetup("rho has " + std::to_string(rho_text.size()) + " matrices for " +
                           std::to_string(presentation.generator_count()) + " generators");
    }
    std::vector<FieldMatrix> matrices;
    for (size_t g = 0; g < rho_text.size(); ++g) {
        const auto& rows = rho_text[g];
        if (rows.size() != rank) {
            throw InvalidSetup("rho matrix " + std::to_string(g) + " is not " + std::to_string(rank) +
                               "x" + std::to_string(rank));
        }
        FieldMatrix m(field, rank, rank);
        for (size_t i = 0; i < rank; ++i) {
            if (rows[i].size() != rank) {
                throw InvalidSetup("rho matrix " + std::to_string(g) + " row " + std::to_string(i) +
                                   " has " + std::to_string(rows[i].size()) + " entries");
            }
            for (size_t j = 0; j < rank; ++j) {
                m.set(i, j, FieldElement::parse(field, rows[i][j]));
            }
        }
        matrices.push_back(std::move(m));
    }
    return TwistedSetup(presentation, field, rank, epsilon, std::move(matrices));
}

Job parse_job(const std::string& json_text) {
    OrderedJson doc;
    try {
        doc = OrderedJson::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    if (!doc.is_object()) throw SyntaxError("job file must be a JSON object", 1, 1);

    auto require = [&](const char* key) -> const OrderedJson& {
        if (!doc.contains(key)) throw SyntaxError(std::string("job file missing \"") + key + "\"", 1, 1);
        return doc.at(key);
    };

    Job job;
    if (!require("field").is_string()) throw SyntaxError("\"field\" must be a string", 1, 1);
    job.field = FieldDescriptor::parse(doc.at("field").get<std::string>());

    if (!require("presentation").is_string()) throw SyntaxError("\"presentation\" must be a string", 1, 1);
    job.presentation_source = doc.at("presentation").get<std::string>();
    job.presentation = looks_like_inline_grammar(job.presentation_source)
                           ? parse_presentation(job.presentation_source)
                           : build_from_invocation(job.presentation_source);

    if (!require("rank").is_number_unsigned() || doc.at("rank").get<size_t>() == 0) {
        throw SyntaxError("\"rank\" must be a positive integer", 1, 1);
    }
    job.rank = doc.at("rank").get<size_t>();

    if (!require("epsilon").is_array()) throw SyntaxError("\"epsilon\" must be an array of integers", 1, 1);
    for (const auto& value : doc.at("epsilon")) {
        if (!value.is_number_integer()) throw SyntaxError("\"epsilon\" entries must be integers", 1, 1);
        job.epsilon.push_back(value.get<long>());
    }

    if (!require("rho").is_array()) throw SyntaxError("\"rho\" must be an array of matrices", 1, 1);
    for (const auto& matrix : doc.at("rho")) {
        if (!matrix.is_array()) throw SyntaxError("each \"rho\" entry must be a matrix (array of rows)", 1, 1);
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : matrix) {
            if (!row.is_array()) throw SyntaxError("each \"rho\" row must be an array of strings", 1, 1);
            std::vector<std::string> cells;
            for (const auto& cell : row) {
                if (!cell.is_string()) throw SyntaxError("\"rho\" entries must be field-element strings", 1, 1);
                cells.push_back(cell.get<std::string>());
            }
            rows.push_back(std::move(cells));
        }
        job.rho_text.push_back(std::move(rows));
    }

    if (doc.contains("reports")) {
        if (!doc.at("reports").is_array()) throw SyntaxError("\"reports\" must be an array", 1, 1);
        for (const auto& name : doc.at("reports")) {
            if (!name.is_string()) throw SyntaxError("\"reports\" entries must be strings", 1, 1);
            auto it = report_names().find(name.get<std::string>());
            if (it == report_names().end()) {
                throw Error("unknown report '" + name.get<std::string>() + "'");
            }
            job.reports.push_back(it->second);
        }
    }

    if (doc.contains("weights")) {
        if (!doc.at("weights").is_array()) throw SyntaxError("\"weights\" must be an array", 1, 1);
        for (const auto& w : doc.at("weights")) {
            if (!w.is_object() || !w.contains("degree") || !w.contains("multiplicity")) {
                throw SyntaxError("each weight needs \"degree\" and \"multiplicity\"", 1, 1);
            }
            job.weights.push_back(ComponentWeight{w.at("degree").get<long>(), w.at("multiplicity").get<long>()});
        }
        job.weights_explicit = true;
    }
    return job;
}

OrderedJson run_job(const Job& job) {
    const TwistedSetup setup = job.make_setup();

    OrderedJson out;
    out["engine"] = engine_block();
    out["job"] = job_echo(job);

    OrderedJson setup_block;
    setup_block["generators"] = setup.presentation().generator_names;
    OrderedJson relators = OrderedJson::array();
    for (const Word& r : setup.presentation().relators) {
        relators.push_back(r.to_string(setup.presentation().generator_names));
    }
    setup_block["relators"] = std::move(relators);
    setup_block["epsilon_surjective"] = setup.epsilon_surjective();
    out["setup"] = std::move(setup_block);

    OrderedJson modules;
    modules["h0"] = module_to_json(alexander_module(setup, 0));
    modules["h1"] = module_to_json(alexander_module(setup, 1));
    modules["h2"] = module_to_json(alexander_module(setup, 2));
    out["modules"] = std::move(modules);

    auto requested = [&](ReportKind kind) {
        for (ReportKind k : job.reports) {
            if (k == kind) return true;
        }
        return false;
    };

    if (requested(ReportKind::Polynomials)) {
        OrderedJson polys;
        polys["delta_0"] = poly_to_json(alexander_polynomial(setup, 0));
        polys["delta_1"] = poly_to_json(alexander_polynomial(setup, 1));
        polys["delta_2"] = poly_to_json(alexander_polynomial(setup, 2));
        OrderedJson cohomological;
        cohomological["degree_1"] = poly_to_json(cohomological_polynomial(setup, 1));
        cohomological["degree_2"] = poly_to_json(cohomological_polynomial(setup, 2));
        cohomological["degree_3"] = poly_to_json(cohomological_polynomial(setup, 3));
        polys["cohomological"] = std::move(cohomological);
        out["polynomials"] = std::move(polys);
    }

    if (requested(ReportKind::Wada)) {
        const WadaQuotient wada = wada_quotient(setup);
        OrderedJson block;
        block["delta_1"] = poly_to_json(wada.delta1);
        block["delta_0"] = poly_to_json(wada.delta0);
        block["divisible"] = wada.divisible;
        if (wada.quotient.has_value()) block["quotient"] = poly_to_json(*wada.quotient);
        out["wada"] = std::move(block);
    }

    if (requested(ReportKind::Divisibility)) {
        out["divisibility"] = divisibility_to_json(check_divisibility(setup, resolve_weights(job, setup)));
    }

    if (requested(ReportKind::Splitting)) {
        const long exponent = setup.epsilon()[0];
        out["splitting"] = splitting_to_json(check_splitting(setup, exponent));
    }

    if (requested(ReportKind::Torsion)) {
        out["torsion"] = torsion_to_json(torsion_certificate(setup));
    }
    return out;
}

std::string render_json(const OrderedJson& doc) {
    return doc.dump(2) + "\n";
}

namespace {

std::string poly_human(const OrderedJson& poly) {
    return poly.at("human").get<std::string>();
}

void render_module_text(std::ostringstream& out, const std::string& label, const OrderedJson& m) {
    out << "  " << label << ": free rank " << m.at("free_rank").get<size_t>() << ", order "
        << poly_human(m.at("order")) << (m.at("is_torsion").get<bool>() ? " (torsion)" : "") << "\n";
}

}  // namespace

std::string render_text(const OrderedJson& doc) {
    std::ostringstream out;
    out << doc.at("engine").at("name").get<std::string>() << " "
        << doc.at("engine").at("version").get<std::string>() << "\n";
    const auto& job = doc.at("job");
    out << "presentation: " << job.at("presentation").get<std::string>() << "\n";
    out << "field: " << job.at("field").get<std::string>() << ", rank " << job.at("rank").get<size_t>()
        << "\n";
    if (doc.contains("modules")) {
        out << "modules:\n";
        render_module_text(out, "H0", doc.at("modules").at("h0"));
        render_module_text(out, "H1", doc.at("modules").at("h1"));
        render_module_text(out, "H2", doc.at("modules").at("h2"));
    }
    if (doc.contains("polynomials")) {
        const auto& polys = doc.at("polynomials");
        out << "polynomials:\n";
        out << "  delta_0: " << poly_human(polys.at("delta_0")) << "\n";
        out << "  delta_1: " << poly_human(polys.at("delta_1")) << "\n";
        out << "  delta_2: " << poly_human(polys.at("delta_2")) << "\n";
    }
    if (doc.contains("wada")) {
        const auto& wada = doc.at("wada");
        out << "wada quotient: ";
        if (wada.contains("quotient")) {
            out << poly_human(wada.at("quotient")) << "\n";
        } else {
            out << "delta_0 does not divide delta_1\n";
        }
    }
    if (doc.contains("divisibility")) {
        const auto& div = doc.at("divisibility");
        out << "divisibility bound: " << poly_human(div.at("bound"))
            << (div.at("holds").get<bool>() ? " (holds)" : " (VIOLATED)") << "\n";
    }
    if (doc.contains("splitting")) {
        const auto& split = doc.at("splitting");
        out << "splitting container: " << poly_human(split.at("container"))
            << (split.at("contained").get<bool>() ? " (roots contained)" : " (NOT contained)") << "\n";
    }
    if (doc.contains("torsion")) {
        const auto& torsion = doc.at("torsion");
        out << "torsion certificate: "
            << (torsion.at("acyclic").get<bool>() ? "acyclic (all degrees torsion)" : "not acyclic") << "\n";
        for (const auto& entry : torsion.at("degrees")) {
            out << "  degree " << entry.at("degree").get<int>() << ": "
                << (entry.at("torsion").get<bool>() ? "torsion" : "free rank " +
                        std::to_string(entry.at("free_rank").get<size_t>()))
                << ", order " << poly_human(entry.at("order")) << "\n";
        }
    }
    if (doc.contains("checks")) {
        out << "checks: " << (doc.at("all_passed").get<bool>() ? "all passed" : "FAILURES") << "\n";
        for (const auto& [name, check] : doc.at("checks").items()) {
            out << "  " << name << ": " << (check.at("passed").get<bool>() ? "pass" : "FAIL") << "\n";
        }
    }
    return out.str();
}

OrderedJson scaffold_job(const std::string& builder, const std::map<std::string, long>& params) {
    auto param = [&](const char* key, long minimum) {
        auto it = params.find(key);
        if (it == params.end()) throw Error("builder '" + builder + "' needs parameter " + key);
        if (it->second < minimum) {
            throw Error("builder parameter " + std::string(key) + " must be at least " + std::to_string(minimum));
        }
        return static_cast<size_t>(it->second);
    };

    std::string source;
    std::vector<long> epsilon;
    std::vector<std::string> reports;
    size_t generators = 0;
    if (builder == "hopf") {
        const size_t d = param("d", 2);
        source = "hopf d=" + std::to_string(d);
        generators = d;
        epsilon.assign(d, 1);
        epsilon[0] = static_cast<long>(d);
        reports = {"modules", "polynomials", "wada", "divisibility", "splitting", "torsion"};
    } else if (builder == "a_singularity") {
        const size_t n = param("n", 1);
        source = "a_singularity n=" + std::to_string(n);
        generators = 2 * n + 1;
        epsilon.assign(2 * n, 1);
        epsilon.push_back(2);  // beta = a1 a0
        reports = {"modules", "polynomials", "wada", "torsion"};
    } else if (builder == "free") {
        const size_t g = param("g", 1);
        source = "free g=" + std::to_string(g);
        generators = g;
        epsilon.assign(g, 1);
        reports = {"modules", "polynomials", "torsion"};
    } else {
        throw UnknownBuilder("unknown builder '" + builder + "'");
    }

    OrderedJson job;
    job["field"] = "Q";
    job["presentation"] = source;
    job["rank"] = 1;
    job["epsilon"] = epsilon;
    OrderedJson rho = OrderedJson::array();
    for (size_t i = 0; i < generators; ++i) {
        rho.push_back(OrderedJson::array({OrderedJson::array({"1"})}));
    }
    job["rho"] = std::move(rho);
    job["reports"] = reports;
    return job;
}

VerifyOutcome verify_job(const Job& job) {
    const TwistedSetup setup = job.make_setup();

    OrderedJson out;
    out["engine"] = engine_block();
    out["job"] = job_echo(job);
    OrderedJson checks;
    bool all_passed = true;

    const TorsionCertificate cert = torsion_certificate(setup);
    {
        OrderedJson block = torsion_to_json(cert);
        block["passed"] = cert.acyclic;
        checks["torsion"] = std::move(block);
        all_passed = all_passed && cert.acyclic;
    }

    if (is_hopf_presentation(setup.presentation())) {
        const std::vector<ComponentWeight> weights = resolve_weights(job, setup);
        const DivisibilityReport divisibility = check_divisibility(setup, weights);
        {
            OrderedJson block = divisibility_to_json(divisibility);
            block["passed"] = divisibility.holds;
            checks["divisibility"] = std::move(block);
            all_passed = all_passed && divisibility.holds;
        }
        const SplittingReport splitting = check_splitting(setup, setup.epsilon()[0]);
        {
            OrderedJson block = splitting_to_json(splitting);
            block["passed"] = splitting.contained;
            checks["splitting"] = std::move(block);
            all_passed = all_passed && splitting.contained;
        }
    }

    out["checks"] = std::move(checks);
    out["all_passed"] = all_passed;
    return VerifyOutcome{std::move(out), all_passed};
}

}  // namespace talex
