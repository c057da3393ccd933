#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "bchlab/harness.hpp"

using nlohmann::ordered_json;
using namespace bchlab;

namespace {

int cmd_field(std::uint64_t q, unsigned m, bool printModulus) {
    PrimePower pp = PrimePower::from_q(q);
    auto field = ExtensionField::build(pp, m);
    ordered_json j;
    j["p"] = pp.p;
    j["e"] = pp.e;
    j["D"] = field->degree();
    j["alphaOrder"] = field->alpha_order();
    if (printModulus) {
        // constant term last
        std::vector<int> coeffs;
        for (auto it = field->modulus().rbegin(); it != field->modulus().rend(); ++it) coeffs.push_back(*it);
        j["modulus"] = coeffs;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_cosets(std::uint64_t N, std::uint64_t q, bool oddOnly, bool csv) {
    LeaderTable t = leader_table(N, q);
    if (csv) {
        std::cout << "# N=" << N << ",q=" << q << ",version=1\nleader,size\n";
        for (std::size_t i = 0; i < t.leaders.size(); ++i) {
            if (oddOnly && t.leaders[i] % 2 == 0) continue;
            std::cout << t.leaders[i] << "," << t.sizes[i] << "\n";
        }
        return 0;
    }
    ordered_json j;
    j["modulus"] = N;
    j["q"] = q;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < t.leaders.size(); ++i) {
        if (oddOnly && t.leaders[i] % 2 == 0) continue;
        rows.push_back({{"leader", t.leaders[i]}, {"size", t.sizes[i]}});
    }
    j["leaders"] = rows;
    std::cout << j.dump(2) << "\n";
    return 0;
}

LinearCodeModel build_model(const std::string& family, std::uint64_t q, unsigned m, std::uint64_t delta,
                            std::int64_t b) {
    auto field = ExtensionField::build(PrimePower::from_q(q), m);
    const std::uint64_t n = (field->size() - 1) / 2;
    CodeSpec spec{n, family == "cyc" ? 1 : -1, delta, b};
    return generator_polynomial(spec, field);
}

int cmd_code(const std::string& family, std::uint64_t q, unsigned m, std::uint64_t delta, std::int64_t b,
             bool printGen) {
    LinearCodeModel model = build_model(family, q, m, delta, b);
    ordered_json j;
    j["n"] = model.n;
    j["k"] = model.k;
    j["definingSetSize"] = model.definingSet.size();
    j["bchBound"] = bch_bound(model.definingSet);
    if (printGen) {
        std::vector<int> g(model.generator.coeffs().begin(), model.generator.coeffs().end());
        j["generator"] = g;  // ascending
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_weights(const std::string& family, std::uint64_t q, unsigned m, std::uint64_t delta, std::int64_t b,
                std::uint64_t budgetWords, bool viaDual, bool extended) {
    Budget budget;
    budget.enumeration = budgetWords;
    LinearCodeModel model = build_model(family, q, m, delta, b);
    WeightEnumerator W;
    std::string certificate = "exact";
    if (viaDual) {
        W = macwilliams_transform(weight_enumerator_exhaustive(dual_code(model), budget));
    } else {
        W = weight_enumerator_exhaustive(model, budget, extended ? Extend::Yes : Extend::No);
    }
    ordered_json j;
    ordered_json weights = ordered_json::object();
    for (const auto& [w, c] : W.counts) weights[std::to_string(w)] = c.str();
    j["weights"] = weights;
    j["d"] = W.min_positive_weight();
    j["certificate"] = certificate;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_dualcheck(std::uint64_t q, unsigned m, std::uint64_t delta) {
    const std::uint64_t n = to_u64((ipow(Int(q), m) - 1) / 2);
    DefiningSet T = defining_set_raw(q, n, 1, delta, 2);
    DuallyBchResult r = is_dually_bch(T, n);
    ordered_json j;
    j["duallyBCH"] = r.duallyBch;
    if (r.duallyBch) j["witness"] = {{"b", r.b}, {"deltaPrime", r.deltaPrime}};
    j["condition"] = formulas::dually_bch_condition(q, m, Int(delta));
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_formula(const std::string& id, bool list, std::uint64_t q, unsigned m, std::uint64_t a,
                std::uint64_t b, std::uint64_t delta, unsigned i, std::uint64_t deltaA, std::uint64_t kParam) {
    if (list) {
        ordered_json j = ordered_json::array();
        for (const char* name : {"lemma7", "lemma8", "lemma10", "lemma11", "lemma13", "lemma14", "lemma15",
                                 "lemma16", "lemma18", "lemma20", "lemma26", "thm17", "thm19", "thm21",
                                 "thm23", "thm24", "thm33", "thm34"})
            j.push_back(name);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    ordered_json j;
    j["id"] = id;
    try {
        Int value;
        if (id == "lemma7") value = formulas::dim_lemma7(q, m, Int(delta)).k;
        else if (id == "lemma8") value = formulas::dim_lemma8(q, m, a);
        else if (id == "lemma10") value = formulas::dim_lemma10(q, m, a);
        else if (id == "lemma11") value = formulas::dim_lemma11(q, m, a, b);
        else if (id == "lemma13") value = formulas::dim_lemma13(q, m, a, b);
        else if (id == "lemma14") value = formulas::dim_lemma14(q, m, b);
        else if (id == "lemma15" || id == "lemma16" || id == "lemma18" || id == "lemma20")
            value = formulas::delta_prime_family(q, m, i).value;
        else if (id == "lemma26")
            value = i <= 1 ? formulas::delta_family(q, m).first.value : formulas::delta_family(q, m).second.value;
        else if (id == "thm17" || id == "thm19" || id == "thm21")
            value = formulas::dim_from_leader_index(q, m, i);
        else if (id == "thm23") value = formulas::theorem23_dim(q, m, delta, b);
        else if (id == "thm24") {
            const std::uint64_t n = to_u64((ipow(Int(q), m) - 1) / 2);
            auto bounds = formulas::theorem24_bounds(q, n, kParam, deltaA);
            value = bounds.delta;
            j["dLower"] = bounds.dLower.str();
            j["dUpper"] = bounds.dUpper.str();
        }
        else if (id == "thm33" || id == "thm34")
            value = formulas::dually_bch_condition(q, m, Int(delta)) ? 1 : 0;
        else {
            std::cerr << "unknown formula id: " << id << "\n";
            return 2;
        }
        j["value"] = value.str();
        j["preconditionsOk"] = true;
    } catch (const Error& e) {
        j["value"] = nullptr;
        j["preconditionsOk"] = false;
        j["error"] = e.what();
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const std::vector<std::uint64_t>& qSet, unsigned mMax,
               std::uint64_t budgetWords, const std::string& format, const std::string& outPath) {
    harness::SuiteConfig cfg;
    if (!qSet.empty()) cfg.qSet = qSet;
    cfg.mMax = mMax;
    cfg.budget.enumeration = budgetWords;
    harness::VerificationReport report = harness::run_suite(suite, cfg);
    harness::ReportFormat fmt = format == "csv"    ? harness::ReportFormat::Csv
                                 : format == "text" ? harness::ReportFormat::Text
                                                    : harness::ReportFormat::Json;
    std::string body = harness::emit_report(report, fmt);
    if (outPath.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(outPath, std::ios::trunc);
        out << body;
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BCH codes of length (q^m-1)/2: construction, analysis, verification"};
    app.require_subcommand(1);

    std::uint64_t q = 3, N = 0, delta = 2, a = 1, b = 0, budgetWords = std::uint64_t(1) << 24;
    unsigned m = 2, idx = 1;
    std::int64_t bSigned = 0;
    bool printModulus = false, oddOnly = false, csv = false, printGen = false, viaDual = false;
    bool extended = false, list = false;
    std::string family = "neg", formulaId, suite = "paperExamples", format = "json", outPath;
    std::vector<std::uint64_t> qSet;

    auto* cField = app.add_subcommand("field", "print GF(q^m) parameters as JSON");
    cField->add_option("--q", q)->required();
    cField->add_option("--m", m)->required();
    cField->add_flag("--print-modulus", printModulus);

    auto* cCosets = app.add_subcommand("cosets", "q-cyclotomic coset leaders modulo N");
    cCosets->add_option("--modulus", N)->required();
    cCosets->add_option("--q", q)->required();
    cCosets->add_flag("--odd-only", oddOnly);
    bool wantJson = false;
    cCosets->add_flag("--json", wantJson);
    cCosets->add_flag("--csv", csv);

    auto* cCode = app.add_subcommand("code", "construct C_(n,lambda,delta,b)");
    cCode->add_option("--family", family)->check(CLI::IsMember({"neg", "cyc"}));
    cCode->add_option("--q", q)->required();
    cCode->add_option("--m", m)->required();
    cCode->add_option("--delta", delta)->required();
    cCode->add_option("--b", bSigned);
    cCode->add_flag("--print-gen", printGen);

    auto* cWeights = app.add_subcommand("weights", "exact weight enumerator");
    cWeights->add_option("--family", family)->check(CLI::IsMember({"neg", "cyc"}));
    cWeights->add_option("--q", q)->required();
    cWeights->add_option("--m", m)->required();
    cWeights->add_option("--delta", delta)->required();
    cWeights->add_option("--b", bSigned);
    cWeights->add_option("--budget", budgetWords);
    cWeights->add_flag("--via-dual", viaDual);
    cWeights->add_flag("--extended", extended);

    auto* cDual = app.add_subcommand("dualcheck", "dually-BCH decision for C_(n,1,delta,2)");
    cDual->add_option("--q", q)->required();
    cDual->add_option("--m", m)->required();
    cDual->add_option("--delta", delta)->required();

    auto* cFormula = app.add_subcommand("formula", "evaluate a closed form");
    cFormula->add_option("--id", formulaId);
    cFormula->add_flag("--list", list);
    cFormula->add_option("--q", q);
    cFormula->add_option("--m", m);
    cFormula->add_option("--a", a);
    cFormula->add_option("--b", b);
    cFormula->add_option("--delta", delta);
    cFormula->add_option("--i", idx);
    std::uint64_t deltaA = 1, kParam = 1;
    cFormula->add_option("--delta-a", deltaA);
    cFormula->add_option("--k", kParam);

    auto* cVerify = app.add_subcommand("verify", "run a verification suite");
    cVerify->add_option("--suite", suite)->required();
    cVerify->add_option("--q-set", qSet)->delimiter(',');
    unsigned mMax = 0;
    cVerify->add_option("--m-max", mMax);
    cVerify->add_option("--budget", budgetWords);
    cVerify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    cVerify->add_option("--out", outPath);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cField->parsed()) return cmd_field(q, m, printModulus);
        if (cCosets->parsed()) return cmd_cosets(N, q, oddOnly, csv);
        if (cCode->parsed()) return cmd_code(family, q, m, delta, bSigned, printGen);
        if (cWeights->parsed()) return cmd_weights(family, q, m, delta, bSigned, budgetWords, viaDual, extended);
        if (cDual->parsed()) return cmd_dualcheck(q, m, delta);
        if (cFormula->parsed()) return cmd_formula(formulaId, list, q, m, a, b, delta, idx, deltaA, kParam);
        if (cVerify->parsed()) return cmd_verify(suite, qSet, mMax, budgetWords, format, outPath);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.kind() == ErrorKind::UnknownSuite ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
