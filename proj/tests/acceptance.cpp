/* Acceptance suite: every criterion checks exact equalities (field
 * arithmetic, no tolerances) and prints one pass/fail line. */

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ainf/commands.hpp"
#include "ainf/corpus.hpp"
#include "ainf/twisting.hpp"

using namespace ainf;

namespace {

int failures = 0;

void line(int criterion, const std::string& what, bool ok, const std::string& detail = "")
{
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!ok && !detail.empty())
        std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok)
        ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::shared_ptr<HomologyData> homology_of(const ChainComplex& c)
{
    int lo = c.basis->min_degree(), hi = c.basis->max_degree();
    if (c.complete_range)
        hi = std::min(hi, c.complete_range->second - 1);
    return std::make_shared<HomologyData>(compute_homology(c, lo, hi));
}

TransferResult transfer_of(const Model& m, int dcap,
                           BoundingChoice choice = BoundingChoice::canonical)
{
    auto h = homology_of(m.algebra->complex);
    int acap = m.arity_cap ? *m.arity_cap : derive_arity_cap(*h->hbasis(), dcap).value();
    return transfer_algebra(m.algebra, h, dcap, std::min(acap, dcap), choice);
}

std::string run_cli(const std::string& args)
{
    std::string cmd = std::string(AINF_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return "<popen failed>";
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), n);
    int rc = pclose(p);
    out += "\n<exit " + std::to_string(WEXITSTATUS(rc)) + ">\n";
    return out;
}

/* criterion 1 + 2 */
void stasheff_certification()
{
    Timer t;
    bool ok = true;
    std::string detail;
    for (const Model& m : corpus::all()) {
        if (!m.algebra)
            continue;
        TransferResult tr = transfer_of(m, 8);
        DefectReport rep = verify_transfer(tr);
        if (!rep.empty()) {
            ok = false;
            detail = m.name + ": " + rep.defects.front().check;
        }
    }
    bool fast = t.seconds() < 60.0;
    line(1, "Stasheff and morphism defects vanish on the corpus through degree cap 8",
         ok && fast, ok ? "runtime over 60 s" : detail);

    /* anchors: X1 = 0 and X2 are inside verify_transfer; zero-differential
     * inputs additionally force X_i = 0 (i>=3) and f_i = 0 (i>=2) */
    bool anchors = true;
    for (const Model& m : {corpus::torus(), corpus::s3_cohomology(), corpus::s2_cohomology(),
                           corpus::hopf()}) {
        TransferResult tr = transfer_of(m, 8);
        for (int i = 3; i <= tr.arity_cap; ++i)
            if (tr.HX->op(i))
                anchors = false;
        for (int i = 2; i <= tr.arity_cap; ++i)
            if (tr.f.comp(i))
                anchors = false;
        if (!verify_transfer(tr).empty())
            anchors = false;
    }
    line(2, "transfer anchors: X1 = 0, signed X2, rigidity of zero-differential inputs",
         anchors);
}

void massey_cross_validation()
{
    Timer t;
    Model m = corpus::heisenberg();
    TransferResult tr = transfer_of(m, 8);
    const GradedBasis& hb = *tr.HX->basis;
    Scalar one = Scalar::one(tr.HX->field);
    Element a = Element::generator(hb, hb.require("[e1]"), one);
    Element b = Element::generator(hb, hb.require("[e2]"), one);
    Element value = massey_via_X3(tr, a, b, b);
    MasseyCoset coset = massey_oracle(*tr.C, *tr.h, a, b, b);
    bool ok = !value.is_zero() && coset.contains(value, tr.HX->field) && t.seconds() < 5.0;
    line(3, "Massey product <[e1],[e2],[e2]> via X3 is nonzero and lies in the oracle coset",
         ok);
}

void bar_comparison()
{
    Timer t;
    bool ok = true;
    std::string detail;
    for (const Model& m : corpus::all()) {
        if (!m.algebra)
            continue;
        CmdOptions opt;
        opt.degree_cap = 8;
        opt.strict = true;
        Report r = run_command("tilde-b", m, opt);
        if (!(r.body["betti_equal"] == true) || r.defect_count > 0) {
            ok = false;
            detail = m.name;
        }
    }
    bool fast = t.seconds() < 120.0;
    line(4, "bar construction of (H,{X_i}) and of C have equal Betti tables through degree 8",
         ok && fast, ok ? "runtime over 120 s" : detail);
}

void loop_space()
{
    Model m = corpus::s3_cohomology();
    CmdOptions opt;
    opt.degree_cap = 8;
    Report r = run_command("loop-space", m, opt);
    ReportJson want;
    for (int e = 0; e <= 8; ++e)
        want[std::to_string(e)] = (e % 2 == 0) ? 1 : 0;

    /* independent oracle: brute-force homology of the truncated bar complex,
     * built directly from words over the single degree-3 letter */
    auto h = homology_of(m.algebra->complex);
    TransferResult tr = transfer_of(m, 10);
    auto bar = tilde_b(reduced_subalgebra(*tr.HX), 10, 8);
    HomologyData bh = compute_homology(bar->complex(), -8, 0);
    bool oracle_ok = true;
    for (int e = 0; e <= 8; ++e)
        if (bh.betti(-e) != (e % 2 == 0 ? 1 : 0))
            oracle_ok = false;

    bool ok = r.body["bar_of_homology_betti"] == want &&
              r.body["bar_of_algebra_betti"] == want && r.defect_count == 0 && oracle_ok;
    line(5, "loop-space mode on the 3-sphere model: Betti 1 in degrees 0,2,4,6,8", ok);
}

void hopf_brown()
{
    Model m = corpus::hopf();
    TransferResult tr = transfer_of(m, 8);
    TwistingCochain tc{m.coalgebra, tr.target, *m.cochain};
    bool phi_ok = twisting_defect(tc).empty();
    auto P = dgmodule_to_ainf(*m.module, tr.target);
    TwistedTensorProduct ttp = twisted_tensor(m.coalgebra, P, tc, 8);
    bool sq = check_twisted_square(ttp).empty();
    HomologyData h = compute_homology(ttp.complex, 0, 3);
    bool betti = h.betti(0) == 1 && h.betti(1) == 0 && h.betti(2) == 0 && h.betti(3) == 1;
    line(6, "Hopf model: phi is a twisting cochain and K x_phi P has the homology of S^3",
         phi_ok && sq && betti);
}

void twist_transfer_acyclicity()
{
    Timer t;
    Model m = corpus::cp2_cobar();
    CmdOptions opt;
    opt.degree_cap = 6;
    Report r = run_command("fiber", m, opt);
    bool equal = r.body["betti_equal"] == true;
    bool acyclic = true;
    for (int e = 1; e <= 6; ++e)
        if (r.body["twisted_with_homology_betti"][std::to_string(e)] != 0)
            acyclic = false;

    /* condition (a) and the degreewise identity f* phi* = phi^inf are part
     * of the embedded certificate; re-run them directly as well */
    TransferResult tr = transfer_of(m, 6);
    TwistingCochain tc{m.coalgebra, tr.target, *m.cochain};
    TwistTransferResult res = transfer_twisting(tc, tr);
    bool conds = res.certificate.empty();
    bool fast = t.seconds() < 120.0;
    line(7,
         "CP^2 loop model: twisting conditions (a),(c) exact and K x_phi* H acyclic through "
         "degree 6",
         equal && acyclic && conds && r.defect_count == 0 && fast);
}

void uniqueness()
{
    Model m = corpus::heisenberg();
    auto h = homology_of(m.algebra->complex);
    TransferResult t1 =
        transfer_algebra(m.algebra, h, m.degree_cap, *m.arity_cap, BoundingChoice::shifted);
    TransferResult t2 =
        transfer_algebra(m.algebra, h, m.degree_cap, *m.arity_cap, BoundingChoice::canonical);
    bool differ = !(t1.f.comp(2) && t2.f.comp(2) && *t1.f.comp(2) == *t2.f.comp(2));
    AInfMorphism g = uniqueness_iso(t1, t2);
    bool id1 = g.comp(1) && *g.comp(1) == MultiMap::identity(g.source->basis, Field::Q());
    bool defects = check_morphism(g).empty();
    line(8, "two legal bounding choices are connected by an isomorphism with identity first "
            "component",
         differ && id1 && defects);
}

void determinism()
{
    std::vector<std::pair<std::string, std::string>> runs = {
        {"transfer", "heisenberg.json --degree-cap 8"},
        {"transfer", "cp2_cobar.json --degree-cap 8"},
        {"module-transfer", "hopf.json --degree-cap 8"},
        {"module-transfer", "cp2_cobar.json --degree-cap 6"},
        {"tilde-b", "heisenberg.json --degree-cap 8"},
        {"tilde-b", "cp2_cobar.json --degree-cap 8"},
        {"classifying-space", "hopf.json --degree-cap 8"},
        {"loop-space", "s3.json --degree-cap 8"},
        {"loop-space", "s2.json --degree-cap 8"},
        {"massey", "heisenberg.json --degree-cap 8 --triple [e1] [e2] [e2]"},
        {"massey", "torus.json --degree-cap 8 --triple [a1] [a1] [a1]"},
        {"twist-transfer", "hopf.json --degree-cap 8"},
        {"twist-transfer", "cp2_cobar.json --degree-cap 6"},
        {"fiber", "hopf.json --degree-cap 8"},
        {"fiber", "cp2_cobar.json --degree-cap 6"},
        {"echo-model", "heisenberg.json"},
    };
    bool identical = true, golden_ok = true, exit_ok = true;
    std::string detail;
    bool write_golden = std::getenv("AINF_WRITE_GOLDEN") != nullptr;
    std::filesystem::path golden_dir = AINF_GOLDEN_DIR;
    for (const auto& [cmd, rest] : runs) {
        std::string args =
            cmd + " " + std::string(AINF_MODELS_DIR) + "/" + rest +
            (cmd == "echo-model" ? "" : " --output json");
        std::string a = run_cli(args);
        std::string b = run_cli(args);
        if (a != b) {
            identical = false;
            detail = cmd;
        }
        if (a.find("<exit 0>") == std::string::npos) {
            exit_ok = false;
            detail = cmd + " exited nonzero";
        }
        std::string model = rest.substr(0, rest.find(".json"));
        std::filesystem::path golden = golden_dir / (cmd + "__" + model + ".txt");
        if (write_golden) {
            std::filesystem::create_directories(golden_dir);
            std::ofstream(golden) << a;
        } else if (std::filesystem::exists(golden)) {
            std::stringstream ss;
            ss << std::ifstream(golden).rdbuf();
            if (ss.str() != a) {
                golden_ok = false;
                detail = cmd + " drifted from golden";
            }
        } else {
            golden_ok = false;
            detail = "missing golden " + golden.string();
        }
    }
    line(9, "corpus commands are byte-deterministic and match the golden snapshots",
         identical && golden_ok && exit_ok, detail);
}

}  // namespace

int main()
{
    try {
        stasheff_certification();
        massey_cross_validation();
        bar_comparison();
        loop_space();
        hopf_brown();
        twist_transfer_acyclicity();
        uniqueness();
        determinism();
    } catch (const std::exception& e) {
        std::cout << "FAIL: unexpected exception: " << e.what() << "\n";
        ++failures;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " failure(s)")
              << "\n";
    return failures == 0 ? 0 : 1;
}
