#include <doctest.h>

#include "phg/cli.hpp"

#include <sstream>

using namespace phg;

namespace {
std::pair<int, std::string> run(const std::vector<std::string>& args) {
    std::ostringstream out;
    int code = dispatch(args, out);
    return {code, out.str()};
}
} // namespace

TEST_CASE("eval routes by disk") {
    auto [code_inf, out_inf] = run({"eval", "--p", "5", "--prec", "6", "--a", "-5", "--b", "5/2",
                                    "--c", "8/3", "--z", "1/5", "--records"});
    CHECK(code_inf == kOk);
    CHECK(out_inf.find("disk=infinity") != std::string::npos);
    CHECK(out_inf.find("basis1=") != std::string::npos);

    auto [code_one, out_one] = run({"eval", "--p", "5", "--prec", "6", "--a", "-5", "--b", "5/2",
                                    "--c", "8/3", "--z", "6/1", "--records"});
    CHECK(code_one == kOk);
    CHECK(out_one.find("disk=1") != std::string::npos);
    CHECK(out_one.find("addend2=") != std::string::npos);

    auto [code_zero, out_zero] = run({"eval", "--p", "5", "--prec", "6", "--a", "-5", "--b",
                                      "5/2", "--c", "8/3", "--z", "5", "--records"});
    CHECK(code_zero == kOk);
    CHECK(out_zero.find("disk=0") != std::string::npos);
}

TEST_CASE("records carry provenance and echo hypothesis flags") {
    auto [code, out] = run({"eval", "--p", "5", "--prec", "6", "--a", "-5", "--b", "5/2", "--c",
                            "8/3", "--z", "5", "--records"});
    CHECK(code == kOk);
    CHECK(out.rfind("eval p=5 prec=6 branch=0 ", 0) == 0);
    CHECK(out.find("flags=alpha_in_pZ:1") != std::string::npos);
    CHECK(out.find("beta_nonzero:1") != std::string::npos);
}

TEST_CASE("unsupported residue disks exit with code 3") {
    auto [code, out] = run({"eval", "--p", "5", "--prec", "6", "--a", "-5", "--b", "5/2", "--c",
                            "8/3", "--z", "1/3"});
    CHECK(code == kUnsupportedDisk);
    CHECK(out.find("unsupported disk") != std::string::npos);
}

TEST_CASE("hypothesis violations exit with code 2 and name the flag") {
    auto [code, out] = run({"eval", "--p", "5", "--prec", "6", "--a", "1/5", "--b", "1", "--c",
                            "2", "--z", "5"});
    CHECK(code == kHypothesisViolation);
    CHECK(out.find("alpha_in_Zp") != std::string::npos);
}

TEST_CASE("precision exhaustion exits with code 4") {
    setenv("PADIC_HG_MAX_PN", "100", 1);
    auto [code, out] = run({"gamma", "--p", "5", "--prec", "6", "--x", "7"});
    unsetenv("PADIC_HG_MAX_PN");
    CHECK(code == kPrecisionExhausted);
    CHECK(out.find("precision exhausted") != std::string::npos);
}

TEST_CASE("verify subcommand exits zero on clean checks") {
    auto [code, out] = run({"verify", "--check", "oi", "--wmax", "4", "--order", "8"});
    CHECK(code == kOk);
    CHECK(out.find("status=ok") != std::string::npos);

    auto [code2, out2] = run({"verify", "--check", "mpl-ode", "--wmax", "4", "--order", "8"});
    CHECK(code2 == kOk);
    (void)out2;
}

TEST_CASE("gamma and gauss-rhs subcommands") {
    auto [code, out] = run({"gamma", "--p", "5", "--prec", "6", "--x", "6", "--records"});
    CHECK(code == kOk);
    CHECK(out == "gamma p=5 prec=6 branch=0 x=6 value=4 + 4*5 + O(5^6)\n");

    auto [code2, out2] = run({"gauss-rhs", "--p", "5", "--prec", "6", "--a", "-5", "--b", "5/2",
                              "--c", "8/3", "--records"});
    CHECK(code2 == kOk);
    CHECK(out2.find("product=") != std::string::npos);
    CHECK(out2.find("reciprocal=") != std::string::npos);
}

TEST_CASE("radius emits the documented CSV columns") {
    auto [code, out] = run({"radius", "--p", "5", "--prec", "6", "--a", "1", "--b", "1", "--c",
                            "8/3", "--nmax", "6"});
    CHECK(code == kOk);
    CHECK(out.find("n,ord term,l_n,L_n,m_n,partial S\n") != std::string::npos);
    CHECK(out.find("1,0,4,14,1,1\n") != std::string::npos);
}

TEST_CASE("fit-constants runs the terminating audit") {
    auto [code, out] = run({"fit-constants", "--p", "5", "--prec", "6", "--a", "-5", "--b", "5/2",
                            "--c", "8/3", "--records"});
    CHECK(code == kOk);
    CHECK(out.find("c1=") != std::string::npos);
    CHECK(out.find("c2=O(5^") != std::string::npos);
}

TEST_CASE("identical inputs give byte-identical output") {
    std::vector<std::string> args{"eval", "--p", "5", "--prec", "6", "--a", "-5", "--b", "5/2",
                                  "--c", "8/3", "--z", "6", "--records"};
    auto [c1, o1] = run(args);
    auto [c2, o2] = run(args);
    CHECK(c1 == c2);
    CHECK(o1 == o2);

    std::vector<std::string> args2{"verify", "--check", "euler", "--wmax", "3", "--order", "6"};
    auto [c3, o3] = run(args2);
    auto [c4, o4] = run(args2);
    CHECK(c3 == c4);
    CHECK(o3 == o4);
}

TEST_CASE("usage errors exit with code 1") {
    auto [code, out] = run({"eval", "--p", "5"});
    CHECK(code == kUsage);
    (void)out;
    auto [code2, out2] = run({"verify", "--check", "nonsense"});
    CHECK(code2 == kUsage);
    (void)out2;
}
