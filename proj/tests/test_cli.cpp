// Drives the installed CLI binary end to end: determinism, exit codes, and the
// witness -> verify round trip. Invoked as: test_cli <path-to-sumfree-binary>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& cmd) {
    RunResult res;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

int failures = 0;

void expect(bool cond, const std::string& what) {
    if (!cond) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <sumfree binary>\n";
        return 2;
    }
    std::string bin = argv[1];

    // byte-identical reruns
    for (std::string sub : {" table1 --d-max 31", " table2 --n-max 16", " kset --n 12",
                            " c2 --n 12 --format table", " witness --n 8 --k 5",
                            " status --n 13 --k 5 --budget 200"}) {
        auto a = run(bin + sub);
        auto b = run(bin + sub);
        expect(a.exit_code == 0, "exit 0 for" + sub);
        expect(!a.output.empty(), "output for" + sub);
        expect(a.output == b.output, "identical rerun for" + sub);
    }

    // thread count does not change the bytes
    auto t1 = run(bin + " witness --n 11 --k 4 --method random --budget 4000 --threads 1");
    auto t4 = run(bin + " witness --n 11 --k 4 --method random --budget 4000 --threads 4");
    expect(t1.output == t4.output, "witness output independent of --threads");

    // witness file round trip through verify
    std::string cert_path = "cli_test_cert.json";
    auto w = run(bin + " witness --n 6 --k 3 --output " + cert_path);
    expect(w.exit_code == 0, "witness --n 6 --k 3");
    auto v = run(bin + " verify " + cert_path);
    expect(v.exit_code == 0, "verify accepts an emitted certificate");
    expect(v.output.find("verified") != std::string::npos, "verify prints verified");
    std::remove(cert_path.c_str());

    // sum-free outcome and exit codes
    auto sf = run(bin + " witness --n 5 --k 3 --method exhaustive");
    expect(sf.exit_code == 0, "exhaustive sum-free run exits 0");
    expect(sf.output.find("sum-free") != std::string::npos, "exhaustive none reports sum-free");

    auto bad = run(bin + " witness --n 7 --k 2 --method subfield");
    expect(bad.exit_code == 2, "invalid construction exits 2");
    auto badflag = run(bin + " witness --n 7");
    expect(badflag.exit_code == 2, "missing required flag exits 2");
    auto badverify = run(bin + " verify does_not_exist.json");
    expect(badverify.exit_code == 2, "missing certificate file exits 2");

    // status on the APN side
    auto st = run(bin + " status --n 7 --k 2");
    expect(st.exit_code == 0, "status exits 0");
    expect(st.output.find("SUM_FREE") != std::string::npos, "status (7,2) is SUM_FREE");

    if (failures == 0) {
        std::cout << "cli: all checks passed\n";
        return 0;
    }
    std::cerr << "cli: " << failures << " checks failed\n";
    return 1;
}
