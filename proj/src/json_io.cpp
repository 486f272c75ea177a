#include "sumfree/json_io.hpp"

#include <sstream>

namespace sumfree {

json factorization_to_json(const XnFactorization& fz) {
    json j;
    j["n"] = fz.n;
    j["t"] = fz.t;
    j["e"] = fz.e;
    json factors = json::array();
    for (auto& f : fz.factors) {
        factors.push_back({{"poly", f.poly.to_hex()},
                           {"d", f.d},
                           {"mult", f.mult},
                           {"zero_trace", f.zero_trace}});
    }
    j["factors"] = std::move(factors);
    return j;
}

json subspace_to_json(const FieldCtx& F, const Subspace& s) {
    json j;
    j["n"] = F.degree();
    j["modulus"] = F.modulus().to_hex();
    json basis = json::array();
    for (FieldElem v : s.basis) basis.push_back(elem_to_hex(v));
    j["basis"] = std::move(basis);
    return j;
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["n"] = c.n;
    j["modulus"] = c.modulus.to_hex();
    j["k"] = c.k;
    json basis = json::array();
    for (FieldElem v : c.basis) basis.push_back(elem_to_hex(v));
    j["basis"] = std::move(basis);
    j["method"] = c.method;
    j["method_params"] = c.method_params;
    j["verified"] = c.verified;
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.n = j.at("n").get<unsigned>();
    c.modulus = BinPoly::from_hex(j.at("modulus").get<std::string>());
    c.k = j.at("k").get<unsigned>();
    for (auto& v : j.at("basis")) c.basis.push_back(elem_from_hex(v.get<std::string>()));
    c.method = j.value("method", std::string("unknown"));
    if (j.contains("method_params")) c.method_params = j.at("method_params");
    c.verified = j.value("verified", false);
    return c;
}

json table1_to_json(const std::vector<CyclotomicRow>& rows) {
    json arr = json::array();
    for (auto& r : rows) {
        arr.push_back({{"d", r.d}, {"o", r.o}, {"cnt", r.cnt}, {"Nd", r.Nd}});
    }
    return arr;
}

json kn_report_to_json(const KnReport& r) {
    json j;
    j["n"] = r.n;
    j["kset"] = std::vector<unsigned>(r.kset.begin(), r.kset.end());
    json reals = json::array();
    for (auto& real : r.realizations) {
        json mu_nu = json::array();
        for (auto& [d, mu, nu] : real.mu_nu) {
            mu_nu.push_back({{"d", d}, {"mu", mu}, {"nu", nu}});
        }
        reals.push_back({{"k", real.k},
                         {"mu_nu", std::move(mu_nu)},
                         {"factor", real.factor.to_hex()},
                         {"shaped", real.shaped.to_hex()}});
    }
    j["realizations"] = std::move(reals);
    return j;
}

json c2_to_json(unsigned n, const std::vector<C2Triple>& triples) {
    json j;
    j["n"] = n;
    json arr = json::array();
    std::set<unsigned> kset;
    for (auto& t : triples) {
        json entry;
        entry["eps"] = t.eps;
        entry["shape"] = t.shape;
        entry["divisors"] = t.divisors;
        entry["k"] = t.k;
        arr.push_back(std::move(entry));
        kset.insert(t.k);
    }
    j["triples"] = std::move(arr);
    j["kset"] = std::vector<unsigned>(kset.begin(), kset.end());
    return j;
}

json cc3_to_json(unsigned n, const std::vector<Cc3Entry>& entries) {
    json j;
    j["n"] = n;
    json arr = json::array();
    std::set<unsigned> kset;
    for (auto& e : entries) {
        arr.push_back({{"s", e.s}, {"R", e.R.to_hex()}, {"k", e.k}});
        kset.insert(e.k);
    }
    j["entries"] = std::move(arr);
    j["kset"] = std::vector<unsigned>(kset.begin(), kset.end());
    return j;
}

json status_to_json(const StatusVerdict& sv) {
    json j;
    j["n"] = sv.n;
    j["k"] = sv.k;
    j["verdict"] = verdict_name(sv.verdict);
    j["reason"] = sv.reason;
    j["criteria_fired"] = sv.criteria_fired;
    if (sv.certificate) j["certificate"] = certificate_to_json(*sv.certificate);
    if (sv.dual_certificate) j["dual_certificate"] = certificate_to_json(*sv.dual_certificate);
    return j;
}

std::string table1_to_text(const std::vector<CyclotomicRow>& rows) {
    std::ostringstream os;
    os << " d | o_d(2) | phi(d)/o_d(2) | N_d\n";
    os << "---+--------+---------------+----\n";
    for (auto& r : rows) {
        os.width(2);
        os << r.d << " | ";
        os.width(6);
        os << r.o << " | ";
        os.width(13);
        os << r.cnt << " | ";
        os.width(3);
        os << r.Nd << "\n";
    }
    return os.str();
}

std::string table2_to_text(const std::vector<KnReport>& reports) {
    std::ostringstream os;
    os << " n | K_n\n";
    os << "---+----\n";
    for (auto& r : reports) {
        os.width(2);
        os << r.n << " | ";
        bool first = true;
        for (unsigned k : r.kset) {
            if (!first) os << ",";
            os << k;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::string c2_to_text(unsigned n, const std::vector<C2Triple>& triples) {
    std::ostringstream os;
    os << "n=" << n << "\n";
    for (auto& t : triples) {
        // render eps with the first prime's exponent as the row index
        os << "eps=[";
        unsigned rows = t.shape.empty() ? 1 : t.shape[0];
        unsigned cols = 1;
        for (size_t i = 1; i < t.shape.size(); ++i) cols *= t.shape[i];
        for (unsigned r = 0; r < rows; ++r) {
            if (r) os << "/";
            for (unsigned c = 0; c < cols; ++c) os << int(t.eps[r * cols + c]);
        }
        os << "] D={";
        for (size_t i = 0; i < t.divisors.size(); ++i) {
            if (i) os << ",";
            os << t.divisors[i];
        }
        os << "} k=" << t.k << "\n";
    }
    return os.str();
}

} // namespace sumfree
