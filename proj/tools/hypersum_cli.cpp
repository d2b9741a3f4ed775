// hypersum: evaluate, factor and tabulate iterated power sums.

#include "hypersum/coefficients.hpp"
#include "hypersum/document.hpp"
#include "hypersum/hypersums.hpp"
#include "hypersum/oracles.hpp"
#include "hypersum/power_sums.hpp"
#include "hypersum/selfcheck.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace hypersum;

constexpr int kOk = 0;
constexpr int kDisagree = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int level = 0;
    long k = 1;
    long n = 1;
    std::string method = "theorem3";
    std::string format = "text";
    long p_max = 10;
    int level_max = 6;
    long k_max = 10;
    long n_max = 15;
    std::optional<long> corrupt;
};

std::unique_ptr<CoeffProvider> make_provider(const Options& o) {
    if (o.corrupt) return std::make_unique<CorruptedCoeffs>(*o.corrupt, Rat(1));
    return std::make_unique<CoeffProvider>();
}

Rat eval_method(const std::string& method, const Options& o, const CoeffProvider& coeffs) {
    const Rat n(o.n);
    if (method == "brute") {
        if (o.n < 0) throw UsageError("brute needs N >= 0");
        return Rat(oracle::hypersum_brute(o.level, o.k, o.n));
    }
    if (method == "stirling") return oracle::hypersum_stirling(o.level, o.k, o.n);
    if (method == "faulhaber") {
        if (o.level != 0) throw UsageError("faulhaber needs L = 0");
        if (o.k < 1) throw UsageError("faulhaber needs k >= 1");
        return faulhaber_eval(o.k, n, coeffs);
    }
    if (method == "theorem1") {
        if (o.level != 0) throw UsageError("theorem1 needs L = 0");
        return theorem1_eval(o.k, n, coeffs);
    }
    if (method == "theorem2") return theorem2_eval(o.level, o.k, n, coeffs);
    if (method == "theorem3") return o.k == 0 ? hypersum_k0(o.level, n) : theorem3_eval(o.level, o.k, n);
    throw UsageError("unknown method " + method);
}

int cmd_eval(const Options& o) {
    if (o.level < 0 || o.k < 0) throw UsageError("need L >= 0 and k >= 0");
    const auto coeffs = make_provider(o);
    if (o.method != "all") {
        std::cout << eval_method(o.method, o, *coeffs).get_str() << "\n";
        return kOk;
    }
    std::vector<std::string> methods = {"stirling", "theorem2", "theorem3"};
    if (o.n >= 0) methods.insert(methods.begin(), "brute");
    if (o.level == 0) {
        if (o.k >= 1) methods.push_back("faulhaber");
        methods.push_back("theorem1");
    }
    std::map<std::string, Rat> values;
    for (const auto& m : methods) values[m] = eval_method(m, o, *coeffs);
    const Rat& ref = values[methods.front()];
    bool agree = true;
    for (const auto& m : methods) agree = agree && values[m] == ref;
    if (agree) {
        std::cout << ref.get_str() << "\n";
        std::cout << "agreement OK (" << methods.size() << " methods)\n";
        return kOk;
    }
    for (const auto& m : methods) std::cout << m << ": " << values[m].get_str() << "\n";
    std::cout << "DISAGREEMENT\n";
    return kDisagree;
}

int cmd_factor(const Options& o) {
    if (o.level < 0 || o.k < 1) throw UsageError("factor needs L >= 0 and k >= 1");
    const auto f = theorem3_factored(o.level, o.k);
    if (o.format == "json") std::cout << to_document(f).dump(2) << "\n";
    else if (o.format == "latex") std::cout << render_latex(f) << "\n";
    else std::cout << render_text(f) << "\n";
    if (f.degenerate_core) std::cerr << "warning: core degree below n-1\n";
    return kOk;
}

int cmd_coeffs(const Options& o) {
    if (o.p_max < 0) throw UsageError("coeffs needs p-max >= 0");
    if (o.level < 0) throw UsageError("coeffs needs L >= 0");
    const auto coeffs = make_provider(o);
    const auto table = c_hyper_table(o.level, o.p_max, *coeffs);
    if (o.format == "json") {
        Json rows = Json::array();
        for (long p = 0; p <= o.p_max; ++p)
            rows.push_back({{"p", p},
                            {"num", table.at(p).get_num().get_str()},
                            {"den", table.at(p).get_den().get_str()}});
        std::cout << rows.dump(2) << "\n";
        return kOk;
    }
    if (o.level == 0) std::cout << "# numerators: OEIS A036280, denominators: OEIS A036281\n";
    std::cout << "# p num den\n";
    for (long p = 0; p <= o.p_max; ++p)
        std::cout << p << " " << table.at(p).get_num().get_str() << " " << table.at(p).get_den().get_str() << "\n";
    return kOk;
}

int cmd_selfcheck(const Options& o) {
    SelfCheckBounds b;
    b.p_max = o.p_max;
    b.level_max = o.level_max;
    b.k_max = o.k_max;
    b.n_max = o.n_max;
    if (b.p_max < 1 || b.level_max < 1 || b.k_max < 1 || b.n_max < 1) throw UsageError("selfcheck bounds must be >= 1");
    const auto coeffs = make_provider(o);
    const auto reports = run_selfcheck(b, *coeffs);
    std::cout << format_reports(reports);
    return all_pass(reports) ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact iterated power sums"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--corrupt-c", o.corrupt, "")->group("");
    };

    auto* eval = app.add_subcommand("eval", "Evaluate S^(L)_k(N)");
    eval->add_option("--L", o.level, "hyper level")->required();
    eval->add_option("--k", o.k, "power")->required();
    eval->add_option("--N", o.n, "upper limit")->required();
    eval->add_option("--method", o.method)
        ->check(CLI::IsMember({"brute", "stirling", "faulhaber", "theorem1", "theorem2", "theorem3", "all"}));
    add_common(eval);

    auto* factor = app.add_subcommand("factor", "Factored form in y = N(N+L+1)");
    factor->add_option("--L", o.level, "hyper level")->required();
    factor->add_option("--k", o.k, "power")->required();
    factor->add_option("--format", o.format)->check(CLI::IsMember({"text", "latex", "json"}));

    auto* coeffs = app.add_subcommand("coeffs", "Coefficients of (x/sinh x)^(L+1)");
    coeffs->add_option("--L", o.level, "hyper level");
    coeffs->add_option("--p-max", o.p_max, "last index")->required();
    coeffs->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    add_common(coeffs);

    auto* selfcheck = app.add_subcommand("selfcheck", "Run the invariant suites");
    selfcheck->add_option("--p-max", o.p_max);
    selfcheck->add_option("--L-max", o.level_max);
    selfcheck->add_option("--k-max", o.k_max);
    selfcheck->add_option("--N-max", o.n_max);
    add_common(selfcheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(o);
        if (factor->parsed()) return cmd_factor(o);
        if (coeffs->parsed()) return cmd_coeffs(o);
        if (selfcheck->parsed()) return cmd_selfcheck(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDisagree;
    }
    return kUsage;
}
