#include "rarebit/reproduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "rarebit/moc.hpp"
#include "rarebit/sequences.hpp"

namespace rarebit {

namespace {

// smallest integer M with a*M^2 >= b*N, i.e. M >= sqrt(b*N/a)
std::uint64_t sqrt_threshold(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    std::uint64_t m = 0;
    while (static_cast<unsigned __int128>(a) * m * m < static_cast<unsigned __int128>(b) * n) ++m;
    return m;
}

IntPolynomial squares() {
    return IntPolynomial::parse("0,0,1");
}

void check_budget(int theorem, std::uint64_t budget) {
    if (budget > kReproduceHardCap)
        throw std::invalid_argument(
            "budget " + std::to_string(budget) + " exceeds the configured cap " +
            std::to_string(kReproduceHardCap) + "; projected cost ~" +
            std::to_string(reproduce_cost_estimate(theorem, budget)) + " sequence terms");
}

}  // namespace

bool CheckReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

std::uint64_t reproduce_cost_estimate(int theorem, std::uint64_t budget) {
    switch (theorem) {
        case 1:
        case 2:
            return budget;
        case 3:
        case 4:
            return 8 * budget;  // several polynomials, doubling checkpoints
        default:
            throw std::invalid_argument("unknown theorem selector");
    }
}

CheckReport check_theorem1(std::uint64_t budget) {
    check_budget(1, budget);
    if (budget < 21) throw std::invalid_argument("budget below the smallest checkpoint (21)");
    CheckReport report;
    report.title = "M(t(n^2), N) >= sqrt(2N/5)";

    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t n = 21; n <= std::min<std::uint64_t>(1024, budget); ++n)
        checkpoints.push_back(n);
    for (std::uint64_t n = 2048; n <= budget; n *= 2) checkpoints.push_back(n);

    Sequence seq = generate_prefix(GeneratorDescriptor::thue_morse().along(squares()),
                                   checkpoints.back());
    std::vector<MocResult> profile = moc_profile(seq, checkpoints);
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        CheckRow row;
        row.n = checkpoints[i];
        row.measured = profile[i].complexity;
        row.required = sqrt_threshold(5, 2, row.n);  // 5M^2 >= 2N
        row.pass = row.measured >= row.required;
        report.rows.push_back(row);
    }
    return report;
}

CheckReport check_theorem2(std::uint32_t k, std::uint64_t budget) {
    check_budget(2, budget);
    if (k < 2) throw std::invalid_argument("pattern check requires k >= 2");
    std::uint64_t start = 1ull << (2 * k + 2);
    if (budget < start)
        throw std::invalid_argument("budget below the smallest checkpoint 2^(2k+2)");
    CheckReport report;
    report.title = "M(p_" + std::to_string(k) + "(n^2), N) >= sqrt(N/8)";

    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t n = start; n <= budget; ++n) checkpoints.push_back(n);

    Sequence seq = generate_prefix(GeneratorDescriptor::pattern(k).along(squares()),
                                   checkpoints.back());
    std::vector<MocResult> profile = moc_profile(seq, checkpoints);
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        CheckRow row;
        row.n = checkpoints[i];
        row.measured = profile[i].complexity;
        row.required = sqrt_threshold(8, 1, row.n);  // 8M^2 >= N
        row.pass = row.measured >= row.required;
        report.rows.push_back(row);
    }
    return report;
}

CheckReport check_theorem34(const IntPolynomial& p, std::uint32_t k, std::uint64_t budget) {
    check_budget(k == 1 ? 3 : 4, budget);
    if (budget < (1ull << 12)) throw std::invalid_argument("budget below the first checkpoint 2^12");
    CheckReport report;
    report.title = "certified bounds for p_" + std::to_string(k) + " along " +
                   p.to_pretty_string();

    GeneratorDescriptor g = GeneratorDescriptor::pattern(k).along(p);
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t n = 1ull << 12; n <= budget; n *= 2) checkpoints.push_back(n);
    Sequence seq = generate_prefix(g, checkpoints.back());
    std::vector<MocResult> profile = moc_profile(seq, checkpoints);

    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        CheckRow row;
        row.n = checkpoints[i];
        row.measured = profile[i].complexity;
        row.required = 0;
        try {
            BoundCertificate cert = bound_certificate(p, k, row.n);
            row.bound = cert.bound;
            row.pass = cert.bound <= row.measured;
            row.note = "level " + std::to_string(cert.level);
        } catch (const CertificateRefused& e) {
            row.pass = true;  // nothing issued, nothing to hold
            row.note = std::string("refused: ") + e.what();
        }
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace rarebit
