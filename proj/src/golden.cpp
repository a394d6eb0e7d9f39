#include "stdform/golden.hpp"

#include <algorithm>
#include <array>
#include <thread>
#include <utility>

namespace stdform {

BigInt isqrt(const BigInt& x) {
    if (x < 0) throw DomainError("isqrt of negative value " + x.get_str());
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

int sign(const GoldenNumber& x) {
    if (x.q == 0) return mpz_sgn(x.p.get_mpz_t());
    if (x.q < 0) return -sign(-x);
    // q > 0: x > 0 iff q * sqrt(5) > -(2p + q). With L on the right, a
    // negative L settles it; otherwise compare squares (5 q^2 is never a
    // perfect square for q != 0, so strict comparison is safe).
    const BigInt L = -(2 * x.p + x.q);
    if (L < 0) return 1;
    const BigInt lhs = 5 * x.q * x.q;
    const BigInt rhs = L * L;
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

std::string to_string(const GoldenNumber& x) {
    if (x.q == 0) return x.p.get_str();
    std::string s;
    if (x.p != 0)
        s = x.p.get_str() + (x.q > 0 ? " + " : " - ");
    else if (x.q < 0)
        s = "-";
    const BigInt aq = abs(x.q);
    s += aq == 1 ? "Phi" : aq.get_str() + "*Phi";
    return s;
}

BigInt gn_floor(const GoldenNumber& x) {
    if (x.q == 0) return x.p;
    if (x.q < 0) {
        // q * Phi is irrational, so floor(q*Phi) = -floor(-q*Phi) - 1.
        return x.p - gn_floor(GoldenNumber(0, -x.q)) - 1;
    }
    // q * Phi = (q + sqrt(5 q^2)) / 2; replacing the root by its integer
    // floor and halving with floor division gives floor(q * Phi).
    BigInt t = x.q + isqrt(5 * x.q * x.q);
    BigInt r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), t.get_mpz_t(), 1);
    return x.p + r;
}

GoldenNumber gn_frac(const GoldenNumber& x) { return x - GoldenNumber(gn_floor(x), 0); }

BigInt beatty_a(const BigInt& n) {
    if (n < 1) throw DomainError("beatty_a is defined for n >= 1, got " + n.get_str());
    return gn_floor(GoldenNumber(0, n));
}

namespace {

// beatty_a extended by a(0) = 0, for internal recursions whose arguments
// can reach zero.
BigInt a0(const BigInt& n) { return gn_floor(GoldenNumber(0, n)); }

}  // namespace

BigInt g_seq(const BigInt& k) {
    if (k < 0) throw DomainError("g_seq is defined for k >= 0, got " + k.get_str());
    // floor(k / Phi) = floor(k * (Phi - 1)) = a(k) - k.
    const BigInt m = gn_floor(GoldenNumber(-k, k));
    return a0(m);
}

int increment_g(const BigInt& n) {
    if (n < 1) throw DomainError("increment_g is defined for n >= 1, got " + n.get_str());
    const BigInt d = g_seq(n) - g_seq(n - 1);
    return static_cast<int>(d.get_si());
}

BigInt e_seq(const BigInt& n) {
    if (n < 0) throw DomainError("e_seq is defined for n >= 0, got " + n.get_str());
    return gn_floor(GoldenNumber(-(n + 1), n + 1));
}

namespace {

constexpr int kDoubleFloor = 0;
constexpr int kFracThreshold = 1;
constexpr int kRecursionPlus = 2;
constexpr int kFracAffine = 3;
constexpr int kShiftByN = 4;
constexpr int kRecursionMinus = 5;
constexpr int kCheckCount = 6;

struct Accum {
    long long first = -1;
    long long count = 0;
    std::string note;

    void fail(long long n, const std::string& detail) {
        ++count;
        if (first < 0) {
            first = n;
            note = detail;
        }
    }
};

std::string eq_note(const BigInt& lhs, const BigInt& rhs) {
    return "lhs " + lhs.get_str() + ", rhs " + rhs.get_str();
}

void run_range(long long lo, long long hi, Accum* acc) {
    const GoldenNumber one(1, 0);
    const GoldenNumber phi_minus_one(-1, 1);
    const GoldenNumber one_minus_phi(1, -1);
    for (long long n = lo; n <= hi; ++n) {
        const BigInt bn(static_cast<long>(n));
        const BigInt an = a0(bn);
        const BigInt m = an - bn;  // floor(n / Phi)
        const BigInt lhs1 = a0(m);
        const BigInt k = an - 1;
        const BigInt rhs1 = gn_floor(GoldenNumber(-k, k));  // floor(k / Phi)
        if (lhs1 != rhs1) acc[kDoubleFloor].fail(n, eq_note(lhs1, rhs1));

        const BigInt aan = a0(an);
        const GoldenNumber u(-aan, an);  // frac(a(n) * Phi)
        const GoldenNumber v(-an, bn);   // frac(n * Phi)
        const bool below_threshold = u < phi_minus_one;
        const bool below_frac = u < v;
        if (below_threshold != below_frac)
            acc[kFracThreshold].fail(n, std::string("lhs ") +
                                            (below_threshold ? "true" : "false") + ", rhs " +
                                            (below_frac ? "true" : "false"));

        const BigInt ak = a0(k);
        const BigInt plus_rhs = ak - an + 1;
        if (lhs1 != plus_rhs) acc[kRecursionPlus].fail(n, eq_note(lhs1, plus_rhs));
        const BigInt minus_rhs = ak - an - 1;
        if (lhs1 != minus_rhs) acc[kRecursionMinus].fail(n, eq_note(lhs1, minus_rhs));

        const GoldenNumber affine = one_minus_phi * v + one;
        if (u != affine)
            acc[kFracAffine].fail(n, "lhs " + to_string(u) + ", rhs " + to_string(affine));

        const BigInt rhs5 = an + bn - 1;
        if (aan != rhs5) acc[kShiftByN].fail(n, eq_note(aan, rhs5));
    }
}

IdentityCheck make_check(std::string name, const Accum& acc) {
    IdentityCheck c;
    c.name = std::move(name);
    c.holds = acc.count == 0;
    c.first_counterexample = acc.first;
    c.counterexamples = acc.count;
    c.note = acc.note;
    return c;
}

}  // namespace

VerifyReport verify_identities(long long n_max, int jobs) {
    if (n_max < 1) throw DomainError("verify_identities needs n_max >= 1");
    if (jobs < 1) jobs = 1;
    jobs = static_cast<int>(std::min<long long>(jobs, n_max));

    std::vector<std::array<Accum, kCheckCount>> partial(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        run_range(1, n_max, partial[0].data());
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (n_max + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            const long long lo = 1 + static_cast<long long>(t) * chunk;
            const long long hi = std::min(n_max, lo + chunk - 1);
            if (lo > hi) break;
            pool.emplace_back(run_range, lo, hi, partial[static_cast<std::size_t>(t)].data());
        }
        for (auto& th : pool) th.join();
    }

    std::array<Accum, kCheckCount> merged;
    for (const auto& part : partial)
        for (int i = 0; i < kCheckCount; ++i) {
            // Threads own contiguous ascending ranges, so the first partial
            // accumulator with a counterexample holds the global minimum.
            if (merged[static_cast<std::size_t>(i)].first < 0 &&
                part[static_cast<std::size_t>(i)].first >= 0) {
                merged[static_cast<std::size_t>(i)].first = part[static_cast<std::size_t>(i)].first;
                merged[static_cast<std::size_t>(i)].note = part[static_cast<std::size_t>(i)].note;
            }
            merged[static_cast<std::size_t>(i)].count += part[static_cast<std::size_t>(i)].count;
        }

    VerifyReport report;
    report.n_max = n_max;
    report.checks.push_back(make_check(
        "floor(Phi*floor(n/Phi)) == floor((floor(n*Phi) - 1)/Phi)", merged[kDoubleFloor]));
    report.checks.push_back(make_check(
        "frac(Phi*floor(n*Phi)) < Phi - 1  iff  frac(Phi*floor(n*Phi)) < frac(n*Phi)",
        merged[kFracThreshold]));
    report.checks.push_back(make_check(
        "a(a(n) - n) == a(a(n) - 1) - a(n) + 1 with a(n) = floor(n*Phi), a(0) = 0",
        merged[kRecursionPlus]));
    report.checks.push_back(make_check(
        "frac(floor(n*Phi)*Phi) == (1 - Phi)*frac(n*Phi) + 1", merged[kFracAffine]));
    report.checks.push_back(make_check(
        "floor(floor(n*Phi)*Phi) == floor(n*Phi) + n - 1", merged[kShiftByN]));
    report.recursion_plus = report.checks[kRecursionPlus];
    report.recursion_minus = make_check(
        "a(a(n) - n) == a(a(n) - 1) - a(n) - 1 with a(n) = floor(n*Phi), a(0) = 0",
        merged[kRecursionMinus]);
    report.all_hold = true;
    for (const auto& c : report.checks) report.all_hold = report.all_hold && c.holds;
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::string out;
    const std::string range = "n = 1.." + std::to_string(report.n_max);
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const IdentityCheck& c = report.checks[i];
        out += c.name + " : ";
        if (c.holds) {
            out += "PASS (" + range;
            if (i == kRecursionPlus && report.recursion_minus.first_counterexample >= 0) {
                out += "; sign variant with '- 1' fails at n = " +
                       std::to_string(report.recursion_minus.first_counterexample) + ": " +
                       report.recursion_minus.note;
            }
            out += ")";
        } else {
            out += "FAIL (first counterexample n = " + std::to_string(c.first_counterexample) +
                   ", " + std::to_string(c.counterexamples) + " in range; " + c.note + ")";
        }
        out += '\n';
    }
    return out;
}

}  // namespace stdform
