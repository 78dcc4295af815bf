#include <stdexcept>
#include "doctest.h"
#include "rarebit/digits.hpp"
#include "rarebit/moc.hpp"
#include "rarebit/witness.hpp"

using namespace rarebit;

namespace {

IntPolynomial poly(std::string_view lit) { return IntPolynomial::parse(lit); }

}  // namespace

TEST_CASE("thue-morse witness closed forms") {
    TMWitness sq = tm_witness(poly("0,0,1"));
    CHECK(sq.z == BigNat(2));
    CHECK(sq.lambda == 1);
    CHECK(sq.y == BigNat(2));
    CHECK(sq.r == 1);

    TMWitness sqx = tm_witness(poly("0,1,1"));
    CHECK(sqx.z == BigNat(3));
    CHECK(sqx.lambda == 1);
    CHECK(sqx.y == BigNat(2));
    CHECK(sqx.r == 1);

    TMWitness cube = tm_witness(poly("0,0,0,1"));
    CHECK(cube.z == BigNat(3));
    CHECK(cube.lambda == 1);
    CHECK(cube.y == BigNat(2));
    CHECK(cube.r == 2);

    CHECK_THROWS_AS(tm_witness(poly("0,0,2")), std::invalid_argument);
    CHECK_THROWS_AS(tm_witness(poly("0,1")), std::invalid_argument);
    CHECK_THROWS_AS(tm_witness(poly("-1,0,1")), std::invalid_argument);
}

TEST_CASE("witness carry identities") {
    for (auto lit : {"0,0,1", "0,1,1", "0,0,0,1", "1,2,0,1"}) {
        IntPolynomial p = poly(lit);
        TMWitness w = tm_witness(p);
        // 2^lambda <= z < 2^(lambda+1)
        CHECK(BigNat::power_of_two(w.lambda) <= w.z);
        CHECK(w.z < BigNat::power_of_two(w.lambda + 1));
        BigNat yd = w.y.pow(p.degree());
        // adding z under the top bit flips the parity; shifting z up to the
        // top bit position cancels the flip
        CHECK(thue_morse(yd + w.z) == (1 + thue_morse(w.z)) % 2);
        CHECK(thue_morse(yd + (w.z << w.r)) == thue_morse(w.z));
    }
}

TEST_CASE("stable separating level") {
    TMWitness w = tm_witness(poly("0,0,1"));
    CHECK(w.l0 == 3);  // l = 1 separates by accident, l = 2 does not
    CHECK(verify_tm_witness(poly("0,0,1"), w, 1));
    CHECK(!verify_tm_witness(poly("0,0,1"), w, 2));
    for (std::uint64_t l = w.l0; l <= w.l0 + 5; ++l)
        CHECK(verify_tm_witness(poly("0,0,1"), w, l));

    TMWitness cube = tm_witness(poly("0,0,0,1"));
    for (std::uint64_t l = cube.l0; l <= cube.l0 + 4; ++l)
        CHECK(verify_tm_witness(poly("0,0,0,1"), cube, l));
}

TEST_CASE("noninterference inside the admissible range") {
    IntPolynomial sq = poly("0,0,1");
    CHECK(verify_noninterference(sq, 10, BigNat(1), 3, 1));
    BigNat range = admissible_range(sq, 10, 1);
    CHECK(range == BigNat(362));  // largest n with 8 n^2 < 2^20
    for (std::uint64_t r : {1u, 2u, 3u}) {
        for (BigNat n(1); n <= range; n += BigNat(1))
            CHECK(verify_noninterference(sq, 10, n, r, 1));
    }
    CHECK_THROWS_AS(verify_noninterference(sq, 10, BigNat(0), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_noninterference(sq, 10, range + BigNat(1), 1, 1),
                    std::invalid_argument);

    IntPolynomial sqx = poly("0,1,1");
    CHECK(verify_noninterference(sqx, 12, BigNat(5), 2, 2));
}

TEST_CASE("pattern witness search") {
    IntPolynomial sq = poly("0,0,1");
    PatternWitness w = pattern_witness(sq, 2);
    CHECK(w.y == (w.a << (3 * w.u)) + (w.a << (2 * w.u)) - BigNat::power_of_two(w.u) + w.a);
    // the carried 1-run dominates both the pattern and z
    CHECK(w.run_length > std::max<std::uint64_t>(w.z.bit_length(), w.k));
    PatternSpec ones2 = PatternSpec::all_ones(2);
    BigNat yd = w.y.pow(sq.degree());
    std::uint64_t flip = count_pattern(yd + (w.z << w.s), ones2);
    std::uint64_t split = count_pattern(yd, ones2) + count_pattern(w.z, ones2);
    CHECK(flip % 2 == (split + 1) % 2);
    // interior run visible in the binary expansion of y^d
    bool found = false;
    for (const BitRun& run : bit_runs(yd))
        if (run.len == w.run_length) found = true;
    CHECK(found);
    for (std::uint64_t l = w.l0; l <= w.l0 + 2; ++l) CHECK(verify_pattern_witness(sq, w, l));

    CHECK_THROWS_AS(pattern_witness(sq, 1), std::invalid_argument);

    PatternWitness w3 = pattern_witness(poly("0,1,1"), 3);
    CHECK(verify_pattern_witness(poly("0,1,1"), w3, w3.l0));
    CHECK(verify_pattern_witness(poly("0,1,1"), w3, w3.l0 + 1));
}

TEST_CASE("witness search across a polynomial battery") {
    // degrees 2..4, z from 2 to 32 (including a power of two, where the
    // leading 1-run of z has length 1)
    for (auto lit : {"0,5,1", "9,3,7,1", "0,1,0,0,1", "3,0,0,1", "1,1,1,1", "12,30,1", "7,0,1"}) {
        IntPolynomial p = poly(lit);
        TMWitness w = tm_witness(p);
        for (std::uint64_t l = w.l0; l <= w.l0 + 6; ++l) CHECK(verify_tm_witness(p, w, l));
        for (std::uint32_t k : {2u, 3u}) {
            PatternWitness pw = pattern_witness(p, k);
            CHECK(pw.run_length > std::max<std::uint64_t>(pw.z.bit_length(), k));
            for (std::uint64_t l = pw.l0; l <= pw.l0 + 2; ++l)
                CHECK(verify_pattern_witness(p, pw, l));
        }
    }
}

TEST_CASE("small seeds fail before the carry run forms") {
    // at u = 1 with the smallest seed the borrow has not built an interior
    // run that dominates z and the pattern, so the grid point is rejected
    IntPolynomial sq = poly("0,0,1");
    BigNat z = z_constant(sq);
    BigNat a(2);
    BigNat tiny = (a << 3) + (a << 2) - BigNat::power_of_two(1) + a;
    BigNat tiny_d = tiny.pow(sq.degree());
    std::uint64_t longest = 0;
    for (const BitRun& run : bit_runs(tiny_d)) longest = std::max(longest, run.len);
    CHECK(longest <= std::max<std::uint64_t>(z.bit_length(), 2));
}

TEST_CASE("bound certificates") {
    IntPolynomial sq = poly("0,0,1");
    BoundCertificate cert = bound_certificate(sq, 1, 1 << 16);
    CHECK(cert.level == 7);
    CHECK(cert.bound == 46);  // ceil(2^7 / (2 sqrt 2))
    CHECK(cert.checks.separation_lhs != cert.checks.separation_rhs);

    Sequence tsq = generate_prefix(GeneratorDescriptor::thue_morse().along(sq), 1 << 16);
    CHECK(moc_fast(tsq, 1 << 16).complexity >= cert.bound);

    // refusal below the smallest usable level (needs N > 1 + y*2 + 2^(d+r))
    CHECK_THROWS_AS(bound_certificate(sq, 1, 8), CertificateRefused);
    // just above it, a sound minimal certificate is still issued
    BoundCertificate tiny = bound_certificate(sq, 1, 16);
    CHECK(tiny.level == 1);
    CHECK(tiny.bound == 1);

    // descriptor entry point and serialization
    GeneratorDescriptor g = GeneratorDescriptor::thue_morse().along(sq);
    BoundCertificate via_g = bound_certificate(g, 1 << 16);
    CHECK(via_g.bound == cert.bound);
    std::string text = cert.to_text();
    CHECK(text.find("rarebit-certificate v1") == 0);
    CHECK(text.find("bound: 46") != std::string::npos);
    CHECK(text.find("poly: 0,0,1") != std::string::npos);

    GeneratorDescriptor plain = GeneratorDescriptor::thue_morse();
    CHECK_THROWS_AS(bound_certificate(plain, 1 << 16), std::invalid_argument);
}

TEST_CASE("certified bounds scale like sqrt(N)") {
    // some fixed positive constant works across the doubling range; the
    // trough of the level oscillation for X^2 sits at bound ~ sqrt(N)/8
    IntPolynomial sq = poly("0,0,1");
    for (std::uint64_t n = 1 << 10; n <= (1 << 17); n <<= 1) {
        BoundCertificate cert = bound_certificate(sq, 1, n);
        // bound >= sqrt(N)/16, exactly: (16 bound)^2 >= N
        BigNat lhs = (BigNat(16) * BigNat(cert.bound)).pow(2);
        CHECK(lhs >= BigNat(n));
    }
}

TEST_CASE("certificate example at level 8") {
    // smallest prefix length that pushes the level to 8
    IntPolynomial sq = poly("0,0,1");
    std::uint64_t n = (1ull << 17) + 514 + 1;  // 1 + 2*2^8 + 2^17 < N
    BoundCertificate cert = bound_certificate(sq, 1, n);
    CHECK(cert.level == 8);
    CHECK(cert.bound == 91);
}
