#include "aesring/cli.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "aesring/aes_core.hpp"
#include "aesring/linearized.hpp"
#include "aesring/reference_aes.hpp"
#include "aesring/ring.hpp"
#include "aesring/sbox_analysis.hpp"

namespace aesring {

namespace {

std::vector<std::uint8_t> key_from_hex(std::string_view s) {
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
    if (s.size() != 32 && s.size() != 48 && s.size() != 64)
        throw std::invalid_argument("key: expected 32, 48 or 64 hex digits");
    const auto nib = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw std::invalid_argument("key: bad hex digit");
    };
    std::vector<std::uint8_t> out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>((nib(s[2 * i]) << 4) | nib(s[2 * i + 1]));
    return out;
}

Variant parse_variant(const std::string& s) {
    if (s == "aes128") return Variant::aes128;
    if (s == "aes192") return Variant::aes192;
    if (s == "aes256") return Variant::aes256;
    throw std::invalid_argument("variant: expected aes128, aes192 or aes256");
}

// ---- published algebraic constants, used only by the verify checks ----

PermPolynomial expected_sbox_poly() {
    PermPolynomial p;
    p[254] = Gf256(0x05);
    p[253] = Gf256(0x09);
    p[251] = Gf256(0xF9);
    p[247] = Gf256(0x25);
    p[239] = Gf256(0xF4);
    p[223] = Gf256(0x01);
    p[191] = Gf256(0xB5);
    p[127] = Gf256(0x8F);
    p[0] = Gf256(0x63);
    return p;
}

constexpr std::array<std::uint8_t, 8> kLambda = {0x05, 0x09, 0xF9, 0x25, 0xF4, 0x01, 0xB5, 0x8F};
constexpr std::array<std::uint8_t, 8> kLambdaInv = {0x05, 0xFE, 0x7F, 0x5A, 0x78, 0x59, 0xDB, 0x6E};

struct Kat {
    Variant variant;
    const char* key;
    const char* plaintext;
    const char* ciphertext;
};

constexpr Kat kKats[] = {
    {Variant::aes128, "000102030405060708090a0b0c0d0e0f", "00112233445566778899aabbccddeeff",
     "69c4e0d86a7b0430d8cdb78070b4c55a"},
    {Variant::aes192, "000102030405060708090a0b0c0d0e0f1011121314151617",
     "00112233445566778899aabbccddeeff", "dda97ca4864cdfe06eaf70a0ec0d7191"},
    {Variant::aes256, "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "00112233445566778899aabbccddeeff", "8ea2b7ca516745bfeafc49904b496089"},
};

// ---- verify checks ----

using Check = std::pair<const char*, std::function<bool(std::string&)>>;

bool check_sbox_poly(std::string& detail) {
    const PermPolynomial phi = interpolate(sbox_table());
    if (!(phi == expected_sbox_poly())) {
        detail = "interpolated S-box polynomial differs from the published 9-term form";
        return false;
    }
    if (sparsity(phi) != 9) {
        detail = "sparsity " + std::to_string(sparsity(phi)) + " != 9";
        return false;
    }
    return true;
}

bool check_lambda(std::string& detail) {
    FuncTable lt;
    for (int a = 0; a < 256; ++a)
        lt[static_cast<std::size_t>(a)] = l_map(Gf256(static_cast<std::uint8_t>(a)));
    const LinearizedPoly via_normal = linearize(lt, FieldBasis::normal(Gf256(0x21)));
    const LinearizedPoly via_poly = linearize(lt);
    for (int i = 0; i < 8; ++i) {
        if (!(via_normal.lambda[static_cast<std::size_t>(i)] == Gf256(kLambda[static_cast<std::size_t>(i)]))) {
            detail = "lambda_" + std::to_string(i) + " = " +
                     to_hex(via_normal.lambda[static_cast<std::size_t>(i)]) + ", expected " +
                     to_hex(Gf256(kLambda[static_cast<std::size_t>(i)]));
            return false;
        }
    }
    if (!(via_normal == via_poly)) {
        detail = "normal-basis and polynomial-basis pipelines disagree";
        return false;
    }
    return true;
}

bool check_l_inverse(std::string& detail) {
    const LinearizedPoly li = l_inverse();
    for (int i = 0; i < 8; ++i)
        if (!(li.lambda[static_cast<std::size_t>(i)] == Gf256(kLambdaInv[static_cast<std::size_t>(i)]))) {
            detail = "coefficient of u^(2^" + std::to_string(i) + ") = " +
                     to_hex(li.lambda[static_cast<std::size_t>(i)]) + ", expected " +
                     to_hex(Gf256(kLambdaInv[static_cast<std::size_t>(i)]));
            return false;
        }
    return true;
}

bool check_psi_two_path(std::string& detail) {
    const PermPolynomial via_power = pow_mod(affine_rho(), 254);
    const PermPolynomial via_interp = interpolate(inv_sbox_table());
    if (!(via_power == via_interp)) {
        detail = "rho^254 and the interpolated inverse table disagree";
        return false;
    }
    if (!(via_power[254] == Gf256(0x05)) || !(via_power[0] == Gf256(0x52))) {
        detail = "psi spot coefficients differ (u^254: " + to_hex(via_power[254]) +
                 ", u^0: " + to_hex(via_power[0]) + ")";
        return false;
    }
    return true;
}

bool check_gamma_order(std::string& detail) {
    const RingElement g = gamma(), gi = gamma_inv();
    if (!(pow(g, 4) == RingElement::one())) {
        detail = "gamma^4 != 1";
        return false;
    }
    if (!(g * gi == RingElement::one())) {
        detail = "gamma * gamma^-1 != 1";
        return false;
    }
    if (!(pow(g, 3) == gi)) {
        detail = "gamma^3 != gamma^-1";
        return false;
    }
    return true;
}

bool check_gamma_factorizations(std::string& detail) {
    RingElement g2expect;  // z^2 x^2 + z^2 + 1
    g2expect.at(2, 0) = Gf256(0x04);
    g2expect.at(0, 0) = Gf256(0x05);
    if (!(gamma() * gamma() == g2expect)) {
        detail = "gamma^2 != z^2x^2+z^2+1";
        return false;
    }
    if (!(g2expect * gamma() == gamma_inv())) {
        detail = "(z^2x^2+z^2+1) gamma != gamma^-1";
        return false;
    }
    RingElement f1;  // z x^3 + z + 1
    f1.at(3, 0) = Gf256(0x02);
    f1.at(0, 0) = Gf256(0x03);
    RingElement f2;  // x^3 + (z^2+1) x^2 + x + z^2
    f2.at(3, 0) = Gf256(0x01);
    f2.at(2, 0) = Gf256(0x05);
    f2.at(1, 0) = Gf256(0x01);
    f2.at(0, 0) = Gf256(0x04);
    if (!(f1 * f2 == gamma_inv())) {
        detail = "(zx^3+z+1)(x^3+(z^2+1)x^2+x+z^2) != gamma^-1";
        return false;
    }
    return true;
}

bool check_basis_facts(std::string& detail) {
    const Gf256 first = find_first_primitive_normal();
    if (!(first == Gf256(0x21))) {
        detail = "first primitive normal generator is " + to_hex(first) + ", expected 0x21";
        return false;
    }
    const FieldBasis nb = FieldBasis::normal(first);
    const FieldBasis db = dual_basis(nb);
    if (!(db[0] == Gf256(0x35))) {
        detail = "dual generator is " + to_hex(db[0]) + ", expected 0x35";
        return false;
    }
    if (!(moore_matrix(nb) * moore_matrix_cols(db) == FieldMatrix8::identity())) {
        detail = "AB != I8";
        return false;
    }
    if (self_dual_primitive_normal_search(SelfDualRule::exact_generator) ||
        self_dual_primitive_normal_search(SelfDualRule::frobenius_orbit)) {
        detail = "self-dual primitive normal search unexpectedly nonempty";
        return false;
    }
    return true;
}

bool check_kat(const Kat& kat, std::string& detail) {
    const auto key = key_from_hex(kat.key);
    const Block pt = block_from_hex(kat.plaintext);
    const Block ct = block_from_hex(kat.ciphertext);

    const RoundKeySchedule ks = expand_key(key, kat.variant);
    const Block got = to_block(encrypt(from_block(pt), ks));
    if (got != ct) {
        detail = "encrypt -> " + block_to_hex(got) + ", expected " + block_to_hex(ct);
        return false;
    }
    const Block back = to_block(decrypt(from_block(ct), ks));
    if (back != pt) {
        detail = "decrypt -> " + block_to_hex(back) + ", expected " + block_to_hex(pt);
        return false;
    }
    if (refaes::ref_encrypt(pt, key) != ct || refaes::ref_decrypt(ct, key) != pt) {
        detail = "reference cipher disagrees with the published vector";
        return false;
    }
    return true;
}

bool check_differentials(Variant v, std::uint64_t seed, int count, std::string& detail) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(key_bits(v)));
    const auto next_byte = [&rng] { return static_cast<std::uint8_t>(rng() & 0xFF); };
    std::vector<std::uint8_t> key(static_cast<std::size_t>(key_bytes(v)));
    for (int n = 0; n < count; ++n) {
        for (auto& b : key) b = next_byte();
        Block m;
        for (auto& b : m) b = next_byte();

        const RoundKeySchedule ks = expand_key(key, v);
        const Block ct = to_block(encrypt(from_block(m), ks));
        const auto ref_ct = refaes::ref_encrypt(m, key);
        if (ct != ref_ct) {
            detail = "encrypt mismatch at iteration " + std::to_string(n) + ": " +
                     block_to_hex(ct) + " vs " + block_to_hex(ref_ct);
            return false;
        }
        const Block back = to_block(decrypt(from_block(ct), ks));
        if (back != m || refaes::ref_decrypt(ct, key) != m) {
            detail = "decrypt mismatch at iteration " + std::to_string(n);
            return false;
        }
    }
    return true;
}

int run_checks(const std::vector<Check>& checks, std::ostream& out) {
    bool all_ok = true;
    for (const auto& [cname, fn] : checks) {
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (ok) {
            out << "ok " << cname << "\n";
        } else {
            out << "FAIL " << cname << (detail.empty() ? "" : " (" + detail + ")") << "\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 2;
}

std::vector<Check> constant_checks() {
    return {
        {"sbox-polynomial", check_sbox_poly},
        {"lambda-vector", check_lambda},
        {"l-inverse", check_l_inverse},
        {"psi-two-path", check_psi_two_path},
        {"gamma-order", check_gamma_order},
        {"gamma-factorizations", check_gamma_factorizations},
        {"basis-facts", check_basis_facts},
    };
}

std::vector<Check> vector_checks(std::uint64_t seed) {
    std::vector<Check> checks;
    for (const Kat& kat : kKats)
        checks.emplace_back(name(kat.variant) == "AES-128"   ? "known-answer-aes128"
                            : name(kat.variant) == "AES-192" ? "known-answer-aes192"
                                                             : "known-answer-aes256",
                            [&kat](std::string& d) { return check_kat(kat, d); });
    for (const Variant v : {Variant::aes128, Variant::aes192, Variant::aes256}) {
        const char* cname = v == Variant::aes128   ? "differential-aes128"
                            : v == Variant::aes192 ? "differential-aes192"
                                                   : "differential-aes256";
        checks.emplace_back(cname,
                            [v, seed](std::string& d) { return check_differentials(v, seed, 1000, d); });
    }
    return checks;
}

// ---- subcommand actions ----

void do_encrypt(bool decrypt_mode, const std::string& variant_flag, const std::string& key_hex,
                const std::string& block_hex, std::ostream& out) {
    const auto key = key_from_hex(key_hex);
    Variant v = variant_for_key_size(key.size());
    if (!variant_flag.empty()) {
        v = parse_variant(variant_flag);
        if (key.size() != static_cast<std::size_t>(key_bytes(v)))
            throw std::invalid_argument(std::string("key length does not match ") +
                                        std::string(name(v)));
    }
    const RoundKeySchedule ks = expand_key(key, v);
    const RingElement in = from_block(block_from_hex(block_hex));
    const RingElement res = decrypt_mode ? decrypt(in, ks) : encrypt(in, ks);
    out << block_to_hex(to_block(res)) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"AES as polynomial algebra over F[x,y]/(x^4+1, y^4+1)"};
    app.require_subcommand(1);
    int rc = 0;

    // encrypt / decrypt
    std::string variant_flag, key_hex, block_hex;
    for (const bool dec : {false, true}) {
        auto* sub = app.add_subcommand(dec ? "decrypt" : "encrypt",
                                       dec ? "Decrypt one block (ECB, single block)"
                                           : "Encrypt one block (ECB, single block)");
        sub->add_option("--variant", variant_flag, "aes128, aes192 or aes256");
        sub->add_option("--key", key_hex, "key as hex (32/48/64 digits)")->required();
        sub->add_option("--block", block_hex, "block as 32 hex digits")->required();
        sub->callback([&, dec] { do_encrypt(dec, variant_flag, key_hex, block_hex, out); });
    }

    // derive
    auto* derive = app.add_subcommand("derive", "Derive the algebraic objects");
    derive->require_subcommand(1);
    derive->add_subcommand("sbox-poly", "Interpolation polynomial of the S-box")->callback([&] {
        out << to_string(interpolate(sbox_table())) << "\n";
    });
    derive->add_subcommand("inv-sbox-poly", "Interpolation polynomial of the inverse S-box")
        ->callback([&] { out << to_string(interpolate(inv_sbox_table())) << "\n"; });
    derive->add_subcommand("lambda", "Coefficients of the linearized polynomial for the inner map")
        ->callback([&] {
            FuncTable lt;
            for (int a = 0; a < 256; ++a)
                lt[static_cast<std::size_t>(a)] = l_map(Gf256(static_cast<std::uint8_t>(a)));
            const LinearizedPoly lp = linearize(lt, FieldBasis::normal(Gf256(0x21)));
            for (int i = 0; i < 8; ++i)
                out << "lambda_" << i << " = " << to_poly(lp.lambda[static_cast<std::size_t>(i)])
                    << " (" << to_hex(lp.lambda[static_cast<std::size_t>(i)]) << ")\n";
        });
    derive->add_subcommand("l-inv", "Inverse of the inner linear map as a polynomial")
        ->callback([&] { out << to_string(to_permpoly(l_inverse())) << "\n"; });
    derive->add_subcommand("rho", "The affine polynomial rho(u) = L^-1(u) + z^2+1")
        ->callback([&] { out << to_string(affine_rho()) << "\n"; });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Permutation analysis of the S-box");
    analyze->require_subcommand(1);
    std::string cycle_format = "alpha";
    auto* cycles = analyze->add_subcommand("cycles", "Cycle decomposition of the S-box");
    cycles->add_option("--format", cycle_format, "alpha or hex")
        ->check(CLI::IsMember({"alpha", "hex"}));
    cycles->callback([&] {
        const CycleDecomposition d = cycle_decomposition(sbox_table());
        const bool hex = cycle_format == "hex";
        out << format_cycles(d, hex ? CycleFormat::hex : CycleFormat::alpha_power,
                             /*start_at_generator=*/!hex);
        out << "lengths:";
        for (const auto& c : d.cycles) out << " " << c.size();
        out << "\norder: " << permutation_order(d) << "\n";
    });
    analyze->add_subcommand("order", "Order of the S-box permutation")->callback([&] {
        out << permutation_order(cycle_decomposition(sbox_table())) << "\n";
    });
    int landau_n = 256;
    auto* landau = analyze->add_subcommand("landau", "Maximal element order in the symmetric group");
    landau->add_option("--n", landau_n, "number of symbols (1..256)");
    landau->callback([&] { out << landau_max_order(landau_n) << "\n"; });

    // basis
    auto* basis = app.add_subcommand("basis", "Normal and dual bases of the field");
    basis->require_subcommand(1);
    basis->add_subcommand("first-primitive-normal",
                          "First primitive normal basis generator in byte order")
        ->callback([&] {
            const Gf256 a = find_first_primitive_normal();
            out << to_hex(a) << " = " << to_poly(a) << "\n";
        });
    std::string generator = "0x21";
    auto* dual = basis->add_subcommand("dual", "Dual basis of a normal basis");
    dual->add_option("--generator", generator, "normal basis generator (hex or polynomial form)");
    dual->callback([&] {
        const FieldBasis nb = FieldBasis::normal(parse_field(generator));
        out << to_string(dual_basis(nb)) << "\n";
    });
    basis->add_subcommand("self-dual-search",
                          "Exhaustive search for a self-dual primitive normal basis")
        ->callback([&] {
            const auto exact = self_dual_primitive_normal_search(SelfDualRule::exact_generator);
            const auto orbit = self_dual_primitive_normal_search(SelfDualRule::frobenius_orbit);
            out << "exact: " << (exact ? to_hex(*exact) : "none") << "\n";
            out << "orbit: " << (orbit ? to_hex(*orbit) : "none") << "\n";
        });

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check the implementation");
    verify->require_subcommand(1);
    std::uint64_t seed = 1;
    auto* vall = verify->add_subcommand("all", "All checks");
    vall->add_option("--seed", seed, "seed for the random differential checks");
    vall->callback([&] {
        auto checks = constant_checks();
        auto vec = vector_checks(seed);
        checks.insert(checks.end(), vec.begin(), vec.end());
        rc = run_checks(checks, out);
    });
    auto* vvec = verify->add_subcommand("vectors", "Known-answer and differential checks");
    vvec->add_option("--seed", seed, "seed for the random differential checks");
    vvec->callback([&] { rc = run_checks(vector_checks(seed), out); });
    verify->add_subcommand("paper-constants", "Published algebraic constants")->callback([&] {
        rc = run_checks(constant_checks(), out);
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("aesring");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace aesring
