#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zkmatch/field.hpp"
#include "zkmatch/mimc.hpp"

namespace zkmatch {

/// Bilinear (R1CS-style) cost model: one constraint per constrained
/// multiplication, linear combinations free. Variable 0 is the constant-one
/// wire. Each builder also records a synthesis program so witnesses for the
/// internal wires can be derived deterministically from the inputs.

enum class VarRole { Public, Private, Internal };

enum class CircuitKind { Naive, RabinKarp, Merkle, PolyIdentity };

struct LinTerm {
    std::size_t var = 0;
    FieldElement coeff;
};
using LinComb = std::vector<LinTerm>;

struct Constraint {
    LinComb a, b, c;  // <a,w> * <b,w> = <c,w>
    std::string gadget;
};

/// One step of witness synthesis. Mul assigns out1 = <x,w> * <y,w>.
/// IsZero assigns the inverse-witness wire out1 and the flag wire out2 from
/// the input combination x. BitDecompose fills outs with the low bits of x.
struct SynthStep {
    enum class Op { Mul, IsZero, BitDecompose } op = Op::Mul;
    LinComb x, y;
    std::size_t out1 = 0, out2 = 0;
    std::vector<std::size_t> outs;
};

struct ConstraintTally {
    std::uint64_t total = 0;
    std::map<std::string, std::uint64_t> by_gadget;
};

struct ConstraintSystem {
    FieldParams field;
    CircuitKind kind = CircuitKind::Naive;
    std::vector<VarRole> roles;  // roles[0] = Public (the one wire)
    std::vector<Constraint> constraints;
    std::vector<SynthStep> steps;
    std::map<std::string, std::uint64_t> params_echo;

    std::size_t num_variables() const { return roles.size(); }
    std::size_t count_role(VarRole role) const;
    ConstraintTally tally() const;
};

struct Witness {
    std::vector<FieldElement> assignment;
    std::vector<FieldElement> public_inputs;  // public sub-vector, one wire included
};

/// Role-tagged input values. public_values / private_values follow variable
/// creation order and exclude the constant-one wire.
struct CircuitInputs {
    std::vector<FieldElement> public_values;
    std::vector<FieldElement> private_values;
};

/// Naive matcher circuit: public text bytes, private pattern bytes; per
/// offset a per-character equality gadget plus an AND chain, then a global
/// OR accumulator asserted true.
/// Closed form (range checks off): (N-T+1)*(3T-1) + (N-T) + 1.
/// With range checks, a separate byte_decompose tally line adds 9*(N+T).
ConstraintSystem build_naive_circuit(const FieldParams& field, std::size_t text_len,
                                     std::size_t pattern_len,
                                     bool include_byte_range_checks = false);
std::uint64_t naive_circuit_total(std::size_t text_len, std::size_t pattern_len,
                                  bool include_byte_range_checks = false);

/// Rabin-Karp circuit: private pattern bytes folded through T Horner steps,
/// compared against KP public window hashes. Closed form: T + 3*KP.
ConstraintSystem build_rabin_karp_circuit(const FieldParams& field,
                                          std::size_t public_hash_count,
                                          std::size_t pattern_len, FieldElement base);
std::uint64_t rabin_karp_circuit_total(std::size_t public_hash_count, std::size_t pattern_len);

/// Merkle path circuit: private leaf + siblings + direction bits, public
/// root. Closed form: d*(m*r + 3) + 1 where m = muls per MiMC round (4 for
/// the x^7 chain).
ConstraintSystem build_merkle_circuit(std::size_t depth, const MimcParams& mimc);
std::uint64_t merkle_circuit_total(std::size_t depth, const MimcParams& mimc);

/// Bezout identity circuit: private coefficient vectors for a, s, b, t,
/// evaluated by Horner at the public challenge point and asserted to satisfy
/// a(r)s(r) + b(r)t(r) = 1. Closed form: deg_a + deg_s + deg_b + deg_t + 3.
ConstraintSystem build_poly_identity_circuit(const FieldParams& field, std::size_t deg_a,
                                             std::size_t deg_s, std::size_t deg_b,
                                             std::size_t deg_t);
std::uint64_t poly_identity_circuit_total(std::size_t deg_a, std::size_t deg_s,
                                          std::size_t deg_b, std::size_t deg_t);

/// Deterministic assignment of every internal wire from the inputs. Shape
/// mismatches throw InputError. Assertions are not enforced here; a witness
/// for a non-matching input simply fails check_satisfied.
Witness synthesize_witness(const ConstraintSystem& cs, const CircuitInputs& inputs);

/// True iff every constraint holds over the field. Length mismatch is an
/// input error.
bool check_satisfied(const ConstraintSystem& cs, const Witness& w);

/// CSV header and row formatting for tally exports (the trend-plot input).
std::string tally_csv_header();
std::string tally_csv_row(const ConstraintSystem& cs, const std::string& param_name,
                          std::uint64_t param_value);

} // namespace zkmatch
