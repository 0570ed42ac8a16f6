#include "zkmatch/circuitmodel.hpp"

#include <bit>
#include <sstream>

namespace zkmatch {

namespace {

LinComb lc_var(std::size_t var, const FieldElement& coeff) {
    return {{var, coeff}};
}

LinComb lc_add(LinComb a, const LinComb& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

LinComb lc_sub(LinComb a, const LinComb& b) {
    for (const LinTerm& t : b) a.push_back({t.var, -t.coeff});
    return a;
}

FieldElement eval_lc(const LinComb& lc, const std::vector<FieldElement>& assignment,
                     const FieldParams& field) {
    FieldElement acc(0, field);
    for (const LinTerm& t : lc) {
        if (t.var >= assignment.size()) {
            throw InputError("circuit: linear combination references a missing variable");
        }
        acc += t.coeff * assignment[t.var];
    }
    return acc;
}

class Builder {
public:
    Builder(const FieldParams& field, CircuitKind kind) {
        cs_.field = field;
        cs_.kind = kind;
        cs_.roles.push_back(VarRole::Public);  // wire 0: the constant one
    }

    const FieldParams& field() const { return cs_.field; }
    FieldElement fe(std::uint64_t v) const { return FieldElement(v, cs_.field); }
    LinComb one() const { return lc_var(0, fe(1)); }
    LinComb constant(const FieldElement& c) const { return lc_var(0, c); }

    std::size_t new_var(VarRole role) {
        cs_.roles.push_back(role);
        return cs_.roles.size() - 1;
    }
    LinComb var(std::size_t v) const { return lc_var(v, fe(1)); }

    // out = <x,w> * <y,w>
    std::size_t emit_mul(const LinComb& x, const LinComb& y, const std::string& gadget) {
        std::size_t out = new_var(VarRole::Internal);
        cs_.constraints.push_back({x, y, var(out), gadget});
        SynthStep step;
        step.op = SynthStep::Op::Mul;
        step.x = x;
        step.y = y;
        step.out1 = out;
        cs_.steps.push_back(std::move(step));
        return out;
    }

    // Standard inverse-witness iszero: flag = 1 iff <d,w> = 0. Two constraints:
    // d * inv = 1 - flag, and d * flag = 0.
    std::size_t emit_iszero(const LinComb& d, const std::string& gadget) {
        std::size_t inv = new_var(VarRole::Internal);
        std::size_t flag = new_var(VarRole::Internal);
        cs_.constraints.push_back({d, var(inv), lc_sub(one(), var(flag)), gadget});
        cs_.constraints.push_back({d, var(flag), {}, gadget});
        SynthStep step;
        step.op = SynthStep::Op::IsZero;
        step.x = d;
        step.out1 = inv;
        step.out2 = flag;
        cs_.steps.push_back(std::move(step));
        return flag;
    }

    // <x,w> * 1 = <y,w>
    void emit_assert_eq(const LinComb& x, const LinComb& y, const std::string& gadget) {
        cs_.constraints.push_back({x, one(), y, gadget});
    }

    // v * (1 - v) = 0
    void emit_booleanity(std::size_t v, const std::string& gadget) {
        cs_.constraints.push_back({var(v), lc_sub(one(), var(v)), {}, gadget});
    }

    // 8 booleanity constraints plus one recomposition per byte variable.
    void emit_byte_range_check(std::size_t byte_var) {
        std::vector<std::size_t> bits;
        SynthStep step;
        step.op = SynthStep::Op::BitDecompose;
        step.x = var(byte_var);
        for (int i = 0; i < 8; ++i) {
            std::size_t b = new_var(VarRole::Internal);
            bits.push_back(b);
            step.outs.push_back(b);
        }
        cs_.steps.push_back(std::move(step));
        LinComb recomposed;
        for (int i = 0; i < 8; ++i) {
            emit_booleanity(bits[static_cast<std::size_t>(i)], "byte_decompose");
            recomposed.push_back({bits[static_cast<std::size_t>(i)], fe(std::uint64_t{1} << i)});
        }
        emit_assert_eq(recomposed, var(byte_var), "byte_decompose");
    }

    // Global OR accumulator in product form: fold none = prod(1 - b_i) one
    // wire at a time (one constraint per fold, so combinations stay small)
    // and assert the fold is zero, i.e. at least one bit is set.
    void emit_or_chain_and_assert(const std::vector<LinComb>& bits, const std::string& or_gadget,
                                  const std::string& assert_gadget) {
        LinComb acc = lc_sub(one(), bits.front());
        for (std::size_t i = 1; i < bits.size(); ++i) {
            acc = var(emit_mul(acc, lc_sub(one(), bits[i]), or_gadget));
        }
        emit_assert_eq(acc, {}, assert_gadget);
    }

    // In-circuit MiMC compression of <left,w> with key <right,w>; returns the
    // output combination. muls_per_round() constraints per round.
    LinComb emit_mimc_compress(const LinComb& left, const LinComb& right,
                               const MimcParams& mimc) {
        LinComb x = left;
        for (const FieldElement& c : mimc.round_constants) {
            LinComb t = lc_add(lc_add(x, right), constant(c));
            x = emit_pow_chain(t, mimc.exponent);
        }
        // Permutation output x + key, Miyaguchi-Preneel wrap + left + right.
        return lc_add(lc_add(lc_add(x, right), left), right);
    }

    ConstraintSystem take() { return std::move(cs_); }

private:
    ConstraintSystem cs_;

    // Square-and-multiply chain for t^e, msb-first.
    LinComb emit_pow_chain(const LinComb& t, std::uint64_t e) {
        int top = std::bit_width(e) - 1;
        LinComb cur = t;
        for (int i = top - 1; i >= 0; --i) {
            cur = var(emit_mul(cur, cur, "mimc_round"));
            if ((e >> i) & 1) {
                cur = var(emit_mul(cur, t, "mimc_round"));
            }
        }
        return cur;
    }
};

const char* kind_name(CircuitKind kind) {
    switch (kind) {
        case CircuitKind::Naive: return "naive";
        case CircuitKind::RabinKarp: return "rabin_karp";
        case CircuitKind::Merkle: return "merkle";
        case CircuitKind::PolyIdentity: return "poly_identity";
    }
    return "unknown";
}

} // namespace

std::size_t ConstraintSystem::count_role(VarRole role) const {
    std::size_t n = 0;
    for (VarRole r : roles) {
        if (r == role) ++n;
    }
    return n;
}

ConstraintTally ConstraintSystem::tally() const {
    ConstraintTally t;
    t.total = constraints.size();
    for (const Constraint& c : constraints) ++t.by_gadget[c.gadget];
    return t;
}

ConstraintSystem build_naive_circuit(const FieldParams& field, std::size_t text_len,
                                     std::size_t pattern_len, bool include_byte_range_checks) {
    if (pattern_len < 1 || pattern_len > text_len) {
        throw InputError("circuit: naive builder needs 1 <= T <= N");
    }
    Builder b(field, CircuitKind::Naive);

    std::vector<std::size_t> text_vars, pattern_vars;
    for (std::size_t i = 0; i < text_len; ++i) text_vars.push_back(b.new_var(VarRole::Public));
    for (std::size_t j = 0; j < pattern_len; ++j) pattern_vars.push_back(b.new_var(VarRole::Private));

    if (include_byte_range_checks) {
        for (std::size_t v : text_vars) b.emit_byte_range_check(v);
        for (std::size_t v : pattern_vars) b.emit_byte_range_check(v);
    }

    std::vector<LinComb> offset_matches;
    for (std::size_t i = 0; i + pattern_len <= text_len; ++i) {
        LinComb acc;
        for (std::size_t j = 0; j < pattern_len; ++j) {
            LinComb diff = lc_sub(b.var(text_vars[i + j]), b.var(pattern_vars[j]));
            std::size_t eq = b.emit_iszero(diff, "iszero");
            acc = (j == 0) ? b.var(eq) : b.var(b.emit_mul(acc, b.var(eq), "and_chain"));
        }
        offset_matches.push_back(acc);
    }
    b.emit_or_chain_and_assert(offset_matches, "or_chain", "assert_found");

    ConstraintSystem cs = b.take();
    cs.params_echo = {{"N", text_len}, {"T", pattern_len},
                      {"range_checks", include_byte_range_checks ? 1u : 0u}};
    return cs;
}

std::uint64_t naive_circuit_total(std::size_t text_len, std::size_t pattern_len,
                                  bool include_byte_range_checks) {
    std::uint64_t n = text_len, t = pattern_len;
    std::uint64_t total = (n - t + 1) * (3 * t - 1) + (n - t) + 1;
    if (include_byte_range_checks) total += 9 * (n + t);
    return total;
}

ConstraintSystem build_rabin_karp_circuit(const FieldParams& field,
                                          std::size_t public_hash_count,
                                          std::size_t pattern_len, FieldElement base) {
    if (public_hash_count < 1 || pattern_len < 1) {
        throw InputError("circuit: rabin-karp builder needs KP >= 1 and T >= 1");
    }
    Builder b(field, CircuitKind::RabinKarp);

    std::vector<std::size_t> hash_vars;
    for (std::size_t k = 0; k < public_hash_count; ++k) hash_vars.push_back(b.new_var(VarRole::Public));
    std::vector<std::size_t> pattern_vars;
    for (std::size_t j = 0; j < pattern_len; ++j) pattern_vars.push_back(b.new_var(VarRole::Private));

    // Horner fold of the pattern fingerprint, one constraint per step.
    LinComb acc;  // empty = zero
    for (std::size_t j = 0; j < pattern_len; ++j) {
        std::size_t m = b.emit_mul(acc, b.constant(base), "horner_step");
        acc = lc_add(b.var(m), b.var(pattern_vars[j]));
    }

    std::vector<LinComb> hits;
    for (std::size_t k = 0; k < public_hash_count; ++k) {
        LinComb diff = lc_sub(acc, b.var(hash_vars[k]));
        hits.push_back(b.var(b.emit_iszero(diff, "iszero")));
    }
    b.emit_or_chain_and_assert(hits, "or_chain", "assert_found");

    ConstraintSystem cs = b.take();
    cs.params_echo = {{"KP", public_hash_count}, {"T", pattern_len}, {"base", base.value()}};
    return cs;
}

std::uint64_t rabin_karp_circuit_total(std::size_t public_hash_count, std::size_t pattern_len) {
    return pattern_len + 3 * public_hash_count;
}

ConstraintSystem build_merkle_circuit(std::size_t depth, const MimcParams& mimc) {
    if (depth < 1) {
        throw InputError("circuit: merkle builder needs depth >= 1");
    }
    Builder b(mimc.field, CircuitKind::Merkle);

    std::size_t root_var = b.new_var(VarRole::Public);
    std::size_t leaf_var = b.new_var(VarRole::Private);
    std::vector<std::size_t> sibling_vars, dir_vars;
    for (std::size_t l = 0; l < depth; ++l) sibling_vars.push_back(b.new_var(VarRole::Private));
    for (std::size_t l = 0; l < depth; ++l) dir_vars.push_back(b.new_var(VarRole::Private));

    LinComb cur = b.var(leaf_var);
    for (std::size_t l = 0; l < depth; ++l) {
        LinComb dir = b.var(dir_vars[l]);
        LinComb sib = b.var(sibling_vars[l]);
        b.emit_booleanity(dir_vars[l], "booleanity");
        // dir = 0: node is the left child; dir = 1: sibling is.
        std::size_t m1 = b.emit_mul(dir, lc_sub(sib, cur), "selector");
        LinComb left = lc_add(cur, b.var(m1));
        std::size_t m2 = b.emit_mul(dir, lc_sub(cur, sib), "selector");
        LinComb right = lc_add(sib, b.var(m2));
        cur = b.emit_mimc_compress(left, right, mimc);
    }
    b.emit_assert_eq(cur, b.var(root_var), "assert_root");

    ConstraintSystem cs = b.take();
    cs.params_echo = {{"depth", depth}, {"rounds", mimc.rounds},
                      {"muls_per_round", mimc.muls_per_round()}};
    return cs;
}

std::uint64_t merkle_circuit_total(std::size_t depth, const MimcParams& mimc) {
    return depth * (static_cast<std::uint64_t>(mimc.muls_per_round()) * mimc.rounds + 3) + 1;
}

ConstraintSystem build_poly_identity_circuit(const FieldParams& field, std::size_t deg_a,
                                             std::size_t deg_s, std::size_t deg_b,
                                             std::size_t deg_t) {
    Builder b(field, CircuitKind::PolyIdentity);

    std::size_t point_var = b.new_var(VarRole::Public);
    auto coeff_vars = [&b](std::size_t deg) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i <= deg; ++i) vars.push_back(b.new_var(VarRole::Private));
        return vars;
    };
    std::vector<std::size_t> a_vars = coeff_vars(deg_a);
    std::vector<std::size_t> s_vars = coeff_vars(deg_s);
    std::vector<std::size_t> b_vars = coeff_vars(deg_b);
    std::vector<std::size_t> t_vars = coeff_vars(deg_t);

    // Horner at the public challenge point: deg genuinely bilinear steps.
    auto horner = [&](const std::vector<std::size_t>& vars) {
        LinComb acc = b.var(vars.back());
        for (std::size_t i = vars.size() - 1; i-- > 0;) {
            std::size_t m = b.emit_mul(acc, b.var(point_var), "horner_step");
            acc = lc_add(b.var(m), b.var(vars[i]));
        }
        return acc;
    };
    LinComb a_at = horner(a_vars);
    LinComb s_at = horner(s_vars);
    LinComb b_at = horner(b_vars);
    LinComb t_at = horner(t_vars);

    std::size_t as = b.emit_mul(a_at, s_at, "product");
    std::size_t bt = b.emit_mul(b_at, t_at, "product");
    b.emit_assert_eq(lc_add(b.var(as), b.var(bt)), b.one(), "assert_identity");

    ConstraintSystem cs = b.take();
    cs.params_echo = {{"deg_a", deg_a}, {"deg_s", deg_s}, {"deg_b", deg_b}, {"deg_t", deg_t}};
    return cs;
}

std::uint64_t poly_identity_circuit_total(std::size_t deg_a, std::size_t deg_s,
                                          std::size_t deg_b, std::size_t deg_t) {
    return deg_a + deg_s + deg_b + deg_t + 3;
}

Witness synthesize_witness(const ConstraintSystem& cs, const CircuitInputs& inputs) {
    std::size_t public_needed = cs.count_role(VarRole::Public) - 1;  // minus the one wire
    std::size_t private_needed = cs.count_role(VarRole::Private);
    if (inputs.public_values.size() != public_needed ||
        inputs.private_values.size() != private_needed) {
        throw InputError("circuit: input shape mismatch (need " + std::to_string(public_needed) +
                         " public and " + std::to_string(private_needed) + " private values)");
    }

    Witness w;
    w.assignment.assign(cs.num_variables(), FieldElement(0, cs.field));
    w.assignment[0] = FieldElement(1, cs.field);
    std::size_t next_public = 0, next_private = 0;
    for (std::size_t v = 1; v < cs.roles.size(); ++v) {
        if (cs.roles[v] == VarRole::Public) w.assignment[v] = inputs.public_values[next_public++];
        else if (cs.roles[v] == VarRole::Private) w.assignment[v] = inputs.private_values[next_private++];
    }

    for (const SynthStep& step : cs.steps) {
        switch (step.op) {
            case SynthStep::Op::Mul: {
                w.assignment[step.out1] = eval_lc(step.x, w.assignment, cs.field) *
                                          eval_lc(step.y, w.assignment, cs.field);
                break;
            }
            case SynthStep::Op::IsZero: {
                FieldElement v = eval_lc(step.x, w.assignment, cs.field);
                if (v.is_zero()) {
                    w.assignment[step.out1] = FieldElement(0, cs.field);
                    w.assignment[step.out2] = FieldElement(1, cs.field);
                } else {
                    w.assignment[step.out1] = v.inv();
                    w.assignment[step.out2] = FieldElement(0, cs.field);
                }
                break;
            }
            case SynthStep::Op::BitDecompose: {
                std::uint64_t v = eval_lc(step.x, w.assignment, cs.field).value();
                for (std::size_t i = 0; i < step.outs.size(); ++i) {
                    w.assignment[step.outs[i]] = FieldElement((v >> i) & 1, cs.field);
                }
                break;
            }
        }
    }

    for (std::size_t v = 0; v < cs.roles.size(); ++v) {
        if (cs.roles[v] == VarRole::Public) w.public_inputs.push_back(w.assignment[v]);
    }
    return w;
}

bool check_satisfied(const ConstraintSystem& cs, const Witness& w) {
    if (w.assignment.size() != cs.num_variables()) {
        throw InputError("circuit: witness length does not match variable count");
    }
    for (const Constraint& c : cs.constraints) {
        FieldElement lhs = eval_lc(c.a, w.assignment, cs.field) *
                           eval_lc(c.b, w.assignment, cs.field);
        if (lhs != eval_lc(c.c, w.assignment, cs.field)) return false;
    }
    return true;
}

std::string tally_csv_header() {
    return "kind,param_name,param_value,total,breakdown";
}

std::string tally_csv_row(const ConstraintSystem& cs, const std::string& param_name,
                          std::uint64_t param_value) {
    ConstraintTally t = cs.tally();
    std::ostringstream row;
    row << kind_name(cs.kind) << "," << param_name << "," << param_value << "," << t.total << ",";
    bool first = true;
    for (const auto& [gadget, count] : t.by_gadget) {
        if (!first) row << ";";
        row << gadget << "=" << count;
        first = false;
    }
    return row.str();
}

} // namespace zkmatch
