// Copyright 2026 The stabench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabench/pauli_string.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <ostream>
#include <stdexcept>

#include "stabench/errors.h"

namespace stabench {

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), phase_(0), xs_(num_words(num_qubits), 0), zs_(num_words(num_qubits), 0) {
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    xs_[q >> 6] = v ? (xs_[q >> 6] | m) : (xs_[q >> 6] & ~m);
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    zs_[q >> 6] = v ? (zs_[q >> 6] | m) : (zs_[q >> 6] & ~m);
}

char PauliString::pauli_at(size_t q) const {
    static constexpr char TABLE[4] = {'I', 'X', 'Z', 'Y'};
    return TABLE[x(q) + 2 * z(q)];
}

void PauliString::set_pauli(size_t q, char p) {
    switch (p) {
        case 'I':
        case '_':
            set_x(q, false);
            set_z(q, false);
            break;
        case 'X':
            set_x(q, true);
            set_z(q, false);
            break;
        case 'Y':
            set_x(q, true);
            set_z(q, true);
            break;
        case 'Z':
            set_x(q, false);
            set_z(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli: ") + p);
    }
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, char p) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    PauliString out(num_qubits);
    out.set_pauli(qubit, p);
    return out;
}

bool PauliString::is_identity_up_to_phase() const {
    for (size_t k = 0; k < xs_.size(); k++) {
        if (xs_[k] | zs_[k]) {
            return false;
        }
    }
    return true;
}

static const char *phase_prefix(uint8_t phase) {
    static constexpr const char *PREFIX[4] = {"+", "+i", "-", "-i"};
    return PREFIX[phase & 3];
}

std::string PauliString::str() const {
    std::string out = phase_prefix(phase_);
    for (size_t q = 0; q < num_qubits_; q++) {
        char c = pauli_at(q);
        out.push_back(c == 'I' ? '_' : c);
    }
    return out;
}

std::string PauliString::sparse_str() const {
    std::string out = phase_prefix(phase_);
    bool first = true;
    for (size_t q = 0; q < num_qubits_; q++) {
        char c = pauli_at(q);
        if (c == 'I') {
            continue;
        }
        if (!first) {
            out.push_back('*');
        }
        first = false;
        out.push_back(c);
        out += std::to_string(q);
    }
    if (first) {
        out.push_back('I');
    }
    return out;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Pauli length mismatch in multiply");
    }
    int delta = phase_ + rhs.phase_;
    for (size_t k = 0; k < xs_.size(); k++) {
        uint64_t x1 = xs_[k], z1 = zs_[k], x2 = rhs.xs_[k], z2 = rhs.zs_[k];
        // XY = iZ, YZ = iX, ZX = iY and their reverses.
        uint64_t pos = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t neg = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2);
        delta += std::popcount(pos) - std::popcount(neg);
        xs_[k] = x1 ^ x2;
        zs_[k] = z1 ^ z2;
    }
    phase_ = (uint8_t)(((delta % 4) + 4) % 4);
    return *this;
}

bool PauliString::operator==(const PauliString &other) const {
    return num_qubits_ == other.num_qubits_ && phase_ == other.phase_ && xs_ == other.xs_ && zs_ == other.zs_;
}

PauliString PauliString::extended(size_t num_qubits) const {
    if (num_qubits < num_qubits_) {
        throw std::invalid_argument("cannot shrink a Pauli string");
    }
    PauliString out = *this;
    out.num_qubits_ = num_qubits;
    out.xs_.resize(num_words(num_qubits), 0);
    out.zs_.resize(num_words(num_qubits), 0);
    return out;
}

PauliString PauliString::embedded(size_t num_qubits, size_t offset) const {
    if (offset + num_qubits_ > num_qubits) {
        throw std::invalid_argument("embedding does not fit");
    }
    PauliString out(num_qubits);
    out.phase_ = phase_;
    for (size_t q = 0; q < num_qubits_; q++) {
        out.set_x(q + offset, x(q));
        out.set_z(q + offset, z(q));
    }
    return out;
}

void PauliString::clear_qubit(size_t q) {
    set_x(q, false);
    set_z(q, false);
}

std::vector<uint64_t> PauliString::symplectic_words() const {
    std::vector<uint64_t> out(xs_);
    out.insert(out.end(), zs_.begin(), zs_.end());
    return out;
}

namespace {

std::string_view trim(std::string_view text, size_t &offset) {
    offset = 0;
    while (offset < text.size() && std::isspace((unsigned char)text[offset])) {
        offset++;
    }
    size_t end = text.size();
    while (end > offset && std::isspace((unsigned char)text[end - 1])) {
        end--;
    }
    return text.substr(offset, end - offset);
}

struct Literal {
    uint8_t phase = 0;
    bool sparse = false;
    std::string_view body;
    size_t body_column = 1;
};

Literal split_literal(std::string_view text) {
    size_t offset;
    std::string_view t = trim(text, offset);
    Literal lit;
    size_t k = 0;
    if (k < t.size() && (t[k] == '+' || t[k] == '-')) {
        lit.phase = t[k] == '-' ? 2 : 0;
        k++;
    }
    if (k < t.size() && t[k] == 'i') {
        lit.phase = (lit.phase + 1) & 3;
        k++;
    }
    lit.body = t.substr(k);
    lit.body_column = offset + k + 1;
    if (lit.body.empty()) {
        throw ParseError("empty Pauli literal", 0, lit.body_column);
    }
    for (char c : lit.body) {
        if (std::isdigit((unsigned char)c)) {
            lit.sparse = true;
        }
    }
    return lit;
}

struct SparseTerm {
    char pauli;
    size_t qubit;
};

std::vector<SparseTerm> parse_sparse_terms(const Literal &lit) {
    std::vector<SparseTerm> terms;
    size_t k = 0;
    std::string_view b = lit.body;
    while (true) {
        size_t col = lit.body_column + k;
        if (k >= b.size()) {
            throw ParseError("expected Pauli term", 0, col);
        }
        char p = b[k];
        if (p != 'X' && p != 'Y' && p != 'Z' && p != 'I') {
            throw ParseError(std::string("bad Pauli character '") + p + "'", 0, col);
        }
        k++;
        if (k >= b.size() || !std::isdigit((unsigned char)b[k])) {
            throw ParseError("expected qubit index", 0, lit.body_column + k);
        }
        size_t q = 0;
        while (k < b.size() && std::isdigit((unsigned char)b[k])) {
            q = q * 10 + (size_t)(b[k] - '0');
            if (q > (size_t{1} << 32)) {
                throw ParseError("qubit index too large", 0, col);
            }
            k++;
        }
        terms.push_back({p, q});
        if (k == b.size()) {
            break;
        }
        if (b[k] != '*') {
            throw ParseError(std::string("unexpected character '") + b[k] + "'", 0, lit.body_column + k);
        }
        k++;
    }
    return terms;
}

PauliString build_sparse(const Literal &lit, const std::vector<SparseTerm> &terms, size_t num_qubits) {
    PauliString out(num_qubits);
    std::vector<bool> seen(num_qubits, false);
    for (const auto &t : terms) {
        if (t.qubit >= num_qubits) {
            throw std::out_of_range(
                "qubit index " + std::to_string(t.qubit) + " out of range for " + std::to_string(num_qubits) +
                " qubits");
        }
        if (seen[t.qubit]) {
            throw ParseError("qubit " + std::to_string(t.qubit) + " appears twice", 0, 0);
        }
        seen[t.qubit] = true;
        out.set_pauli(t.qubit, t.pauli);
    }
    out.set_phase(lit.phase);
    return out;
}

PauliString build_dense(const Literal &lit, size_t num_qubits) {
    if (lit.body.size() != num_qubits) {
        throw ParseError(
            "dense Pauli has " + std::to_string(lit.body.size()) + " sites but " + std::to_string(num_qubits) +
                " qubits were expected",
            0, lit.body_column);
    }
    PauliString out(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        char c = lit.body[q];
        if (c != 'I' && c != '_' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError(std::string("bad Pauli character '") + c + "'", 0, lit.body_column + q);
        }
        out.set_pauli(q, c);
    }
    out.set_phase(lit.phase);
    return out;
}

}  // namespace

PauliString PauliString::from_text(std::string_view text, size_t num_qubits) {
    Literal lit = split_literal(text);
    if (lit.sparse) {
        return build_sparse(lit, parse_sparse_terms(lit), num_qubits);
    }
    if (lit.body == "I" && num_qubits != 1) {
        PauliString out(num_qubits);
        out.set_phase(lit.phase);
        return out;
    }
    return build_dense(lit, num_qubits);
}

PauliString PauliString::from_text(std::string_view text) {
    Literal lit = split_literal(text);
    if (lit.sparse) {
        auto terms = parse_sparse_terms(lit);
        size_t n = 0;
        for (const auto &t : terms) {
            n = std::max(n, t.qubit + 1);
        }
        return build_sparse(lit, terms, n);
    }
    return build_dense(lit, lit.body.size());
}

PauliString parse_pauli(std::string_view text, size_t num_qubits) {
    return PauliString::from_text(text, num_qubits);
}

std::string emit_pauli(const PauliString &p) {
    return p.str();
}

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli length mismatch in commutes");
    }
    auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
    uint64_t acc = 0;
    for (size_t k = 0; k < ax.size(); k++) {
        acc ^= (ax[k] & bz[k]) ^ (az[k] & bx[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    PauliString out = a;
    out *= b;
    return out;
}

PauliString operator*(const PauliString &a, const PauliString &b) {
    return multiply(a, b);
}

size_t weight(const PauliString &p) {
    size_t w = 0;
    auto xs = p.x_words(), zs = p.z_words();
    for (size_t k = 0; k < xs.size(); k++) {
        w += std::popcount(xs[k] | zs[k]);
    }
    return w;
}

size_t weight(const PauliString &p, std::span<const size_t> support) {
    size_t w = 0;
    for (size_t q : support) {
        if (q >= p.num_qubits()) {
            throw std::out_of_range("support index out of range");
        }
        w += p.x(q) || p.z(q);
    }
    return w;
}

size_t weight_prefix(const PauliString &p, size_t prefix) {
    prefix = std::min(prefix, p.num_qubits());
    size_t w = 0;
    auto xs = p.x_words(), zs = p.z_words();
    for (size_t k = 0; k * 64 < prefix; k++) {
        uint64_t m = xs[k] | zs[k];
        size_t rem = prefix - k * 64;
        if (rem < 64) {
            m &= (uint64_t{1} << rem) - 1;
        }
        w += std::popcount(m);
    }
    return w;
}

void conjugate_in_place(PauliString &p, GateKind gate, std::span<const uint32_t> targets) {
    size_t arity = gate_arity(gate);
    if (!is_unitary(gate)) {
        throw std::invalid_argument("cannot conjugate by non-unitary " + std::string(gate_name(gate)));
    }
    if (targets.size() != arity) {
        throw std::invalid_argument(std::string(gate_name(gate)) + " needs " + std::to_string(arity) + " targets");
    }
    for (uint32_t t : targets) {
        if (t >= p.num_qubits()) {
            throw std::out_of_range("gate target out of range");
        }
    }
    if (arity == 2 && targets[0] == targets[1]) {
        throw std::invalid_argument("duplicate targets for " + std::string(gate_name(gate)));
    }
    detail::conjugate_unchecked(p, gate, targets);
}

void detail::conjugate_unchecked(PauliString &p, GateKind gate, std::span<const uint32_t> targets) {
    size_t arity = targets.size();
    auto flip = [&](bool b) {
        if (b) {
            p.set_phase(p.phase() ^ 2);
        }
    };
    if (arity == 1) {
        size_t q = targets[0];
        bool x = p.x(q), z = p.z(q);
        switch (gate) {
            case GateKind::I:
                return;
            case GateKind::X:
                flip(z);
                return;
            case GateKind::Y:
                flip(x ^ z);
                return;
            case GateKind::Z:
                flip(x);
                return;
            case GateKind::H:
                flip(x && z);
                p.set_x(q, z);
                p.set_z(q, x);
                return;
            case GateKind::S:
                flip(x && z);
                p.set_z(q, z ^ x);
                return;
            case GateKind::S_DAG:
                flip(x && !z);
                p.set_z(q, z ^ x);
                return;
            default:
                break;
        }
        throw std::invalid_argument("unsupported gate");
    }
    size_t a = targets[0], b = targets[1];
    bool xa = p.x(a), za = p.z(a), xb = p.x(b), zb = p.z(b);
    switch (gate) {
        case GateKind::CX:
            flip(xa && zb && !(xb ^ za));
            p.set_x(b, xb ^ xa);
            p.set_z(a, za ^ zb);
            return;
        case GateKind::CZ:
            flip(xa && xb && (za ^ zb));
            p.set_z(a, za ^ xb);
            p.set_z(b, zb ^ xa);
            return;
        case GateKind::SWAP:
            p.set_x(a, xb);
            p.set_z(a, zb);
            p.set_x(b, xa);
            p.set_z(b, za);
            return;
        default:
            break;
    }
    throw std::invalid_argument("unsupported gate");
}

PauliString conjugate_by_gate(const PauliString &p, GateKind gate, std::span<const uint32_t> targets) {
    PauliString out = p;
    conjugate_in_place(out, gate, targets);
    return out;
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

}  // namespace stabench
