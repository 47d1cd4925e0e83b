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

#include "stabench/code.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "stabench/gf2.h"
#include "stabench/parallel.h"

namespace stabench {

namespace {

using Rows = std::vector<std::vector<size_t>>;

constexpr const char *FAMILY_NAMES[] = {"rotated_surface", "color_hex", "color_sqoct", "iceberg",
                                        "hypercube",       "bb",        "named",       "tensor_product"};

PauliString support_pauli(size_t n, const std::vector<size_t> &support, char p) {
    PauliString out(n);
    for (size_t q : support) {
        out.set_pauli(q, p);
    }
    return out;
}

CodeInstance css_code(std::string id, CodeFamily family, std::map<std::string, std::string> params, size_t n,
                      const Rows &x_rows, const Rows &z_rows, size_t distance) {
    CodeInstance c;
    c.id = std::move(id);
    c.family = family;
    c.params = std::move(params);
    c.num_qubits = n;
    for (const auto &r : x_rows) {
        c.generators.push_back(support_pauli(n, r, 'X'));
    }
    for (const auto &r : z_rows) {
        c.generators.push_back(support_pauli(n, r, 'Z'));
    }
    c.num_logical = n - c.generators.size();
    c.distance = distance;
    return c;
}

size_t param_int(const std::map<std::string, std::string> &params, const std::string &key) {
    auto it = params.find(key);
    if (it == params.end()) {
        throw std::invalid_argument("missing code parameter '" + key + "'");
    }
    try {
        return std::stoul(it->second);
    } catch (const std::exception &) {
        throw std::invalid_argument("bad code parameter " + key + "=" + it->second);
    }
}

void require_one_of(size_t v, std::initializer_list<size_t> allowed, const std::string &what) {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
        throw std::invalid_argument("unsupported " + what + " " + std::to_string(v));
    }
}

CodeInstance rotated_surface(size_t d) {
    require_one_of(d, {3, 5, 7}, "surface code distance");
    auto q = [d](long r, long c) { return (size_t)(r * (long)d + c); };
    Rows xs, zs;
    long D = (long)d;
    for (long r = -1; r < D; r++) {
        for (long c = -1; c < D; c++) {
            std::vector<size_t> face;
            for (long dr = 0; dr < 2; dr++) {
                for (long dc = 0; dc < 2; dc++) {
                    long rr = r + dr, cc = c + dc;
                    if (rr >= 0 && rr < D && cc >= 0 && cc < D) {
                        face.push_back(q(rr, cc));
                    }
                }
            }
            bool x_type = ((r + c) % 2 + 2) % 2 == 0;
            bool top_bottom = r == -1 || r == D - 1;
            bool left_right = c == -1 || c == D - 1;
            if (face.size() == 4) {
                (x_type ? xs : zs).push_back(face);
            } else if (face.size() == 2 && x_type && top_bottom && !left_right) {
                xs.push_back(face);
            } else if (face.size() == 2 && !x_type && left_right && !top_bottom) {
                zs.push_back(face);
            }
        }
    }
    return css_code("surface_d" + std::to_string(d), CodeFamily::rotated_surface, {{"d", std::to_string(d)}}, d * d,
                    xs, zs, d);
}

// Triangular 6.6.6 patch: triangular-lattice points (i, j) with i + j <= L;
// points with (i - j) = 1 mod 3 are face centers, the rest are qubits.
CodeInstance color_hex(size_t d) {
    require_one_of(d, {3, 5, 7}, "hexagonal color code distance");
    long L = 3 * ((long)d - 1) / 2;
    std::map<std::pair<long, long>, size_t> index;
    std::vector<std::pair<long, long>> centers;
    for (long j = 0; j <= L; j++) {
        for (long i = 0; i + j <= L; i++) {
            if (((i - j) % 3 + 3) % 3 == 1) {
                centers.push_back({i, j});
            } else {
                size_t k = index.size();
                index[{i, j}] = k;
            }
        }
    }
    Rows faces;
    for (auto [i, j] : centers) {
        std::vector<size_t> face;
        const long nb[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
        for (const auto &o : nb) {
            auto it = index.find({i + o[0], j + o[1]});
            if (it != index.end()) {
                face.push_back(it->second);
            }
        }
        std::sort(face.begin(), face.end());
        faces.push_back(face);
    }
    return css_code("color_hex_d" + std::to_string(d), CodeFamily::color_hex, {{"d", std::to_string(d)}},
                    index.size(), faces, faces, d);
}

// Triangular 4.8.8 patches. Faces list qubits read row by row from the top of
// the patch; the d=7 patch extends the d=5 patch by one diagonal strip.
CodeInstance color_sqoct(size_t d) {
    require_one_of(d, {3, 5, 7}, "square-octagon color code distance");
    Rows faces;
    size_t n = 0;
    if (d == 3) {
        n = 7;
        faces = {{0, 1, 2, 3}, {1, 2, 4, 5}, {2, 3, 5, 6}};
    } else if (d == 5) {
        n = 17;
        faces = {{3, 4, 6, 7, 8, 9, 12, 13}, {6, 8, 10, 11}, {8, 11, 12, 15}, {12, 13, 15, 16},
                 {1, 2, 3, 4},               {9, 13, 14, 16}, {2, 4, 5, 7},  {0, 1, 2, 5}};
    } else {
        n = 31;
        faces = {{10, 11, 15, 16, 18, 19, 23, 24},
                 {15, 18, 21, 22},
                 {18, 22, 23, 28},
                 {23, 24, 28, 29},
                 {6, 8, 10, 11},
                 {19, 24, 25, 29},
                 {8, 11, 12, 16},
                 {12, 13, 16, 17, 19, 20, 25, 26},
                 {3, 4, 6, 7, 8, 9, 12, 13},
                 {1, 2, 3, 4},
                 {20, 26, 27, 30},
                 {9, 13, 14, 17},
                 {2, 4, 5, 7},
                 {14, 17, 20, 27},
                 {0, 1, 2, 5}};
    }
    return css_code("color_sqoct_d" + std::to_string(d), CodeFamily::color_sqoct, {{"d", std::to_string(d)}}, n,
                    faces, faces, d);
}

CodeInstance iceberg(size_t m) {
    require_one_of(m, {2, 3, 4}, "iceberg parameter m");
    std::vector<size_t> all(2 * m);
    for (size_t q = 0; q < 2 * m; q++) {
        all[q] = q;
    }
    return css_code("iceberg_m" + std::to_string(m), CodeFamily::iceberg, {{"m", std::to_string(m)}}, 2 * m, {all},
                    {all}, 2);
}

// [[6,4,2]] level-1 block with logical pairs X0Xj / ZjZ5, concatenated with
// itself at level 2 to give [[36,16,4]].
CodeInstance hypercube(size_t level) {
    require_one_of(level, {1, 2}, "hypercube level");
    std::map<std::string, std::string> params{{"l", std::to_string(level)}};
    std::string id = "hypercube_l" + std::to_string(level);
    if (level == 1) {
        std::vector<size_t> all{0, 1, 2, 3, 4, 5};
        return css_code(id, CodeFamily::hypercube, params, 6, {all}, {all}, 2);
    }
    Rows xs, zs;
    for (size_t b = 0; b < 6; b++) {
        std::vector<size_t> block;
        for (size_t q = 0; q < 6; q++) {
            block.push_back(6 * b + q);
        }
        xs.push_back(block);
        zs.push_back(block);
    }
    for (size_t j = 1; j <= 4; j++) {
        std::vector<size_t> xr, zr;
        for (size_t b = 0; b < 6; b++) {
            xr.push_back(6 * b);
            xr.push_back(6 * b + j);
            zr.push_back(6 * b + j);
            zr.push_back(6 * b + 5);
        }
        std::sort(xr.begin(), xr.end());
        std::sort(zr.begin(), zr.end());
        xs.push_back(xr);
        zs.push_back(zr);
    }
    return css_code(id, CodeFamily::hypercube, params, 36, xs, zs, 4);
}

// Bivariate bicycle codes: H_X = [A | B], H_Z = [B^T | A^T] with x, y the
// cyclic shifts on Z_l x Z_m (Bravyi et al., Nature 627, 778 (2024)).
// Redundant checks are dropped greedily in row order.
CodeInstance bivariate_bicycle(size_t n) {
    require_one_of(n, {72, 90}, "bivariate bicycle length");
    size_t l, m, d;
    std::vector<std::pair<size_t, size_t>> a, b;  // monomials x^i y^j
    if (n == 72) {
        l = 6, m = 6, d = 6;
        a = {{3, 0}, {0, 1}, {0, 2}};
        b = {{0, 3}, {1, 0}, {2, 0}};
    } else {
        l = 15, m = 3, d = 10;
        a = {{9, 0}, {0, 1}, {0, 2}};
        b = {{0, 0}, {2, 0}, {7, 0}};
    }
    size_t lm = l * m;
    auto cell = [&](size_t i, size_t j) { return (i % l) * m + (j % m); };
    // Row (i, j) of the monomial x^p y^q has a one in column (i + p, j + q).
    auto row_of = [&](const std::vector<std::pair<size_t, size_t>> &poly, size_t i, size_t j, bool transpose) {
        std::vector<size_t> cols;
        for (auto [p, q] : poly) {
            cols.push_back(transpose ? cell(i + l - p, j + m - q) : cell(i + p, j + q));
        }
        return cols;
    };
    auto select = [&](bool z_type) {
        Rows chosen;
        Gf2Basis basis(n);
        for (size_t i = 0; i < l; i++) {
            for (size_t j = 0; j < m; j++) {
                std::vector<size_t> left = row_of(z_type ? b : a, i, j, z_type);
                std::vector<size_t> right = row_of(z_type ? a : b, i, j, z_type);
                std::vector<size_t> r = left;
                for (size_t c : right) {
                    r.push_back(lm + c);
                }
                std::sort(r.begin(), r.end());
                BitVec v(num_words(n), 0);
                for (size_t c : r) {
                    bit_flip(v, c);
                }
                if (!basis.insert(v).has_value()) {
                    chosen.push_back(r);
                }
            }
        }
        return chosen;
    };
    Rows xs = select(false), zs = select(true);
    return css_code("bb_" + std::to_string(n), CodeFamily::bb, {{"n", std::to_string(n)}}, n, xs, zs, d);
}

std::vector<size_t> bits_of(uint64_t mask, size_t n) {
    std::vector<size_t> out;
    for (size_t q = 0; q < n; q++) {
        if ((mask >> q) & 1) {
            out.push_back(q);
        }
    }
    return out;
}

// Rows of the [15,11] Hamming parity check: bit a of (q + 1).
std::vector<uint64_t> hamming_rows() {
    std::vector<uint64_t> rows(4, 0);
    for (size_t q = 0; q < 15; q++) {
        for (size_t a = 0; a < 4; a++) {
            if (((q + 1) >> a) & 1) {
                rows[a] |= uint64_t{1} << q;
            }
        }
    }
    return rows;
}

CodeInstance named(const std::string &name) {
    std::map<std::string, std::string> params{{"name", name}};
    auto make = [&](size_t n, const Rows &x, const Rows &z, size_t d) {
        return css_code(name, CodeFamily::named, params, n, x, z, d);
    };
    if (name == "detector4") {
        return make(4, {{0, 1, 2, 3}}, {{0, 1, 2, 3}}, 2);
    }
    if (name == "perfect5") {
        // Laflamme et al., PRL 77, 198 (1996); cyclic shifts of XZZXI.
        CodeInstance c;
        c.id = name;
        c.family = CodeFamily::named;
        c.params = params;
        c.num_qubits = 5;
        for (const char *g : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
            c.generators.push_back(parse_pauli(g, 5));
        }
        c.num_logical = 1;
        c.distance = 3;
        return c;
    }
    if (name == "steane") {
        // Steane, Proc. R. Soc. A 452, 2551 (1996).
        Rows h{{0, 1, 2, 3}, {1, 2, 4, 5}, {2, 3, 5, 6}};
        return make(7, h, h, 3);
    }
    if (name == "shor9") {
        // Shor, PRA 52, R2493 (1995).
        Rows z{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}};
        Rows x{{0, 1, 2, 3, 4, 5}, {3, 4, 5, 6, 7, 8}};
        return make(9, x, z, 3);
    }
    if (name == "hamming15") {
        // Quantum Hamming [[15,7,3]]: CSS code of the [15,11,3] Hamming code.
        Rows h;
        for (uint64_t r : hamming_rows()) {
            h.push_back(bits_of(r, 15));
        }
        return make(15, h, h, 3);
    }
    if (name == "tetrahedral15") {
        // Quantum Reed-Muller [[15,1,3]]: X checks from RM(1,4)*, Z checks add pairwise products.
        auto rows = hamming_rows();
        Rows x, z;
        for (uint64_t r : rows) {
            x.push_back(bits_of(r, 15));
            z.push_back(bits_of(r, 15));
        }
        for (size_t a = 0; a < 4; a++) {
            for (size_t b = a + 1; b < 4; b++) {
                z.push_back(bits_of(rows[a] & rows[b], 15));
            }
        }
        return make(15, x, z, 3);
    }
    if (name == "golay23") {
        // Even-weight subcode of the cyclic [23,12,7] Golay code, generated by (1 + x) g(x)
        // with g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1.
        uint64_t g = (1ull << 11) | (1ull << 10) | (1ull << 6) | (1ull << 5) | (1ull << 4) | (1ull << 2) | 1ull;
        uint64_t h = g ^ (g << 1);
        Rows rows;
        for (size_t i = 0; i < 11; i++) {
            rows.push_back(bits_of(h << i, 23));
        }
        return make(23, rows, rows, 7);
    }
    if (name == "carbon12") {
        // [[12,2,4]] as three [[4,2,2]] blocks under an outer [[6,2,2]] code.
        // Inner logicals: X1 = XXII, Z1 = ZIZI, X2 = XIXI, Z2 = ZZII.
        const std::vector<size_t> inner_x[2] = {{0, 1}, {0, 2}};
        const std::vector<size_t> inner_z[2] = {{0, 2}, {0, 1}};
        const Rows outer = {{0, 3, 4, 5}, {0, 1, 2, 5}};
        Rows x, z;
        for (size_t b = 0; b < 3; b++) {
            x.push_back({4 * b, 4 * b + 1, 4 * b + 2, 4 * b + 3});
            z.push_back({4 * b, 4 * b + 1, 4 * b + 2, 4 * b + 3});
        }
        for (const auto &check : outer) {
            uint64_t xm = 0, zm = 0;
            for (size_t logical : check) {
                size_t block = logical / 2, which = logical % 2;
                for (size_t q : inner_x[which]) {
                    xm ^= uint64_t{1} << (4 * block + q);
                }
                for (size_t q : inner_z[which]) {
                    zm ^= uint64_t{1} << (4 * block + q);
                }
            }
            x.push_back(bits_of(xm, 12));
            z.push_back(bits_of(zm, 12));
        }
        return make(12, x, z, 4);
    }
    throw std::invalid_argument("unknown named code '" + name + "'");
}

}  // namespace

std::string_view family_name(CodeFamily f) {
    return FAMILY_NAMES[static_cast<size_t>(f)];
}

CodeFamily family_from_name(std::string_view name) {
    for (size_t k = 0; k < std::size(FAMILY_NAMES); k++) {
        if (name == FAMILY_NAMES[k]) {
            return static_cast<CodeFamily>(k);
        }
    }
    throw std::invalid_argument("unknown code family '" + std::string(name) + "'");
}

bool CodeInstance::is_css() const {
    for (const auto &g : generators) {
        bool has_x = false, has_z = false;
        for (uint64_t w : g.x_words()) {
            has_x |= w != 0;
        }
        for (uint64_t w : g.z_words()) {
            has_z |= w != 0;
        }
        if (has_x && has_z) {
            return false;
        }
    }
    return true;
}

bool CodeInstance::is_all_z() const {
    for (const auto &g : generators) {
        for (uint64_t w : g.x_words()) {
            if (w) {
                return false;
            }
        }
    }
    return true;
}

CodeInstance build_base_code(CodeFamily family, const std::map<std::string, std::string> &params) {
    switch (family) {
        case CodeFamily::rotated_surface:
            return rotated_surface(param_int(params, "d"));
        case CodeFamily::color_hex:
            return color_hex(param_int(params, "d"));
        case CodeFamily::color_sqoct:
            return color_sqoct(param_int(params, "d"));
        case CodeFamily::iceberg:
            return iceberg(param_int(params, "m"));
        case CodeFamily::hypercube:
            return hypercube(param_int(params, "l"));
        case CodeFamily::bb:
            return bivariate_bicycle(param_int(params, "n"));
        case CodeFamily::named: {
            auto it = params.find("name");
            if (it == params.end()) {
                throw std::invalid_argument("named code without a name");
            }
            return named(it->second);
        }
        default:
            throw std::invalid_argument("tensor products are not base codes");
    }
}

CodeInstance build_base_code(const BaseCodeSpec &spec) {
    return build_base_code(spec.family, spec.params);
}

std::string base_code_id(const BaseCodeSpec &spec) {
    auto get = [&](const char *k) {
        auto it = spec.params.find(k);
        if (it == spec.params.end()) {
            throw std::invalid_argument(std::string("missing code parameter '") + k + "'");
        }
        return it->second;
    };
    switch (spec.family) {
        case CodeFamily::rotated_surface:
            return "surface_d" + get("d");
        case CodeFamily::color_hex:
            return "color_hex_d" + get("d");
        case CodeFamily::color_sqoct:
            return "color_sqoct_d" + get("d");
        case CodeFamily::iceberg:
            return "iceberg_m" + get("m");
        case CodeFamily::hypercube:
            return "hypercube_l" + get("l");
        case CodeFamily::bb:
            return "bb_" + get("n");
        case CodeFamily::named:
            return get("name");
        default:
            throw std::invalid_argument("tensor products are not base codes");
    }
}

CodeInstance tensor_product(const CodeInstance &a, const CodeInstance &b) {
    if (b.num_qubits == 0) {
        return a;
    }
    if (a.num_qubits == 0) {
        return b;
    }
    CodeInstance c;
    c.id = a.id + "__" + b.id;
    c.family = CodeFamily::tensor_product;
    c.num_qubits = a.num_qubits + b.num_qubits;
    for (const auto &g : a.generators) {
        c.generators.push_back(g.extended(c.num_qubits));
    }
    for (const auto &g : b.generators) {
        c.generators.push_back(g.embedded(c.num_qubits, a.num_qubits));
    }
    c.num_logical = a.num_logical + b.num_logical;
    c.distance = std::min(a.distance, b.distance);
    c.parents = std::make_pair(a.id, b.id);
    return c;
}

ValidationReport validate_code(const CodeInstance &c) {
    ValidationReport r;
    const auto &g = c.generators;
    for (size_t i = 0; i < g.size(); i++) {
        if (g[i].num_qubits() != c.num_qubits) {
            r.lengths_consistent = false;
            r.failures.push_back("generator " + std::to_string(i) + " has " + std::to_string(g[i].num_qubits()) +
                                 " qubits, expected " + std::to_string(c.num_qubits));
        } else if (!g[i].is_hermitian()) {
            r.hermitian = false;
            r.failures.push_back("generator " + std::to_string(i) + " is not Hermitian");
        }
    }
    if (!r.lengths_consistent) {
        return r;
    }
    size_t reported = 0;
    for (size_t i = 0; i < g.size(); i++) {
        for (size_t j = i + 1; j < g.size(); j++) {
            if (!commutes(g[i], g[j])) {
                r.commuting = false;
                if (reported++ < 10) {
                    r.failures.push_back("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                         " anticommute");
                }
            }
        }
    }
    Gf2Basis basis(2 * num_words(c.num_qubits) * 64);
    for (size_t i = 0; i < g.size(); i++) {
        auto dep = basis.insert(g[i].symplectic_words());
        if (!dep.has_value()) {
            continue;
        }
        r.independent = false;
        r.failures.push_back("generator " + std::to_string(i) + " is a product of earlier generators");
        if (!r.commuting || !r.hermitian) {
            continue;
        }
        PauliString prod(c.num_qubits);
        for (size_t k = 0; k <= i; k++) {
            if (bit_get(*dep, k)) {
                prod *= g[k];
            }
        }
        if (prod.phase() != 0) {
            r.excludes_minus_identity = false;
            r.failures.push_back("a product of generators ending at " + std::to_string(i) + " equals -I");
        }
    }
    r.rank = basis.rank();
    if (r.independent && c.num_logical + g.size() != c.num_qubits) {
        r.logical_count_consistent = false;
        r.failures.push_back("n - k_i = " + std::to_string(c.num_qubits - g.size()) + " but num_logical is " +
                             std::to_string(c.num_logical));
    }
    return r;
}

namespace {

uint64_t binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    long double acc = 1;
    for (size_t i = 1; i <= k; i++) {
        acc = acc * (long double)(n - k + i) / (long double)i;
    }
    return acc > 1.8e19L ? UINT64_MAX : (uint64_t)(acc + 0.5L);
}

// Depth-first enumeration of supports of a fixed weight. Each qubit offers
// `choices` local operators with precomputed syndromes; a leaf with zero
// syndrome is handed to `is_logical`.
class SupportSearch {
   public:
    SupportSearch(size_t n, size_t choices, size_t syndrome_words, std::vector<BitVec> syndromes)
        : n_(n), choices_(choices), sw_(syndrome_words), syn_(std::move(syndromes)) {
    }

    template <typename F>
    bool search(size_t w, F &&is_logical) {
        picks_.assign(w, {0, 0});
        acc_.assign((w + 1) * sw_, 0);
        return rec(0, 0, w, is_logical);
    }

    const std::vector<std::pair<size_t, size_t>> &picks() const {
        return picks_;
    }

   private:
    size_t n_, choices_, sw_;
    std::vector<BitVec> syn_;
    std::vector<std::pair<size_t, size_t>> picks_;
    std::vector<uint64_t> acc_;

    template <typename F>
    bool rec(size_t depth, size_t start, size_t w, F &is_logical) {
        uint64_t *cur = &acc_[depth * sw_];
        if (depth == w) {
            for (size_t k = 0; k < sw_; k++) {
                if (cur[k]) {
                    return false;
                }
            }
            return is_logical(picks_);
        }
        uint64_t *next = &acc_[(depth + 1) * sw_];
        for (size_t q = start; q + (w - depth) <= n_; q++) {
            for (size_t c = 0; c < choices_; c++) {
                const BitVec &s = syn_[q * choices_ + c];
                for (size_t k = 0; k < sw_; k++) {
                    next[k] = cur[k] ^ s[k];
                }
                picks_[depth] = {q, c};
                if (rec(depth + 1, q + 1, w, is_logical)) {
                    return true;
                }
            }
        }
        return false;
    }
};

}  // namespace

std::optional<size_t> brute_force_distance(const CodeInstance &c, size_t max_weight, uint64_t budget) {
    size_t n = c.num_qubits;
    const auto &g = c.generators;
    if (n == 0 || c.num_logical == 0) {
        return std::nullopt;
    }
    max_weight = std::min(max_weight, n);
    uint64_t spent = 0;

    if (c.is_css()) {
        std::vector<const PauliString *> xg, zg;
        for (const auto &p : g) {
            bool has_x = false;
            for (uint64_t w : p.x_words()) {
                has_x |= w != 0;
            }
            (has_x ? xg : zg).push_back(&p);
        }
        // X-type logicals commute with Z checks and lie outside the X-check span; Z-type symmetrically.
        auto build = [&](const std::vector<const PauliString *> &checks, const std::vector<const PauliString *> &span,
                         bool checks_are_z) {
            size_t sw = std::max<size_t>(1, num_words(checks.size()));
            std::vector<BitVec> syn(n, BitVec(sw, 0));
            for (size_t i = 0; i < checks.size(); i++) {
                for (size_t q = 0; q < n; q++) {
                    if (checks_are_z ? checks[i]->z(q) : checks[i]->x(q)) {
                        bit_flip(syn[q], i);
                    }
                }
            }
            Gf2Basis basis(n);
            for (const auto *p : span) {
                BitVec v(num_words(n), 0);
                for (size_t q = 0; q < n; q++) {
                    if (checks_are_z ? p->x(q) : p->z(q)) {
                        bit_flip(v, q);
                    }
                }
                basis.insert(v);
            }
            return std::make_pair(SupportSearch(n, 1, sw, std::move(syn)), std::move(basis));
        };
        auto [x_search, x_span] = build(zg, xg, true);
        auto [z_search, z_span] = build(xg, zg, false);
        for (size_t w = 1; w <= max_weight; w++) {
            spent += 2 * binomial(n, w);
            if (spent > budget) {
                return std::nullopt;
            }
            auto outside = [&](const Gf2Basis &span) {
                return [&span, n](const std::vector<std::pair<size_t, size_t>> &picks) {
                    BitVec v(num_words(n), 0);
                    for (auto [q, ch] : picks) {
                        bit_flip(v, q);
                    }
                    return !span.contains(v);
                };
            };
            if (x_search.search(w, outside(x_span)) || z_search.search(w, outside(z_span))) {
                return w;
            }
        }
        return std::nullopt;
    }

    size_t sw = std::max<size_t>(1, num_words(g.size()));
    std::vector<BitVec> syn(3 * n, BitVec(sw, 0));
    const char PAULIS[3] = {'X', 'Y', 'Z'};
    for (size_t q = 0; q < n; q++) {
        for (size_t ch = 0; ch < 3; ch++) {
            auto p = PauliString::single(n, q, PAULIS[ch]);
            for (size_t i = 0; i < g.size(); i++) {
                if (!commutes(p, g[i])) {
                    bit_flip(syn[3 * q + ch], i);
                }
            }
        }
    }
    Gf2Basis span(2 * num_words(n) * 64);
    for (const auto &p : g) {
        span.insert(p.symplectic_words());
    }
    SupportSearch search(n, 3, sw, std::move(syn));
    for (size_t w = 1; w <= max_weight; w++) {
        uint64_t cost = binomial(n, w);
        for (size_t k = 0; k < w && cost < UINT64_MAX / 3; k++) {
            cost *= 3;
        }
        spent += cost;
        if (spent > budget) {
            return std::nullopt;
        }
        bool found = search.search(w, [&](const std::vector<std::pair<size_t, size_t>> &picks) {
            PauliString p(n);
            for (auto [q, ch] : picks) {
                p.set_pauli(q, PAULIS[ch]);
            }
            return !span.contains(p.symplectic_words());
        });
        if (found) {
            return w;
        }
    }
    return std::nullopt;
}

std::vector<BaseCodeSpec> default_base_codes() {
    std::vector<BaseCodeSpec> out;
    for (const char *d : {"3", "5", "7"}) {
        out.push_back({CodeFamily::rotated_surface, {{"d", d}}});
    }
    for (const char *d : {"3", "5", "7"}) {
        out.push_back({CodeFamily::color_hex, {{"d", d}}});
    }
    for (const char *d : {"3", "5", "7"}) {
        out.push_back({CodeFamily::color_sqoct, {{"d", d}}});
    }
    for (const char *m : {"2", "3", "4"}) {
        out.push_back({CodeFamily::iceberg, {{"m", m}}});
    }
    for (const char *l : {"1", "2"}) {
        out.push_back({CodeFamily::hypercube, {{"l", l}}});
    }
    for (const char *n : {"72", "90"}) {
        out.push_back({CodeFamily::bb, {{"n", n}}});
    }
    for (const char *name :
         {"perfect5", "steane", "hamming15", "golay23", "shor9", "tetrahedral15", "carbon12", "detector4"}) {
        out.push_back({CodeFamily::named, {{"name", name}}});
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> default_product_pairs(const std::vector<CodeInstance> &base,
                                                                       size_t count, size_t min_sum) {
    struct Cand {
        size_t sum, a, b;
    };
    std::vector<Cand> cands;
    for (size_t a = 0; a < base.size(); a++) {
        for (size_t b = a + 1; b < base.size(); b++) {
            size_t s = base[a].generator_count() + base[b].generator_count();
            if (s >= min_sum) {
                cands.push_back({s, a, b});
            }
        }
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand &x, const Cand &y) {
        if (x.sum != y.sum) {
            return x.sum > y.sum;
        }
        return std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b);
    });
    std::vector<std::pair<std::string, std::string>> out;
    for (size_t k = 0; k < cands.size() && out.size() < count; k++) {
        out.push_back({base[cands[k].a].id, base[cands[k].b].id});
    }
    return out;
}

SuiteManifest default_manifest() {
    SuiteManifest m;
    m.base_codes = default_base_codes();
    std::vector<CodeInstance> base;
    for (const auto &spec : m.base_codes) {
        base.push_back(build_base_code(spec));
    }
    m.product_pairs = default_product_pairs(base);
    m.declared_total_generators = 16340;
    return m;
}

const CodeInstance *Suite::find(std::string_view id) const {
    for (const auto &c : codes) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

Suite load_suite(const SuiteManifest &manifest, unsigned workers) {
    size_t nb = manifest.base_codes.size();
    size_t total = nb + manifest.product_pairs.size();
    Suite suite;
    suite.codes.resize(total);
    suite.declared_total_generators = manifest.declared_total_generators;

    std::map<std::string, size_t> index;
    for (size_t i = 0; i < nb; i++) {
        std::string id = base_code_id(manifest.base_codes[i]);
        if (!index.emplace(id, i).second) {
            throw std::invalid_argument("duplicate code id '" + id + "' in manifest");
        }
    }
    std::vector<std::pair<size_t, size_t>> pair_index;
    for (const auto &[a, b] : manifest.product_pairs) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end()) {
            throw std::invalid_argument("product pair (" + a + ", " + b + ") names an unknown base code");
        }
        std::string id = a + "__" + b;
        if (!index.emplace(id, index.size()).second) {
            throw std::invalid_argument("duplicate code id '" + id + "' in manifest");
        }
        pair_index.push_back({ia->second, ib->second});
    }

    auto check = [&](size_t i) {
        auto report = validate_code(suite.codes[i]);
        if (!report.ok()) {
            throw std::invalid_argument("code " + suite.codes[i].id + " is invalid: " + report.failures[0]);
        }
    };
    parallel_for(0, nb, workers, [&](size_t i) {
        suite.codes[i] = build_base_code(manifest.base_codes[i]);
        check(i);
    });
    parallel_for(nb, total, workers, [&](size_t i) {
        auto [a, b] = pair_index[i - nb];
        suite.codes[i] = tensor_product(suite.codes[a], suite.codes[b]);
        check(i);
    });
    for (const auto &c : suite.codes) {
        suite.total_generators += c.generator_count();
    }
    if (suite.declared_total_generators != 0 && suite.total_generators != suite.declared_total_generators) {
        suite.warnings.push_back("total generator count K = " + std::to_string(suite.total_generators) +
                                 " differs from the declared " + std::to_string(suite.declared_total_generators));
    }
    return suite;
}

}  // namespace stabench
