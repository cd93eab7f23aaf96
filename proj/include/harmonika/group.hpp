#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "types.hpp"

namespace harmonika {

/// A finite group given by its full multiplication table. Element ordering
/// is deterministic per constructor family:
///   cyclic:<n>          residues 0..n-1
///   cyclic:<n1>x<n2>... lexicographic residue tuples
///   dihedral:<n>        r^0..r^{n-1}, s, sr, ..., sr^{n-1}
///   symmetric:<n>       permutations in lexicographic one-line order
///   quaternion:8        1, i, -1, -i, j, k, -j, -k
struct GroupTable {
    std::string label;
    int order = 0;
    std::vector<std::vector<int>> mul;  // mul[a][b] = index of a*b
    std::vector<int> inv;
    int identity = 0;

    int op(int a, int b) const { return mul[a][b]; }
    int inverse(int a) const { return inv[a]; }

    bool is_abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < a; ++b)
                if (mul[a][b] != mul[b][a]) return false;
        return true;
    }
};

namespace detail {

inline std::vector<std::vector<int>> perms_lex(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline void finalize(GroupTable& g) {
    const int n = g.order;
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul[a][b] == g.identity) g.inv[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inv[a] < 0) throw SchemaError("group table has no inverse for element " + std::to_string(a));
}

inline GroupTable build_cyclic_product(const std::vector<int>& ns, const std::string& label) {
    for (int n : ns)
        if (n < 1 || n > 512) throw SchemaError("cyclic factor out of supported range [1,512]");
    int N = 1;
    for (int n : ns) N *= n;
    if (N > 4096) throw SchemaError("group order out of supported range");
    GroupTable g;
    g.label = label;
    g.order = N;
    g.identity = 0;
    // index <-> residue tuple, last factor fastest
    auto add = [&](int a, int b) {
        int out = 0, stride = 1;
        std::vector<int> digits(ns.size());
        for (int i = static_cast<int>(ns.size()) - 1; i >= 0; --i) {
            int ra = a % ns[i], rb = b % ns[i];
            a /= ns[i];
            b /= ns[i];
            digits[i] = (ra + rb) % ns[i];
        }
        for (std::size_t i = 0; i < ns.size(); ++i) {
            out = out * ns[i] + digits[i];
            (void)stride;
        }
        return out;
    };
    g.mul.assign(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) g.mul[a][b] = add(a, b);
    finalize(g);
    return g;
}

inline GroupTable build_dihedral(int n, const std::string& label) {
    if (n < 1 || n > 200) throw SchemaError("dihedral parameter out of supported range [1,200]");
    GroupTable g;
    g.label = label;
    g.order = 2 * n;
    g.identity = 0;
    // element (b,k) = s^b r^k, index = b*n + k; s r^k s = r^{-k}
    auto idx = [n](int b, int k) { return b * n + ((k % n) + n) % n; };
    g.mul.assign(2 * n, std::vector<int>(2 * n));
    for (int b1 = 0; b1 < 2; ++b1)
        for (int k1 = 0; k1 < n; ++k1)
            for (int b2 = 0; b2 < 2; ++b2)
                for (int k2 = 0; k2 < n; ++k2) {
                    int k = b2 ? (k2 - k1) : (k1 + k2);
                    g.mul[idx(b1, k1)][idx(b2, k2)] = idx(b1 ^ b2, k);
                }
    finalize(g);
    return g;
}

inline GroupTable build_symmetric(int n, const std::string& label) {
    if (n < 1 || n > 4) throw SchemaError("symmetric parameter out of supported range [1,4]");
    auto perms = perms_lex(n);
    const int N = static_cast<int>(perms.size());
    GroupTable g;
    g.label = label;
    g.order = N;
    g.identity = 0;
    auto find = [&](const std::vector<int>& p) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
    };
    g.mul.assign(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            // composition (sigma tau)(x) = sigma(tau(x))
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
            g.mul[a][b] = find(c);
        }
    finalize(g);
    return g;
}

inline GroupTable build_quaternion8(const std::string& label) {
    // units 1,i,j,k with table q[a][b] = (sign, unit)
    // order: 1, i, -1, -i, j, k, -j, -k  (i^a then j * i^a words)
    struct U {
        int s, u;
    };
    auto umul = [](int a, int b) -> U {
        // units: 0=1, 1=i, 2=j, 3=k ; i*i=-1, i*j=k, j*i=-k, etc.
        static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {
            {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
        return U{sign[a][b], unit[a][b]};
    };
    // element list in the documented order: (sign, unit)
    const std::pair<int, int> elems[8] = {{+1, 0}, {+1, 1}, {-1, 0}, {-1, 1},
                                          {+1, 2}, {+1, 3}, {-1, 2}, {-1, 3}};
    auto find = [&](int s, int u) {
        for (int t = 0; t < 8; ++t)
            if (elems[t].first == s && elems[t].second == u) return t;
        throw SchemaError("quaternion table corrupt");
    };
    GroupTable g;
    g.label = label;
    g.order = 8;
    g.identity = 0;
    g.mul.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            U p = umul(elems[a].second, elems[b].second);
            g.mul[a][b] = find(p.s * elems[a].first * elems[b].first, p.u);
        }
    finalize(g);
    return g;
}

}  // namespace detail

/// Parses a descriptor string and returns the parsed cyclic factors when the
/// group is a product of cyclics (empty otherwise).
inline std::vector<int> cyclic_factors_of(const std::string& descriptor) {
    if (descriptor.rfind("cyclic:", 0) != 0) return {};
    std::vector<int> ns;
    std::string rest = descriptor.substr(7);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        std::size_t next = rest.find('x', pos);
        std::string tok = rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw SchemaError("bad cyclic descriptor: " + descriptor);
        ns.push_back(std::stoi(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return ns;
}

/// Builds a catalog group from a descriptor:
/// cyclic:<n>, cyclic:<n1>x<n2>..., dihedral:<n>, symmetric:<n>, quaternion:8.
inline GroupTable build_group(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    if (colon == std::string::npos) throw SchemaError("bad group descriptor: " + descriptor);
    std::string kind = descriptor.substr(0, colon);
    std::string arg = descriptor.substr(colon + 1);
    if (kind == "cyclic") return detail::build_cyclic_product(cyclic_factors_of(descriptor), descriptor);
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw SchemaError("bad group descriptor: " + descriptor);
        return std::stoi(s);
    };
    if (kind == "dihedral") return detail::build_dihedral(parse_int(arg), descriptor);
    if (kind == "symmetric") return detail::build_symmetric(parse_int(arg), descriptor);
    if (kind == "quaternion") {
        if (parse_int(arg) != 8) throw SchemaError("only quaternion:8 is supported");
        return detail::build_quaternion8(descriptor);
    }
    throw SchemaError("unsupported group constructor: " + kind);
}

/// Partition of element indices into conjugacy classes, ordered by the
/// smallest element index of each class.
inline std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g) {
    std::vector<int> cls(g.order, -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < g.order; ++x) {
        if (cls[x] >= 0) continue;
        std::vector<int> c;
        int id = static_cast<int>(out.size());
        for (int h = 0; h < g.order; ++h) {
            int y = g.op(g.op(h, x), g.inv[h]);
            if (cls[y] < 0) {
                cls[y] = id;
                c.push_back(y);
            }
        }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace harmonika
